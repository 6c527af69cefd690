// Error types shared across the library.
#ifndef TERRATRI_ERRORS_HPP
#define TERRATRI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace terratri {

struct SyntaxError : std::runtime_error {
    explicit SyntaxError(const std::string& m) : std::runtime_error("SyntaxError: " + m) {}
};

struct ValidationError : std::runtime_error {
    std::string violation;
    explicit ValidationError(const std::string& v)
        : std::runtime_error("ValidationError: " + v), violation(v) {}
};

// Two segments overlap along a line where a single crossing point was expected.
struct CollinearOverlap : std::runtime_error {
    explicit CollinearOverlap(const std::string& m) : std::runtime_error("CollinearOverlap: " + m) {}
};

struct VerticalBase : std::runtime_error {
    VerticalBase() : std::runtime_error("VerticalBase: base endpoints share an x-coordinate") {}
};

struct GenerationFailed : std::runtime_error {
    explicit GenerationFailed(const std::string& m) : std::runtime_error("GenerationFailed: " + m) {}
};

struct CycleDetected : std::runtime_error {
    explicit CycleDetected(const std::string& m) : std::runtime_error("CycleDetected: " + m) {}
};

struct GeneralPositionViolation : std::runtime_error {
    explicit GeneralPositionViolation(const std::string& m)
        : std::runtime_error("GeneralPositionViolation: " + m) {}
};

// The exact maximizer of a piece objective is algebraic of degree > 1 and beats
// every rational candidate, so it cannot be reported as a rational point.
struct UnrepresentableOptimum : std::runtime_error {
    explicit UnrepresentableOptimum(const std::string& m)
        : std::runtime_error("UnrepresentableOptimum: " + m) {}
};

} // namespace terratri

#endif

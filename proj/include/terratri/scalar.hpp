// Scalar layer: exact rationals (GMP mpq) for the correctness path and plain
// doubles for the timing-only float path. Parsing of decimal literals is
// always exact: "12.375" becomes 99/8, never a rounded double.
#ifndef TERRATRI_SCALAR_HPP
#define TERRATRI_SCALAR_HPP

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <string>

#include "terratri/errors.hpp"

namespace terratri {

using Rat = mpq_class;

inline int rat_sgn(const Rat& v) { return mpq_sgn(v.get_mpq_t()); }
inline int num_sgn(double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
inline int num_sgn(const Rat& v) { return rat_sgn(v); }

inline double to_double(double v) { return v; }
inline double to_double(const Rat& v) { return v.get_d(); }

// Exact decimal parser: [+-]digits[.digits]. No exponents, no locale.
inline Rat parse_rat(const std::string& tok) {
    if (tok.empty()) throw SyntaxError("empty number");
    std::size_t i = 0;
    bool neg = false;
    if (tok[i] == '+' || tok[i] == '-') {
        neg = tok[i] == '-';
        ++i;
    }
    std::string digits;
    std::size_t frac_len = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < tok.size(); ++i) {
        char c = tok[i];
        if (c == '.') {
            if (seen_dot) throw SyntaxError("two dots in number '" + tok + "'");
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (seen_dot) ++frac_len;
            seen_digit = true;
        } else {
            throw SyntaxError("bad character in number '" + tok + "'");
        }
    }
    if (!seen_digit) throw SyntaxError("no digits in number '" + tok + "'");
    mpz_class mant(digits, 10);
    mpz_class den_z = 1;
    for (std::size_t k = 0; k < frac_len; ++k) den_z *= 10;
    Rat r(mant, den_z);
    r.canonicalize();
    if (neg) r = -r;
    return r;
}

inline std::string num_string(const Rat& v) { return v.get_num().get_str(); }
inline std::string den_string(const Rat& v) { return v.get_den().get_str(); }

// Decimal rendering with a fixed number of significant digits, for humans.
// The exact value travels next to it as num/den strings.
inline std::string approx_string(const Rat& v, int sig = 12) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", sig, v.get_d());
    return buf;
}

// Deterministic PRNG with a fixed cross-platform bit stream (splitmix64).
// std::mt19937 + std::uniform_int_distribution would not give identical
// sequences across standard libraries, and generated fixtures must not move.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t r;
        do {
            r = next();
        } while (r >= limit);
        return r % bound;
    }
    std::int64_t range(std::int64_t lo, std::int64_t hi) {  // inclusive ends
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

} // namespace terratri

#endif

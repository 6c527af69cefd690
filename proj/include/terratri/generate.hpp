// Random terrain generator for tests and benchmarks. Integer coordinates,
// deterministic for a given (n, seed, profile) triple on every platform.
#ifndef TERRATRI_GENERATE_HPP
#define TERRATRI_GENERATE_HPP

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "terratri/terrain.hpp"

namespace terratri {

enum class Profile { Uniform, Spiky, Plateau };

inline Profile parse_profile(const std::string& s) {
    if (s == "uniform") return Profile::Uniform;
    if (s == "spiky") return Profile::Spiky;
    if (s == "plateau") return Profile::Plateau;
    throw SyntaxError("unknown profile '" + s + "' (uniform|spiky|plateau)");
}

inline const char* profile_name(Profile p) {
    switch (p) {
        case Profile::Uniform: return "uniform";
        case Profile::Spiky: return "spiky";
        default: return "plateau";
    }
}

// Base spans (0,0)..(4n,0); the chain gets n-2 distinct integer x's strictly
// between. Heights live on a scale H = 64 n^2 so that random draws dodge
// collinear triples: a fixed triple is collinear with probability about 1/H,
// and there are only O(n^3) triples. Profiles:
//   uniform  independent heights in [1, H]
//   spiky    alternating low [1, H/16] and high [3H/4, H]
//   plateau  runs of 3..8 vertices near a shared level, jitter H/16
// Drawing is retried until validation passes; terrains with at most 64
// vertices must also pass the full collinearity scan, so every triple of
// vertices is affinely independent there. 64 failed attempts raise
// GenerationFailed.
inline TerrainQ generate_terrain(int n, std::uint64_t seed, Profile profile) {
    if (n < 3) throw GenerationFailed("need n >= 3, got " + std::to_string(n));
    SplitMix64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(n)));
    const std::int64_t span = 4LL * n;
    const std::int64_t H = 64LL * n * n;
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::unordered_set<std::int64_t> used;
        std::vector<std::int64_t> xs;
        xs.reserve(n - 2);
        while (static_cast<int>(xs.size()) < n - 2) {
            std::int64_t x = rng.range(1, span - 1);
            if (used.insert(x).second) xs.push_back(x);
        }
        std::sort(xs.begin(), xs.end(), std::greater<std::int64_t>());

        std::vector<std::int64_t> ys(xs.size());
        switch (profile) {
            case Profile::Uniform:
                for (auto& y : ys) y = rng.range(1, H);
                break;
            case Profile::Spiky:
                for (std::size_t k = 0; k < ys.size(); ++k)
                    ys[k] = (k % 2 == 0) ? rng.range(1, H / 16) : rng.range(3 * H / 4, H);
                break;
            case Profile::Plateau: {
                std::size_t k = 0;
                while (k < ys.size()) {
                    std::int64_t level = rng.range(H / 2, H);
                    std::size_t run = static_cast<std::size_t>(rng.range(3, 8));
                    for (std::size_t j = 0; j < run && k < ys.size(); ++j, ++k) {
                        std::int64_t y = level + rng.range(-H / 16, H / 16);
                        ys[k] = y < 1 ? 1 : y;
                    }
                }
                break;
            }
        }

        std::vector<PtQ> raw;
        raw.reserve(n);
        raw.push_back(PtQ{Rat(0), Rat(0)});
        raw.push_back(PtQ{Rat(static_cast<long>(span)), Rat(0)});
        for (std::size_t k = 0; k < xs.size(); ++k)
            raw.push_back(PtQ{Rat(static_cast<long>(xs[k])), Rat(static_cast<long>(ys[k]))});
        try {
            TerrainQ t = build_terrain(raw);
            if (n <= 64 && !validate(t, true).empty()) continue;
            return t;
        } catch (const ValidationError&) {
            continue;
        }
    }
    throw GenerationFailed("no valid terrain after 64 attempts (n=" + std::to_string(n) + ")");
}

} // namespace terratri

#endif

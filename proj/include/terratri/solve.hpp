// Top-level solver: run the boundary-apex and interior-apex searches and
// keep the larger triangle, boundary preferred on an exact area tie. The
// result carries both coordinate frames: the normal form every subroutine
// works in, and the original input frame obtained by undoing the shear
// (area is unchanged, the shear is area preserving).
#pragma once

#include <chrono>
#include <stdexcept>
#include <utility>

#include "terratri/boundary.hpp"
#include "terratri/interact.hpp"
#include "terratri/oracle.hpp"

namespace terratri {

enum class SolveCase { WholeTerrain, BoundaryApex, InteriorApex };

inline const char* solve_case_name(SolveCase c) {
    switch (c) {
        case SolveCase::WholeTerrain: return "whole_terrain";
        case SolveCase::BoundaryApex: return "boundary_apex";
        default: return "interior_apex";
    }
}

struct SolveTimings {
    double build_ms = 0;     // triangulation, trees, prolongations, pieces
    double boundary_ms = 0;
    double interior_ms = 0;
    double total_ms = 0;
};

// Instance figures for benchmarking and the n log n instrumentation.
struct SolveStats {
    std::size_t prolongations_l = 0, prolongations_r = 0;
    std::size_t pieces = 0;
    std::size_t hst_nodes = 0;
    std::size_t sum_list_sizes = 0;
};

template <class S>
struct SolveResult {
    GroundedTriangle<S> triangle;    // original input coordinates
    GroundedTriangle<S> normalized;  // normal-form coordinates
    SolveCase kind = SolveCase::WholeTerrain;
    Provenance provenance;
    SolveTimings timings;
    SolveStats stats;
};
using SolveResultQ = SolveResult<Rat>;

namespace detail {

inline GroundedTriangle<Rat> unshear(const AffineShear<Rat>& sh, const GroundedTriangle<Rat>& g) {
    GroundedTriangle<Rat> out;
    out.apex = sh.invert(g.apex);
    out.left_foot = sh.invert(g.left_foot);
    out.right_foot = sh.invert(g.right_foot);
    out.area = g.area;
    return out;
}

}  // namespace detail

// When debug_monotonicity is set, every interaction matrix of moderate size
// is run through the quartic minor check before SMAWK sees it.
inline SolveResultQ solve(const TerrainQ& t, bool debug_monotonicity = false) {
    using clock = std::chrono::steady_clock;
    auto ms_since = [](clock::time_point from) {
        return std::chrono::duration<double, std::milli>(clock::now() - from).count();
    };
    auto start = clock::now();
    SolveResultQ res;

    if (t.n() == 3) {
        GroundedTriangle<Rat> g;
        g.apex = t.vertices[2];
        g.left_foot = t.vertices[0];
        g.right_foot = t.vertices[1];
        g.area = (g.right_foot.x - g.left_foot.x) * (g.apex.y - t.base_y()) / 2;
        res.normalized = g;
        res.kind = SolveCase::WholeTerrain;
        res.provenance = WholeTerrain{};
        res.triangle = detail::unshear(t.shear, g);
        res.timings.total_ms = ms_since(start);
        return res;
    }

    auto phase = clock::now();
    Triangulation tr = triangulate(t);
    SPTree left_tree = shortest_path_tree(t, tr, 0);
    SPTree right_tree = shortest_path_tree(t, tr, 1);
    auto incidence = vertex_incidence(tr, t.n());
    auto L = forward_prolongations(t, tr, left_tree, &incidence);
    auto R = forward_prolongations(t, tr, right_tree, &incidence);
    auto pieces = boundary_pieces(t, left_tree, right_tree, L, R);
    res.stats.prolongations_l = L.size();
    res.stats.prolongations_r = R.size();
    res.stats.pieces = pieces.size();
    res.timings.build_ms = ms_since(phase);

    phase = clock::now();
    auto boundary = best_boundary_apex(t, left_tree, right_tree, pieces);
    res.timings.boundary_ms = ms_since(phase);
    if (!boundary) throw std::logic_error("boundary search produced no candidate");

    CandidateQ winner = *boundary;
    res.kind = SolveCase::BoundaryApex;

    phase = clock::now();
    if (!L.empty() && !R.empty()) {
        auto s = make_interior_search(t, std::move(L), std::move(R));
        res.stats.hst_nodes = s.hst.nodes.size();
        res.stats.sum_list_sizes = s.hst.total_list_size();
        if (debug_monotonicity)
            for (int v = 0; v < static_cast<int>(s.hst.nodes.size()); ++v)
                for (const auto& m : node_matrices(s, v))
                    if (static_cast<long>(m.oracle.rows) * m.oracle.cols <= 1024 &&
                        !is_totally_monotone(m.oracle))
                        throw std::logic_error("interaction matrix is not totally monotone");
        auto interior = best_interior_apex(s);
        if (interior && interior->triangle.area > winner.triangle.area) {
            winner = *interior;
            res.kind = SolveCase::InteriorApex;
        }
    }
    res.timings.interior_ms = ms_since(phase);

    if (!check_triangle_valid(t, winner.triangle))
        throw std::logic_error("solver produced an invalid triangle");
    res.normalized = winner.triangle;
    res.provenance = winner.provenance;
    res.triangle = detail::unshear(t.shear, winner.triangle);
    res.timings.total_ms = ms_since(start);
    return res;
}

}  // namespace terratri

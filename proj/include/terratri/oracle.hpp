#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "terratri/candidate.hpp"
#include "terratri/terrain.hpp"

namespace terratri {

enum class OracleMethod { TwoVertexLines, BoundaryDense, Combined };

template <class S>
struct OracleReport {
    Candidate<S> best;
    long long candidates_examined = 0;
    OracleMethod method = OracleMethod::Combined;
};

template <class S>
bool check_triangle_valid(const Terrain<S>& t, const GroundedTriangle<S>& tri) {
    if (tri.left_foot.y != t.base_y() || tri.right_foot.y != t.base_y()) return false;
    if (tri.left_foot.x < t.x_left() || tri.right_foot.x > t.x_right()) return false;
    if (tri.left_foot.x > tri.right_foot.x) return false;
    return segment_inside(t, DirSeg<S>{tri.left_foot, tri.apex, SegTag::Other}) &&
           segment_inside(t, DirSeg<S>{tri.right_foot, tri.apex, SegTag::Other});
}

// Largest grounded triangle with the given apex, found by scanning every
// vertex for the binding tangent slopes. A side of slope s through the apex
// clears a vertex v exactly when s is on the steep side of the apex-to-v
// slope, so the extreme feasible sides go through the tightest vertices.
template <class S>
std::optional<GroundedTriangle<S>> boundary_candidate_at(const Terrain<S>& t, const Pt<S>& apex) {
    S h = apex.y - t.base_y();
    if (num_sgn(h) <= 0) return std::nullopt;
    bool have_l = false, have_r = false;
    S sl{}, sr{};
    for (int k = 0; k < t.n(); ++k) {
        const Pt<S>& v = t.vertices[k];
        if (v.x < apex.x) {
            S s = (apex.y - v.y) / (apex.x - v.x);
            if (!have_l || s > sl) {
                sl = s;
                have_l = true;
            }
        } else if (v.x > apex.x) {
            S s = (v.y - apex.y) / (v.x - apex.x);
            if (!have_r || s < sr) {
                sr = s;
                have_r = true;
            }
        }
    }
    if (!have_l || !have_r) return std::nullopt;
    if (num_sgn(sl) <= 0 || num_sgn(sr) >= 0) return std::nullopt;
    GroundedTriangle<S> g;
    g.apex = apex;
    g.left_foot = Pt<S>{apex.x - h / sl, t.base_y()};
    g.right_foot = Pt<S>{apex.x - h / sr, t.base_y()};
    g.area = (g.right_foot.x - g.left_foot.x) * h / 2;
    return g;
}

// Exhaustive search over apexes defined by pairs of lines through two terrain
// vertices each: positive-slope lines as left sides, negative-slope lines as
// right sides. Lines whose two defining vertices cannot see each other are
// skipped; a side containing two vertices covers the segment between them, so
// such lines never carry a valid side.
template <class S>
std::optional<OracleReport<S>> oracle_interior(const Terrain<S>& t) {
    int n = t.n();
    std::vector<std::pair<int, int>> pos, neg;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            const Pt<S>& p = t.pt_by_x(a);
            const Pt<S>& q = t.pt_by_x(b);
            int sgn = num_sgn(q.y - p.y);
            if (sgn == 0) continue;
            if (!segment_inside(t, DirSeg<S>{p, q, SegTag::Other})) continue;
            (sgn > 0 ? pos : neg).emplace_back(a, b);
        }
    }
    OracleReport<S> rep;
    rep.method = OracleMethod::TwoVertexLines;
    bool found = false;
    for (int i = 0; i < static_cast<int>(pos.size()); ++i) {
        for (int j = 0; j < static_cast<int>(neg.size()); ++j) {
            ++rep.candidates_examined;
            auto g = grounded_triangle_from_lines(t, t.pt_by_x(pos[i].first), t.pt_by_x(pos[i].second),
                                                  t.pt_by_x(neg[j].first), t.pt_by_x(neg[j].second));
            if (!g) continue;
            if (!found || g->area > rep.best.triangle.area) {
                rep.best.triangle = *g;
                rep.best.provenance = InteriorApex{-1, i, j};
                found = true;
            }
        }
    }
    if (!found) return std::nullopt;
    return rep;
}

template <class S>
OracleReport<S> oracle_boundary(const Terrain<S>& t, int samples_per_edge) {
    OracleReport<S> rep;
    rep.method = OracleMethod::BoundaryDense;
    bool found = false;
    auto consider = [&](const Pt<S>& apex) {
        ++rep.candidates_examined;
        auto g = boundary_candidate_at(t, apex);
        if (!g) return;
        if (!found || g->area > rep.best.triangle.area) {
            rep.best.triangle = *g;
            rep.best.provenance = BoundaryApex{-1};
            found = true;
        }
    };
    for (int k = 0; k < t.n(); ++k) consider(t.pt_by_x(k));
    for (int k = 0; k + 1 < t.n(); ++k) {
        const Pt<S>& a = t.pt_by_x(k);
        const Pt<S>& b = t.pt_by_x(k + 1);
        for (int j = 1; j <= samples_per_edge; ++j) {
            S u = S(j) / S(samples_per_edge + 1);
            consider(Pt<S>{a.x + u * (b.x - a.x), a.y + u * (b.y - a.y)});
        }
    }
    return rep;
}

template <class S>
OracleReport<S> oracle_solve(const Terrain<S>& t, int samples_per_edge) {
    OracleReport<S> boundary = oracle_boundary(t, samples_per_edge);
    auto interior = oracle_interior(t);
    OracleReport<S> rep = boundary;
    rep.method = OracleMethod::Combined;
    if (interior) {
        rep.candidates_examined += interior->candidates_examined;
        if (interior->best.triangle.area > boundary.best.triangle.area)
            rep.best = interior->best;
    }
    return rep;
}

} // namespace terratri

// Apex-on-boundary search. While the apex slides along one upper-boundary
// edge, each side of the triangle pivots around a tangent vertex of the
// terrain. The tangent only changes where a forward prolongation meets the
// edge, so splitting every edge at those hits gives pieces on which the area
// is a fixed rational function of the apex parameter.
#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "terratri/candidate.hpp"
#include "terratri/errors.hpp"
#include "terratri/poly.hpp"
#include "terratri/spt.hpp"

namespace terratri {

// Maximal sub-interval of an upper-boundary edge with fixed tangents. The
// edge runs left to right from pt_by_x(edge) to pt_by_x(edge + 1); t covers
// the whole edge, so 0 <= t0 < t1 <= 1.
template <class S>
struct BoundaryPiece {
    int id = -1;
    int edge = -1;
    S t0{}, t1{};
    int w_left = -1, w_right = -1;  // tangent vertex indices
};

// Cuts every edge at the far endpoints of the forward prolongations and
// assigns both tangent vertices to each piece.
//
// The tangents come from two sweeps. Walking left to right, a stack holds the
// geodesic from B_l to the current vertex; entering a vertex pops back to its
// tree parent and pushes the vertex. For a piece midpoint m the left tangent
// is found by walking down from the stack top while the turn
// (stack[j-1], stack[j], m) is clockwise, without mutating the stack: the
// same prefix serves every piece of the edge. The right sweep mirrors this
// from B_r with the opposite turn sense.
template <class S>
std::vector<BoundaryPiece<S>> boundary_pieces(const Terrain<S>& t, const SPTree& left_tree,
                                              const SPTree& right_tree,
                                              const std::vector<Prolongation<S>>& L,
                                              const std::vector<Prolongation<S>>& R) {
    int n = t.n();
    int edges = n - 1;
    std::vector<std::vector<S>> cuts(edges);
    auto add_hit = [&](const Pt<S>& h) {
        int lo = 0, hi = n - 1;
        while (hi - lo > 1) {
            int mid = (lo + hi) / 2;
            if (t.pt_by_x(mid).x <= h.x)
                lo = mid;
            else
                hi = mid;
        }
        const Pt<S>& a = t.pt_by_x(lo);
        const Pt<S>& b = t.pt_by_x(hi);
        if (h.x == a.x || h.x == b.x) return;  // vertex hit; vertices already bound pieces
        cuts[lo].push_back((h.x - a.x) / (b.x - a.x));
    };
    for (const auto& pr : L) add_hit(pr.segment.dst);
    for (const auto& pr : R) add_hit(pr.segment.dst);

    std::vector<BoundaryPiece<S>> pieces;
    std::vector<std::pair<int, int>> span(edges);  // piece index range per edge
    for (int e = 0; e < edges; ++e) {
        auto& c = cuts[e];
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        int first = static_cast<int>(pieces.size());
        S prev(0);
        for (const S& cut : c) {
            pieces.push_back(BoundaryPiece<S>{static_cast<int>(pieces.size()), e, prev, cut, -1, -1});
            prev = cut;
        }
        pieces.push_back(BoundaryPiece<S>{static_cast<int>(pieces.size()), e, prev, S(1), -1, -1});
        span[e] = {first, static_cast<int>(pieces.size())};
    }

    auto midpoint = [&](const BoundaryPiece<S>& pc) {
        const Pt<S>& a = t.pt_by_x(pc.edge);
        const Pt<S>& b = t.pt_by_x(pc.edge + 1);
        S tm = (pc.t0 + pc.t1) / 2;
        return Pt<S>{a.x + tm * (b.x - a.x), a.y + tm * (b.y - a.y)};
    };

    std::vector<int> stack{0};
    for (int e = 0; e < edges; ++e) {
        for (int pi = span[e].first; pi < span[e].second; ++pi) {
            Pt<S> m = midpoint(pieces[pi]);
            std::size_t j = stack.size() - 1;
            while (j > 0 && orient(t.vertices[stack[j - 1]], t.vertices[stack[j]], m) < 0) --j;
            pieces[pi].w_left = stack[j];
        }
        int v = t.by_x(e + 1);
        if (v == 1) break;
        while (!stack.empty() && stack.back() != left_tree.parent[v]) stack.pop_back();
        if (stack.empty()) throw GeneralPositionViolation("tangent sweep lost the tree parent");
        stack.push_back(v);
    }

    stack.assign(1, 1);
    for (int e = edges - 1; e >= 0; --e) {
        for (int pi = span[e].second - 1; pi >= span[e].first; --pi) {
            Pt<S> m = midpoint(pieces[pi]);
            std::size_t j = stack.size() - 1;
            while (j > 0 && orient(t.vertices[stack[j - 1]], t.vertices[stack[j]], m) > 0) --j;
            pieces[pi].w_right = stack[j];
        }
        int v = t.by_x(e);
        if (v == 0) break;
        while (!stack.empty() && stack.back() != right_tree.parent[v]) stack.pop_back();
        if (stack.empty()) throw GeneralPositionViolation("tangent sweep lost the tree parent");
        stack.push_back(v);
    }
    return pieces;
}

namespace detail {

// Where the line through tangent w and apex p crosses the base line.
template <class S>
S tangent_foot(const Terrain<S>& t, const Pt<S>& w, const Pt<S>& p) {
    return w.x + (t.base_y() - w.y) * (p.x - w.x) / (p.y - w.y);
}

}  // namespace detail

// Largest triangle whose apex sits exactly on vertex v: both sides lean on
// the geodesic parents, whose feet land on the base by the prolongation
// containment argument.
template <class S>
GroundedTriangle<S> vertex_apex_triangle(const Terrain<S>& t, const SPTree& left_tree,
                                         const SPTree& right_tree, int v) {
    const Pt<S>& p = t.vertices[v];
    const Pt<S>& wl = t.vertices[left_tree.parent[v]];
    const Pt<S>& wr = t.vertices[right_tree.parent[v]];
    S lf = detail::tangent_foot(t, wl, p);
    S rf = detail::tangent_foot(t, wr, p);
    S area = (rf - lf) * (p.y - t.base_y()) / 2;
    return GroundedTriangle<S>{p, Pt<S>{lf, t.base_y()}, Pt<S>{rf, t.base_y()}, area};
}

// Maximizes the area over one piece. With p(t) on the carrier edge and both
// feet linear-fractional in t, the area is N(t) / (2 D_l(t) D_r(t)) where
// every factor has degree at most one in the denominator and N has degree at
// most three. Endpoints are evaluated directly; a vanishing denominator there
// means the apex reached its own tangent vertex, and the stronger vertex-apex
// candidate already covers that spot. Interior critical points are isolated
// with Sturm sequences; one that beats the piece's endpoint candidates but
// has no rational coordinate cannot be reported exactly and raises
// UnrepresentableOptimum.
inline std::optional<CandidateQ> best_apex_on_piece(const Terrain<Rat>& t,
                                                    const BoundaryPiece<Rat>& pc) {
    const Pt<Rat>& a = t.pt_by_x(pc.edge);
    const Pt<Rat>& b = t.pt_by_x(pc.edge + 1);
    const Pt<Rat>& wl = t.vertices[pc.w_left];
    const Pt<Rat>& wr = t.vertices[pc.w_right];
    const Rat& base = t.base_y();

    Poly px{a.x, b.x - a.x};
    Poly py{a.y, b.y - a.y};
    Poly h = p_sub(py, Poly{base});
    auto side = [&](const Pt<Rat>& w) {
        Poly den = p_sub(py, Poly{w.y});
        Poly num = p_add(p_scale(den, w.x), p_scale(p_sub(px, Poly{w.x}), base - w.y));
        return std::pair<Poly, Poly>{std::move(num), std::move(den)};
    };
    auto [nl, dl] = side(wl);
    auto [nr, dr] = side(wr);
    Poly num = p_mul(h, p_sub(p_mul(nr, dl), p_mul(nl, dr)));
    Poly den = p_scale(p_mul(dl, dr), Rat(2));

    std::optional<CandidateQ> best;
    auto consider_at = [&](const Rat& tt) {
        Rat dlv = p_eval(dl, tt);
        Rat drv = p_eval(dr, tt);
        if (num_sgn(dlv) == 0 || num_sgn(drv) == 0) return;
        Pt<Rat> p{a.x + tt * (b.x - a.x), a.y + tt * (b.y - a.y)};
        GroundedTriangle<Rat> tri{p, Pt<Rat>{p_eval(nl, tt) / dlv, base},
                                  Pt<Rat>{p_eval(nr, tt) / drv, base},
                                  p_eval(num, tt) / p_eval(den, tt)};
        if (!best || tri_prefers(tri, best->triangle)) best = CandidateQ{tri, BoundaryApex{pc.id}};
    };
    consider_at(pc.t0);
    consider_at(pc.t1);

    Poly d = p_sub(p_mul(p_deriv(num), den), p_mul(num, p_deriv(den)));
    IsolatedRoots iso = isolate_roots(d, pc.t0, pc.t1);
    for (const RootBracket& br : iso.roots) {
        if (br.exact) {
            consider_at(br.root);
            continue;
        }
        Poly cmp = best ? p_sub(num, p_scale(den, best->triangle.area)) : num;
        if (sign_at_root(iso.p, br, cmp) > 0)
            throw UnrepresentableOptimum("piece optimum has no rational coordinates");
    }
    return best;
}

// Best boundary-apex candidate overall: every chain vertex as a degenerate
// piece, then every proper piece.
inline std::optional<CandidateQ> best_boundary_apex(const Terrain<Rat>& t, const SPTree& left_tree,
                                                    const SPTree& right_tree,
                                                    const std::vector<BoundaryPiece<Rat>>& pieces) {
    std::optional<CandidateQ> best;
    auto consider = [&](std::optional<CandidateQ> cand) {
        if (!cand) return;
        if (!best || tri_prefers(cand->triangle, best->triangle)) best = std::move(cand);
    };
    for (int v = 2; v < t.n(); ++v)
        consider(CandidateQ{vertex_apex_triangle(t, left_tree, right_tree, v), BoundaryApex{-1}});
    for (const auto& pc : pieces) consider(best_apex_on_piece(t, pc));
    return best;
}

inline std::optional<CandidateQ> best_boundary_apex(const Terrain<Rat>& t) {
    Triangulation tr = triangulate(t);
    SPTree left_tree = shortest_path_tree(t, tr, 0);
    SPTree right_tree = shortest_path_tree(t, tr, 1);
    auto incidence = vertex_incidence(tr, t.n());
    auto L = forward_prolongations(t, tr, left_tree, &incidence);
    auto R = forward_prolongations(t, tr, right_tree, &incidence);
    auto pieces = boundary_pieces(t, left_tree, right_tree, L, R);
    return best_boundary_apex(t, left_tree, right_tree, pieces);
}

}  // namespace terratri

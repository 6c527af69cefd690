// Apex-in-interior search. A candidate apex is a crossing of one left and
// one right prolongation; each crossing pair is charged to exactly one node
// of the hereditary segment tree over the prolongations' x-extents. Within a
// node the charged pairs fill at most three implicit matrices whose entries
// compare with an exact infinitesimal, each totally monotone, so SMAWK reads
// off every row maximum. Pairs that merely touch in a shared endpoint never
// enter a matrix; they are picked up per leaf instead.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "terratri/candidate.hpp"
#include "terratri/hst.hpp"
#include "terratri/smawk.hpp"
#include "terratri/spt.hpp"

namespace terratri {

namespace detail {

template <class S>
S seg_y(const DirSeg<S>& g, const S& x) {
    return g.src.y + (x - g.src.x) * (g.dst.y - g.src.y) / (g.dst.x - g.src.x);
}

// Intersection of the two carrier lines; slopes have opposite signs, so it
// exists and is unique.
template <class S>
Pt<S> line_cross(const DirSeg<S>& a, const DirSeg<S>& b) {
    Pt<S> d1{a.dst.x - a.src.x, a.dst.y - a.src.y};
    Pt<S> d2{b.dst.x - b.src.x, b.dst.y - b.src.y};
    S den = d1.x * d2.y - d1.y * d2.x;
    S s = ((b.src.x - a.src.x) * d2.y - (b.src.y - a.src.y) * d2.x) / den;
    return Pt<S>{a.src.x + s * d1.x, a.src.y + s * d1.y};
}

}  // namespace detail

template <class S>
struct InteriorSearch {
    const Terrain<S>* t = nullptr;
    std::vector<Prolongation<S>> L, R;
    std::vector<DirSeg<S>> ls, rs;  // segment geometry, same indexing as L / R
    Hst<S> hst;
    SegmentOrder order_l, order_r;
    // Pairs sharing an exact endpoint, grouped by the leaf whose interval
    // contains the shared point.
    std::vector<std::vector<std::pair<int, int>>> rescue;

    S y_l(int id, const S& x) const { return detail::seg_y(ls[id], x); }
    S y_r(int id, const S& x) const { return detail::seg_y(rs[id], x); }
};

namespace detail {

// Is r above l at the left wall x = lo? Exact height ties count as above
// only when both segments continue through the wall: then the crossing sits
// at x = lo itself, which belongs to this strip. A tie at a segment endpoint
// is a touch, not a crossing.
template <class S>
bool r_above_at_left(const InteriorSearch<S>& s, int l, int r, const S& lo) {
    S yl = s.y_l(l, lo), yr = s.y_r(r, lo);
    if (yl != yr) return yr > yl;
    return s.ls[l].src.x < lo && s.rs[r].dst.x < lo;
}

// The pair crosses strictly inside [lo, hi): r starts above l and ends
// strictly below. A coincidence at x = hi belongs to the strip on the right.
template <class S>
bool pair_charged(const InteriorSearch<S>& s, int l, int r, const S& lo, const S& hi) {
    return r_above_at_left(s, l, r, lo) && s.y_l(l, hi) > s.y_r(r, hi);
}

}  // namespace detail

// The triangle pinned by a crossing (or touching) pair: apex at the common
// point of the carrier lines, feet where those lines meet the base.
template <class S>
GroundedTriangle<S> crossing_triangle(const InteriorSearch<S>& s, int l, int r) {
    GroundedTriangle<S> g;
    g.apex = detail::line_cross(s.ls[l], s.rs[r]);
    g.left_foot = Pt<S>{s.L[l].base_foot_x, s.t->base_y()};
    g.right_foot = Pt<S>{s.R[r].base_foot_x, s.t->base_y()};
    g.area = (g.right_foot.x - g.left_foot.x) * (g.apex.y - g.left_foot.y) / 2;
    return g;
}

template <class S>
InteriorSearch<S> make_interior_search(const Terrain<S>& t, std::vector<Prolongation<S>> L,
                                       std::vector<Prolongation<S>> R) {
    InteriorSearch<S> s;
    s.t = &t;
    s.L = std::move(L);
    s.R = std::move(R);
    s.ls.reserve(s.L.size());
    s.rs.reserve(s.R.size());
    for (const auto& p : s.L) s.ls.push_back(p.segment);
    for (const auto& p : s.R) s.rs.push_back(p.segment);
    s.hst = build_hst(s.ls, s.rs);
    s.order_l = compute_total_order(s.ls);
    s.order_r = compute_total_order(s.rs);
    distribute_sorted(s.hst, s.order_l, s.order_r);

    int leaves = static_cast<int>(s.hst.xs.size()) - 1;
    s.rescue.assign(leaves > 0 ? leaves : 0, {});
    std::map<std::pair<S, S>, std::pair<std::vector<int>, std::vector<int>>> shared;
    for (std::size_t i = 0; i < s.ls.size(); ++i) {
        shared[{s.ls[i].src.x, s.ls[i].src.y}].first.push_back(static_cast<int>(i));
        shared[{s.ls[i].dst.x, s.ls[i].dst.y}].first.push_back(static_cast<int>(i));
    }
    for (std::size_t i = 0; i < s.rs.size(); ++i) {
        shared[{s.rs[i].src.x, s.rs[i].src.y}].second.push_back(static_cast<int>(i));
        shared[{s.rs[i].dst.x, s.rs[i].dst.y}].second.push_back(static_cast<int>(i));
    }
    for (const auto& [pt, ids] : shared) {
        if (ids.first.empty() || ids.second.empty()) continue;
        int leaf = static_cast<int>(std::upper_bound(s.hst.xs.begin(), s.hst.xs.end(), pt.first) -
                                    s.hst.xs.begin()) -
                   1;
        if (leaf >= leaves) leaf = leaves - 1;  // rightmost boundary point
        for (int l : ids.first)
            for (int r : ids.second) s.rescue[leaf].push_back({l, r});
    }
    return s;
}

// One SMAWK problem. Rows always index left prolongations, columns right
// ones, both top to bottom along the relevant wall of the node's strip.
enum class ContextKind { StdStd, StdHer, HerStd };

template <class S>
struct NodeMatrix {
    int node = -1;
    ContextKind kind = ContextKind::StdStd;
    std::vector<int> row_ids, col_ids;
    MatrixOracle<S> oracle;
};

namespace detail {

template <class S>
NodeMatrix<S> make_node_matrix(const InteriorSearch<S>& s, int v, ContextKind kind,
                               std::vector<int> rows, std::vector<int> cols) {
    NodeMatrix<S> m;
    m.node = v;
    m.kind = kind;
    m.row_ids = rows;
    m.col_ids = cols;
    const InteriorSearch<S>* sp = &s;
    S lo = s.hst.nodes[v].lo, hi = s.hst.nodes[v].hi;
    m.oracle.rows = static_cast<int>(rows.size());
    m.oracle.cols = static_cast<int>(cols.size());
    m.oracle.at = [sp, kind, lo, hi, rows = std::move(rows),
                   cols = std::move(cols)](int i, int j) -> MatrixEntry<S> {
        int l = rows[i], r = cols[j];
        auto area = [&] {
            Pt<S> p = line_cross(sp->ls[l], sp->rs[r]);
            return MatrixEntry<S>::area((sp->R[r].base_foot_x - sp->L[l].base_foot_x) *
                                        (p.y - sp->t->base_y()) / 2);
        };
        switch (kind) {
            case ContextKind::StdStd: {
                bool above = r_above_at_left(*sp, l, r, lo);
                if (above && sp->y_l(l, hi) > sp->y_r(r, hi)) return area();
                return above ? MatrixEntry<S>::pos_eps(j) : MatrixEntry<S>::neg_eps(j);
            }
            case ContextKind::StdHer:
                // r runs from inside the strip out through the right wall;
                // it crosses l exactly when it ends up below l there.
                if (sp->y_l(l, hi) > sp->y_r(r, hi)) return area();
                return MatrixEntry<S>::pos_eps(j);
            default:
                // l runs in through the left wall and ends inside on the
                // upper boundary, above every right segment; it crosses r
                // exactly when it enters below r.
                if (r_above_at_left(*sp, l, r, lo)) return area();
                return MatrixEntry<S>::neg_eps(j);
        }
    };
    return m;
}

}  // namespace detail

// The up-to-three matrices charged to node v. Std-vs-std keeps only rows
// whose position among the right segments differs between the two walls;
// such a row's nearest right neighbor from above must cross it, which the
// build double-checks. The hereditary contexts filter the partial-span
// segments down to those that can cross anything here: they must leave the
// strip through the far wall below the topmost standard segment of the other
// set.
template <class S>
std::vector<NodeMatrix<S>> node_matrices(const InteriorSearch<S>& s, int v) {
    std::vector<NodeMatrix<S>> out;
    const auto& nd = s.hst.nodes[v];
    const S& lo = nd.lo;
    const S& hi = nd.hi;

    if (!nd.lv.empty() && !nd.rv.empty()) {
        int m = static_cast<int>(nd.rv.size());
        std::vector<int> rows;
        int j_lo = 0, j_hi = 0;
        for (std::size_t i = 0; i < nd.lv.size(); ++i) {
            int l = nd.lv[i];
            while (j_lo < m && detail::r_above_at_left(s, l, nd.rv[j_lo], lo)) ++j_lo;
            while (j_hi < m && s.y_r(nd.rv[j_hi], hi) >= s.y_l(l, hi)) ++j_hi;
            if (j_lo > j_hi && detail::pair_charged(s, l, nd.rv[j_lo - 1], lo, hi))
                rows.push_back(l);
        }
        if (!rows.empty())
            out.push_back(detail::make_node_matrix(s, v, ContextKind::StdStd, std::move(rows), nd.rv));
    }

    if (!nd.lv.empty() && !nd.rh.empty()) {
        int ltop = nd.lv.front();
        std::vector<int> cols;
        for (int r : nd.rh)
            if (s.rs[r].src.x >= hi && s.y_r(r, hi) < s.y_l(ltop, hi)) cols.push_back(r);
        if (!cols.empty())
            out.push_back(detail::make_node_matrix(s, v, ContextKind::StdHer, nd.lv, std::move(cols)));
    }

    if (!nd.rv.empty() && !nd.lh.empty()) {
        int rtop = nd.rv.front();
        std::vector<int> rows;
        for (int l : nd.lh)
            if (s.ls[l].src.x <= lo && s.y_l(l, lo) <= s.y_r(rtop, lo)) rows.push_back(l);
        if (!rows.empty())
            out.push_back(detail::make_node_matrix(s, v, ContextKind::HerStd, std::move(rows), nd.rv));
    }
    return out;
}

template <class S>
std::optional<Candidate<S>> best_at_node(const InteriorSearch<S>& s, int v) {
    std::optional<Candidate<S>> best;
    auto consider = [&](int l, int r) {
        GroundedTriangle<S> g = crossing_triangle(s, l, r);
        if (!best || tri_prefers(g, best->triangle)) best = Candidate<S>{g, InteriorApex{v, l, r}};
    };
    for (const NodeMatrix<S>& m : node_matrices(s, v)) {
        std::vector<int> phi = row_maxima(m.oracle);
        for (std::size_t i = 0; i < phi.size(); ++i) {
            MatrixEntry<S> e = m.oracle.at(static_cast<int>(i), phi[i]);
            if (e.kind == MatrixEntry<S>::AreaK) consider(m.row_ids[i], m.col_ids[phi[i]]);
        }
    }
    int leaf = s.hst.nodes[v].leaf_idx;
    if (leaf >= 0)
        for (const auto& [l, r] : s.rescue[leaf]) consider(l, r);
    return best;
}

template <class S>
std::optional<Candidate<S>> best_interior_apex(const InteriorSearch<S>& s) {
    std::optional<Candidate<S>> best;
    for (int v = 0; v < static_cast<int>(s.hst.nodes.size()); ++v) {
        auto c = best_at_node(s, v);
        if (c && (!best || tri_prefers(c->triangle, best->triangle))) best = c;
    }
    return best;
}

}  // namespace terratri

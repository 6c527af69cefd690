// Hereditary segment tree over the x-projections of L and R. Leaves are the
// bounded atomic intervals between consecutive distinct endpoint
// x-coordinates. A segment is standard at the topmost nodes whose interval
// its projection covers, and hereditary at every proper ancestor of a
// standard node. Projections that touch a node interval in a single point do
// not enter it at all.
#ifndef TERRATRI_HST_HPP
#define TERRATRI_HST_HPP

#include <algorithm>
#include <queue>
#include <set>
#include <vector>

#include "terratri/geom.hpp"

namespace terratri {

template <class S>
struct Hst {
    struct Node {
        S lo{}, hi{};
        int left = -1, right = -1, parent = -1;
        int leaf_idx = -1;
        std::vector<int> lv, rv;  // standard lists (ids into L / R)
        std::vector<int> lh, rh;  // hereditary lists
    };
    std::vector<Node> nodes;
    int root = -1;
    std::vector<S> xs;  // atomic boundaries, increasing
    // (node, kind) memberships per segment, kind 0 = standard, 1 = hereditary
    std::vector<std::vector<std::pair<int, int>>> mem_l, mem_r;
    std::size_t distribute_work = 0;

    std::size_t total_list_size() const {
        std::size_t s = 0;
        for (const Node& v : nodes)
            s += v.lv.size() + v.rv.size() + v.lh.size() + v.rh.size();
        return s;
    }
};

namespace detail {

template <class S>
void hst_insert(Hst<S>& h, int v, const S& a, const S& b, int id, bool is_l) {
    auto& node = h.nodes[v];
    S lo = std::max(a, node.lo), hi = std::min(b, node.hi);
    if (!(lo < hi)) return;  // no open overlap: touching does not count
    auto& mem = is_l ? h.mem_l[id] : h.mem_r[id];
    if (a <= node.lo && node.hi <= b) {
        mem.push_back({v, 0});
        return;
    }
    // Will be standard somewhere strictly below: both the projection span and
    // the node interval have atomic boundaries as endpoints, so a nonempty
    // open overlap contains a whole leaf interval.
    mem.push_back({v, 1});
    hst_insert(h, node.left, a, b, id, is_l);
    hst_insert(h, node.right, a, b, id, is_l);
}

} // namespace detail

template <class S>
Hst<S> build_hst(const std::vector<DirSeg<S>>& L, const std::vector<DirSeg<S>>& R) {
    Hst<S> h;
    for (const auto& s : L) {
        h.xs.push_back(std::min(s.src.x, s.dst.x));
        h.xs.push_back(std::max(s.src.x, s.dst.x));
    }
    for (const auto& s : R) {
        h.xs.push_back(std::min(s.src.x, s.dst.x));
        h.xs.push_back(std::max(s.src.x, s.dst.x));
    }
    std::sort(h.xs.begin(), h.xs.end());
    h.xs.erase(std::unique(h.xs.begin(), h.xs.end()), h.xs.end());
    h.mem_l.resize(L.size());
    h.mem_r.resize(R.size());
    int m = static_cast<int>(h.xs.size()) - 1;
    if (m < 1) return h;

    h.nodes.reserve(2 * m - 1);
    // height-balanced: split the leaf range in half at every level
    auto build = [&h](auto&& self, int l, int r) -> int {
        int idx = static_cast<int>(h.nodes.size());
        h.nodes.push_back({});
        h.nodes[idx].lo = h.xs[l];
        h.nodes[idx].hi = h.xs[r + 1];
        if (l == r) {
            h.nodes[idx].leaf_idx = l;
        } else {
            int mid = (l + r) / 2;
            int cl = self(self, l, mid);
            int cr = self(self, mid + 1, r);
            h.nodes[idx].left = cl;
            h.nodes[idx].right = cr;
            h.nodes[cl].parent = idx;
            h.nodes[cr].parent = idx;
        }
        return idx;
    };
    h.root = build(build, 0, m - 1);

    for (std::size_t i = 0; i < L.size(); ++i) {
        S a = std::min(L[i].src.x, L[i].dst.x), b = std::max(L[i].src.x, L[i].dst.x);
        detail::hst_insert(h, h.root, a, b, static_cast<int>(i), true);
    }
    for (std::size_t i = 0; i < R.size(); ++i) {
        S a = std::min(R[i].src.x, R[i].dst.x), b = std::max(R[i].src.x, R[i].dst.x);
        detail::hst_insert(h, h.root, a, b, static_cast<int>(i), false);
    }
    return h;
}

struct SegmentOrder {
    std::vector<int> order;  // segment ids, topmost first
    std::vector<int> rank;   // rank[id] = position in order
};

// Total order extending above/below: whenever two segments share an
// x-coordinate, the upper one comes first. A left-to-right sweep keeps the
// segments crossing the sweep line in vertical order; neighbors at insertion
// and removal give enough precedence constraints, and a topological sort
// (ties broken by left endpoint, then id, for determinism) produces the
// order. A cycle means the input segments cross, which violates the
// interior-disjointness the caller promised.
template <class S>
SegmentOrder compute_total_order(const std::vector<DirSeg<S>>& segs) {
    int n = static_cast<int>(segs.size());
    struct Span {
        S lx, ly, rx, ry;
    };
    std::vector<Span> sp(n);
    for (int i = 0; i < n; ++i) {
        const auto& s = segs[i];
        if (s.src.x <= s.dst.x)
            sp[i] = {s.src.x, s.src.y, s.dst.x, s.dst.y};
        else
            sp[i] = {s.dst.x, s.dst.y, s.src.x, s.src.y};
    }

    std::vector<int> by_left(n), by_right(n);
    for (int i = 0; i < n; ++i) by_left[i] = by_right[i] = i;
    std::sort(by_left.begin(), by_left.end(), [&](int a, int b) {
        if (sp[a].lx != sp[b].lx) return sp[a].lx < sp[b].lx;
        return a < b;
    });
    std::sort(by_right.begin(), by_right.end(), [&](int a, int b) {
        if (sp[a].rx != sp[b].rx) return sp[a].rx < sp[b].rx;
        return a < b;
    });

    S sweep_x{};
    auto y_at = [&](int i) {
        const Span& s = sp[i];
        if (sweep_x == s.lx) return s.ly;
        if (sweep_x == s.rx) return s.ry;
        S y = s.ly + (sweep_x - s.lx) * (s.ry - s.ly) / (s.rx - s.lx);
        return y;
    };
    auto slope = [&](int i) {
        const Span& s = sp[i];
        S d = (s.ry - s.ly) / (s.rx - s.lx);
        return d;
    };
    auto above = [&](int a, int b) {  // strict order at the sweep line, top first
        if (a == b) return false;
        S ya = y_at(a), yb = y_at(b);
        if (ya != yb) return ya > yb;
        // Equal y happens only where segments touch at an endpoint. Segments
        // continuing to the right sort by where they go (steeper above),
        // segments ending here by where they came from (flatter above); an
        // ending segment sorts below a continuing one. These keys never flip
        // the order of two co-resident non-crossing segments as x advances.
        bool ends_a = sp[a].rx == sweep_x, ends_b = sp[b].rx == sweep_x;
        if (ends_a != ends_b) return ends_b;
        S sa = slope(a), sb = slope(b);
        if (sa != sb) return ends_a ? sa < sb : sa > sb;
        return a < b;
    };
    std::set<int, decltype(above)> live(above);

    std::vector<std::pair<int, int>> edges;  // (upper, lower) precedence
    std::size_t il = 0, ir = 0;
    while (il < by_left.size() || ir < by_right.size()) {
        // all insertions at this x happen before the removals there, so a
        // segment ending where another starts still constrains it
        S x = il < by_left.size() ? sp[by_left[il]].lx : sp[by_right[ir]].rx;
        if (ir < by_right.size() && sp[by_right[ir]].rx < x) x = sp[by_right[ir]].rx;
        sweep_x = x;
        while (il < by_left.size() && sp[by_left[il]].lx == x) {
            int id = by_left[il++];
            auto it = live.insert(id).first;
            if (it != live.begin()) edges.push_back({*std::prev(it), id});
            if (std::next(it) != live.end()) edges.push_back({id, *std::next(it)});
        }
        while (ir < by_right.size() && sp[by_right[ir]].rx == x) {
            int id = by_right[ir++];
            auto it = live.find(id);
            if (it == live.end()) throw CycleDetected("sweep lost a segment; input crosses");
            // a segment whose stored neighbors no longer agree with the
            // comparator has swapped sides with one of them since insertion
            bool has_prev = it != live.begin();
            auto nx = std::next(it);
            if (has_prev && !above(*std::prev(it), id))
                throw CycleDetected("segments swapped order mid-sweep; input crosses");
            if (nx != live.end() && !above(id, *nx))
                throw CycleDetected("segments swapped order mid-sweep; input crosses");
            if (has_prev && nx != live.end()) edges.push_back({*std::prev(it), *nx});
            live.erase(it);
        }
    }

    std::vector<std::vector<int>> adj(n);
    std::vector<int> indeg(n, 0);
    for (auto& e : edges) {
        adj[e.first].push_back(e.second);
        ++indeg[e.second];
    }
    auto heap_less = [&](int a, int b) {  // min-heap by (left x, id)
        if (sp[a].lx != sp[b].lx) return sp[a].lx > sp[b].lx;
        return a > b;
    };
    std::priority_queue<int, std::vector<int>, decltype(heap_less)> ready(heap_less);
    for (int i = 0; i < n; ++i)
        if (indeg[i] == 0) ready.push(i);
    SegmentOrder out;
    out.order.reserve(n);
    while (!ready.empty()) {
        int u = ready.top();
        ready.pop();
        out.order.push_back(u);
        for (int v : adj[u])
            if (--indeg[v] == 0) ready.push(v);
    }
    if (static_cast<int>(out.order.size()) != n)
        throw CycleDetected("above/below constraints contain a cycle");
    out.rank.assign(n, 0);
    for (int i = 0; i < n; ++i) out.rank[out.order[i]] = i;
    return out;
}

// Fill every node's lists following the two global orders: one linear pass
// per order appends each segment to the nodes recorded at build time, so
// every list comes out sorted top-to-bottom and the work is exactly the
// total list size.
template <class S>
void distribute_sorted(Hst<S>& h, const SegmentOrder& order_l, const SegmentOrder& order_r) {
    for (auto& v : h.nodes) {
        v.lv.clear();
        v.rv.clear();
        v.lh.clear();
        v.rh.clear();
    }
    h.distribute_work = 0;
    for (int id : order_l.order)
        for (auto [v, kind] : h.mem_l[id]) {
            (kind == 0 ? h.nodes[v].lv : h.nodes[v].lh).push_back(id);
            ++h.distribute_work;
        }
    for (int id : order_r.order)
        for (auto [v, kind] : h.mem_r[id]) {
            (kind == 0 ? h.nodes[v].rv : h.nodes[v].rh).push_back(id);
            ++h.distribute_work;
        }
}

} // namespace terratri

#endif

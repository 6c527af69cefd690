// Shortest-path trees from the two base endpoints, and the forward
// prolongations of their edges. The tree is built by funnel splitting over
// the triangulation; prolongations are traced by walking the triangulation
// along the ray until the boundary is reached.
#ifndef TERRATRI_SPT_HPP
#define TERRATRI_SPT_HPP

#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "terratri/triangulate.hpp"

namespace terratri {

struct SPTree {
    int root = -1;               // vertex index: 0 for the left tree, 1 for the right
    std::vector<int> parent;     // parent[v] on the geodesic root -> v, -1 at the root
};

namespace detail {

// A funnel sits behind a portal diagonal: chain[0] and chain.back() are the
// portal endpoints, chain[apex] is the last vertex the geodesics to both
// endpoints share. The portal is ordered so that the triangle beyond it lies
// to the left of chain.front() -> chain.back().
struct Funnel {
    std::deque<int> chain;
    int apex = 0;
};

// Index t of the tangent vertex from point c: the geodesic to c is
// root .. chain[t], c. Walks from both ends at once so the cost is
// proportional to min(t, m-t), which the splitting analysis needs.
//
// Sign conventions put a vertex that is exactly collinear with the tangent
// on the path (the walk stops at the vertex nearest to c on the tangent
// line), so ties cannot create overlapping tree edges.
template <class S>
int funnel_tangent(const std::vector<Pt<S>>& v, const Funnel& f, const Pt<S>& c) {
    int m = static_cast<int>(f.chain.size()) - 1;
    auto fwd_ok = [&](int i) {
        if (i >= m) return false;
        int s = orient(c, v[f.chain[i]], v[f.chain[i + 1]]);
        return i < f.apex ? s > 0 : s <= 0;
    };
    auto bwd_ok = [&](int j) {
        if (j <= 0) return false;
        int s = orient(c, v[f.chain[j - 1]], v[f.chain[j]]);
        return j > f.apex ? s > 0 : s <= 0;
    };
    int i = 0, j = m;
    for (;;) {
        if (!fwd_ok(i)) return i;
        ++i;
        if (!bwd_ok(j)) return j;
        --j;
    }
}

} // namespace detail

template <class S>
SPTree shortest_path_tree(const Terrain<S>& t, const Triangulation& tr, int root) {
    const std::vector<Pt<S>>& v = t.vertices;
    int n = t.n();
    SPTree out;
    out.root = root;
    out.parent.assign(n, -1);
    auto set_parent = [&out, root](int child, int par) {
        if (child == root || out.parent[child] != -1) {
            if (child != root && out.parent[child] != par)
                throw GeneralPositionViolation("conflicting tree parents");
            return;
        }
        out.parent[child] = par;
    };

    struct Job {
        int tri;
        detail::Funnel fun;
    };
    std::vector<Job> stack;

    // Triangles incident to the root form a fan; their other vertices are
    // exactly the vertices the root sees directly.
    for (int ti = 0; ti < static_cast<int>(tr.tri.size()); ++ti) {
        int slot = -1;
        for (int e = 0; e < 3; ++e)
            if (tr.tri[ti][e] == root) slot = e;
        if (slot < 0) continue;
        int p = tr.tri[ti][(slot + 1) % 3];  // root -> p -> q is the CCW listing
        int q = tr.tri[ti][(slot + 2) % 3];
        set_parent(p, root);
        set_parent(q, root);
        int g = tr.nbr[ti][(slot + 1) % 3];  // across the edge p -> q
        if (g >= 0) {
            detail::Funnel f;
            f.chain = {q, root, p};  // portal (q,p): far side is to its left
            f.apex = 1;
            stack.push_back(Job{g, std::move(f)});
        }
    }

    while (!stack.empty()) {
        Job job = std::move(stack.back());
        stack.pop_back();
        detail::Funnel& f = job.fun;
        int a = f.chain.front(), b = f.chain.back();
        int c = tr.third_vertex(job.tri, a, b);
        int tpos = detail::funnel_tangent(v, f, v[c]);
        set_parent(c, f.chain[tpos]);

        int m = static_cast<int>(f.chain.size()) - 1;
        int left_nbr = tr.nbr[job.tri][tr.edge_slot(job.tri, a, c)];
        int right_nbr = tr.nbr[job.tri][tr.edge_slot(job.tri, c, b)];

        // Split at the tangent. One side is copied, the other reuses the
        // deque in place; copying the smaller side keeps the total work over
        // all splits within O(n log n).
        bool left_smaller = tpos + 2 <= m - tpos + 2;
        if (left_nbr >= 0 && right_nbr >= 0) {
            detail::Funnel small;
            if (left_smaller) {
                small.chain.assign(f.chain.begin(), f.chain.begin() + tpos + 1);
                small.chain.push_back(c);
                small.apex = std::min(tpos, f.apex);
                for (int k = 0; k < tpos; ++k) f.chain.pop_front();
                f.chain.push_front(c);
                f.apex = std::max(f.apex - tpos, 0) + 1;
                stack.push_back(Job{left_nbr, std::move(small)});
                stack.push_back(Job{right_nbr, std::move(f)});
            } else {
                small.chain.assign(f.chain.begin() + tpos, f.chain.end());
                small.chain.push_front(c);
                small.apex = std::max(f.apex - tpos, 0) + 1;
                while (static_cast<int>(f.chain.size()) > tpos + 1) f.chain.pop_back();
                f.chain.push_back(c);
                f.apex = std::min(tpos, f.apex);
                stack.push_back(Job{right_nbr, std::move(small)});
                stack.push_back(Job{left_nbr, std::move(f)});
            }
        } else if (left_nbr >= 0) {
            while (static_cast<int>(f.chain.size()) > tpos + 1) f.chain.pop_back();
            f.chain.push_back(c);
            f.apex = std::min(tpos, f.apex);
            stack.push_back(Job{left_nbr, std::move(f)});
        } else if (right_nbr >= 0) {
            for (int k = 0; k < tpos; ++k) f.chain.pop_front();
            f.chain.push_front(c);
            f.apex = std::max(f.apex - tpos, 0) + 1;
            stack.push_back(Job{right_nbr, std::move(f)});
        }
    }
    return out;
}

template <class S>
SPTree shortest_path_tree(const Terrain<S>& t, int root) {
    return shortest_path_tree(t, triangulate(t), root);
}

namespace detail {

// Walk the ray triangle to triangle starting inside `cur` (entered through
// `entry_slot`, or -1 when starting in the interior or at a vertex).
// Triangulation vertices are all boundary vertices, so a ray meeting any
// vertex exactly has reached the boundary and stops there.
template <class S>
Pt<S> ray_walk(const Terrain<S>& t, const Triangulation& tr, const Pt<S>& from, const Pt<S>& dir,
               int cur, int entry_slot) {
    const std::vector<Pt<S>>& v = t.vertices;
    auto along = [&](const Pt<S>& p) {
        S d = (p.x - from.x) * dir.x + (p.y - from.y) * dir.y;
        return d;
    };
    for (std::size_t guard = 0; guard <= tr.tri.size(); ++guard) {
        const auto& T = tr.tri[cur];
        int exit_slot = -1;
        Pt<S> exit_pt{};
        for (int e = 0; e < 3; ++e) {
            if (e == entry_slot) continue;
            const Pt<S>& A = v[T[e]];
            const Pt<S>& B = v[T[(e + 1) % 3]];
            S denom = (B.x - A.x) * dir.y - (B.y - A.y) * dir.x;
            if (num_sgn(denom) == 0) continue;  // parallel; collinear runs end at vertices
            S w = ((from.x - A.x) * dir.y - (from.y - A.y) * dir.x) / denom;
            if (w < 0 || w > 1) continue;
            Pt<S> P{A.x + w * (B.x - A.x), A.y + w * (B.y - A.y)};
            if (!(along(P) > 0)) continue;
            if (P == A) return A;
            if (P == B) return B;
            exit_slot = e;
            exit_pt = P;
        }
        if (exit_slot < 0) throw GeneralPositionViolation("ray walk lost its triangle");
        int nxt = tr.nbr[cur][exit_slot];
        if (nxt < 0) return exit_pt;
        entry_slot = tr.edge_slot(nxt, T[exit_slot], T[(exit_slot + 1) % 3]);
        cur = nxt;
    }
    throw GeneralPositionViolation("ray walk did not terminate");
}

// Start triangle for a ray leaving vertex `at_vertex`: the incident triangle
// whose angle at the vertex contains dir, scanning only `candidates`. A ray
// along an incident edge ends at that edge's far vertex immediately.
template <class S>
std::optional<Pt<S>> ray_from_vertex(const Terrain<S>& t, const Triangulation& tr, int at_vertex,
                                     const Pt<S>& dir, const std::vector<int>& candidates,
                                     int& cur) {
    const std::vector<Pt<S>>& v = t.vertices;
    const Pt<S>& from = v[at_vertex];
    Pt<S> tip{from.x + dir.x, from.y + dir.y};
    auto along = [&](const Pt<S>& p) {
        S d = (p.x - from.x) * dir.x + (p.y - from.y) * dir.y;
        return d;
    };
    cur = -1;
    for (int ti : candidates) {
        int slot = -1;
        for (int e = 0; e < 3; ++e)
            if (tr.tri[ti][e] == at_vertex) slot = e;
        if (slot < 0) continue;
        int p = tr.tri[ti][(slot + 1) % 3], q = tr.tri[ti][(slot + 2) % 3];
        int sp = orient(from, v[p], tip);  // dir vs edge to p (cone right side)
        int sq = orient(from, tip, v[q]);  // dir vs edge to q (cone left side)
        if (sp == 0 && along(v[p]) > 0) return v[p];
        if (sq == 0 && along(v[q]) > 0) return v[q];
        if (sp > 0 && sq > 0) {
            cur = ti;
            return std::nullopt;
        }
    }
    throw GeneralPositionViolation("ray leaves the terrain immediately");
}

} // namespace detail

// Triangle ids incident to each vertex; total size is linear.
inline std::vector<std::vector<int>> vertex_incidence(const Triangulation& tr, int n) {
    std::vector<std::vector<int>> inc(n);
    for (int ti = 0; ti < static_cast<int>(tr.tri.size()); ++ti)
        for (int e = 0; e < 3; ++e) inc[tr.tri[ti][e]].push_back(ti);
    return inc;
}

// First boundary point hit by the ray from vertex `from_vertex` along `dir`.
template <class S>
Pt<S> boundary_hit(const Terrain<S>& t, const Triangulation& tr, int from_vertex, const Pt<S>& dir,
                   const std::vector<std::vector<int>>& incident) {
    int cur = -1;
    auto immediate = detail::ray_from_vertex(t, tr, from_vertex, dir, incident[from_vertex], cur);
    if (immediate) return *immediate;
    return detail::ray_walk(t, tr, t.vertices[from_vertex], dir, cur, -1);
}

// First boundary point hit by the ray from `from` along `dir`; finds the
// starting triangle by scanning, so prefer the vertex-indexed overload in
// bulk use.
template <class S>
Pt<S> boundary_hit(const Terrain<S>& t, const Triangulation& tr, const Pt<S>& from,
                   const Pt<S>& dir) {
    const std::vector<Pt<S>>& v = t.vertices;
    int at_vertex = -1;
    for (int i = 0; i < t.n(); ++i)
        if (v[i] == from) at_vertex = i;
    int cur = -1;
    if (at_vertex >= 0) {
        std::vector<int> all(tr.tri.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
        auto immediate = detail::ray_from_vertex(t, tr, at_vertex, dir, all, cur);
        if (immediate) return *immediate;
    } else {
        for (int ti = 0; ti < static_cast<int>(tr.tri.size()) && cur < 0; ++ti) {
            const auto& T = tr.tri[ti];
            bool in = true;
            for (int e = 0; e < 3; ++e)
                if (orient(v[T[e]], v[T[(e + 1) % 3]], from) < 0) in = false;
            if (in) cur = ti;
        }
        if (cur < 0) throw GeneralPositionViolation("ray origin outside the terrain");
    }
    return detail::ray_walk(t, tr, from, dir, cur, -1);
}

template <class S>
struct Prolongation {
    int p = -1, q = -1;      // origin tree edge p -> q, q reflex
    DirSeg<S> segment;       // q -> first boundary point hit beyond q
    S base_foot_x{};         // where the full line crosses the base line
};

// The segment set L (root = 0) or R (root = 1): reflex vertices whose tree
// edge extends into the interior contribute the extension up to the boundary.
// Convex vertices contribute nothing, and neither does a reflex vertex whose
// extension direction leaves the polygon right away: that prolongation has
// zero length and stays out of the set.
template <class S>
std::vector<Prolongation<S>> forward_prolongations(const Terrain<S>& t, const Triangulation& tr,
                                                   const SPTree& tree,
                                                   const std::vector<std::vector<int>>* incidence = nullptr) {
    std::vector<Prolongation<S>> out;
    SegTag tag = tree.root == 0 ? SegTag::LSide : SegTag::RSide;
    std::vector<std::vector<int>> local;
    if (!incidence) {
        local = vertex_incidence(tr, t.n());
        incidence = &local;
    }
    for (int q = 2; q < t.n(); ++q) {
        if (classify_vertex(t, q) != VertexClass::Reflex) continue;
        int p = tree.parent[q];
        const Pt<S>& P = t.vertices[p];
        const Pt<S>& Q = t.vertices[q];
        Pt<S> dir{Q.x - P.x, Q.y - P.y};
        const Pt<S>& prev = t.vertices[q - 1];
        const Pt<S>& next = t.vertices[(q + 1) % t.n()];
        S c1 = (prev.x - Q.x) * dir.y - (prev.y - Q.y) * dir.x;  // cross(prev-Q, dir)
        S c2 = dir.x * (next.y - Q.y) - dir.y * (next.x - Q.x);  // cross(dir, next-Q)
        if (num_sgn(c1) > 0 && num_sgn(c2) > 0) continue;  // dir in the exterior cone
        Pt<S> hit = boundary_hit(t, tr, q, dir, *incidence);
        if (hit == Q) throw GeneralPositionViolation("zero length prolongation");
        Prolongation<S> pr;
        pr.p = p;
        pr.q = q;
        pr.segment = DirSeg<S>{Q, hit, tag};
        pr.base_foot_x = P.x + (t.base_y() - P.y) * (Q.x - P.x) / (Q.y - P.y);
        out.push_back(std::move(pr));
    }
    return out;
}

} // namespace terratri

#endif

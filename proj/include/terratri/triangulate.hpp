// Triangulation of the terrain polygon by a single sweep over the vertices in
// increasing x. The terrain is a monotone mountain (one base edge, x-monotone
// chain above), so a stack sweep triangulates it in linear time once the
// boundary order is known, and the normal form already provides that order.
#ifndef TERRATRI_TRIANGULATE_HPP
#define TERRATRI_TRIANGULATE_HPP

#include <array>
#include <unordered_map>
#include <vector>

#include "terratri/terrain.hpp"

namespace terratri {

struct Triangulation {
    // CCW vertex index triples, and for each triangle the neighbor across
    // edge slot e = (tri[t][e] -> tri[t][(e+1)%3]), -1 on the boundary.
    std::vector<std::array<int, 3>> tri;
    std::vector<std::array<int, 3>> nbr;

    int edge_slot(int t, int a, int b) const {
        for (int e = 0; e < 3; ++e) {
            int u = tri[t][e], v = tri[t][(e + 1) % 3];
            if ((u == a && v == b) || (u == b && v == a)) return e;
        }
        return -1;
    }
    int third_vertex(int t, int a, int b) const {
        for (int e = 0; e < 3; ++e)
            if (tri[t][e] != a && tri[t][e] != b) return tri[t][e];
        return -1;
    }
};

template <class S>
Triangulation triangulate(const Terrain<S>& t) {
    int n = t.n();
    Triangulation out;
    out.tri.reserve(n - 2);

    // Walk the boundary by increasing x keeping a stack of vertices that are
    // still waiting for a triangle. A new vertex u clips every ear that turns
    // right; the final vertex (the right base endpoint) must clear the whole
    // stack, so there the pop condition relaxes to orient <= 0. Zero-area
    // triangles can only appear in that last fan and only when three vertices
    // are exactly collinear, which validated small inputs exclude.
    std::vector<int> stack;
    stack.push_back(t.by_x(0));
    stack.push_back(t.by_x(1));
    for (int k = 2; k < n; ++k) {
        int u = t.by_x(k);
        bool last = k == n - 1;
        while (stack.size() >= 2) {
            int b = stack[stack.size() - 1];
            int a = stack[stack.size() - 2];
            int o = orient(t.vertices[a], t.vertices[b], t.vertices[u]);
            if (o < 0 || (last && o == 0)) {
                out.tri.push_back({a, u, b});
                stack.pop_back();
            } else {
                break;
            }
        }
        stack.push_back(u);
    }

    out.nbr.assign(out.tri.size(), {-1, -1, -1});
    std::unordered_map<long long, std::pair<int, int>> open_edge;
    open_edge.reserve(out.tri.size() * 2);
    for (int ti = 0; ti < static_cast<int>(out.tri.size()); ++ti) {
        for (int e = 0; e < 3; ++e) {
            int a = out.tri[ti][e], b = out.tri[ti][(e + 1) % 3];
            long long key = static_cast<long long>(a < b ? a : b) * n + (a < b ? b : a);
            auto it = open_edge.find(key);
            if (it == open_edge.end()) {
                open_edge.emplace(key, std::make_pair(ti, e));
            } else {
                out.nbr[ti][e] = it->second.first;
                out.nbr[it->second.first][it->second.second] = ti;
                open_edge.erase(it);
            }
        }
    }
    return out;
}

} // namespace terratri

#endif

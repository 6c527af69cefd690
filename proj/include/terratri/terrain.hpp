// Terrain = x-monotone polygon whose lower boundary is one horizontal segment
// after shearing. Normal form used everywhere downstream:
//   vertices[0] = B_l (left base vertex), vertices[1] = B_r (right base vertex),
//   vertices[2..n-1] = upper chain in strictly decreasing x,
// the whole listing being counterclockwise.
//
// File format: first non-comment line holds n, then n lines "x y" (decimal
// numbers, parsed exactly). '#' starts a comment line. The listing may start
// at any vertex of the counterclockwise cycle; the parser rotates it into
// normal form and rejects clockwise input.
#ifndef TERRATRI_TERRAIN_HPP
#define TERRATRI_TERRAIN_HPP

#include <algorithm>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "terratri/geom.hpp"

namespace terratri {

enum class VertexClass { Convex, Reflex, Base };

template <class S>
struct GroundedTriangle {
    Pt<S> apex, left_foot, right_foot;
    S area{};
};

template <class S>
struct Terrain {
    std::vector<Pt<S>> vertices;  // normal form
    AffineShear<S> shear;         // maps original input coordinates to normal form

    int n() const { return static_cast<int>(vertices.size()); }
    const S& base_y() const { return vertices[0].y; }
    const S& x_left() const { return vertices[0].x; }
    const S& x_right() const { return vertices[1].x; }

    // Boundary vertex indices by increasing x: B_l, chain left to right, B_r.
    int by_x(int k) const {
        if (k == 0) return 0;
        if (k == n() - 1) return 1;
        return n() - k;
    }
    const Pt<S>& pt_by_x(int k) const { return vertices[by_x(k)]; }

    // Height of the upper boundary at x; requires x_left <= x <= x_right.
    S upper_y_at(const S& x) const {
        int lo = 0, hi = n() - 1;
        while (hi - lo > 1) {
            int mid = (lo + hi) / 2;
            if (pt_by_x(mid).x <= x)
                lo = mid;
            else
                hi = mid;
        }
        const Pt<S>& a = pt_by_x(lo);
        const Pt<S>& b = pt_by_x(hi);
        if (x == a.x) return a.y;
        if (x == b.x) return b.y;
        S y = a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x);
        return y;
    }

    bool point_inside(const Pt<S>& p) const {
        if (p.x < x_left() || p.x > x_right()) return false;
        if (p.y < base_y()) return false;
        return p.y <= upper_y_at(p.x);
    }
};

using TerrainQ = Terrain<Rat>;

template <class S>
VertexClass classify_vertex(const Terrain<S>& t, int i) {
    if (i == 0 || i == 1) return VertexClass::Base;
    const Pt<S>& prev = t.vertices[i - 1];
    const Pt<S>& next = t.vertices[(i + 1) % t.n()];
    int o = orient(prev, t.vertices[i], next);
    return o < 0 ? VertexClass::Reflex : VertexClass::Convex;
}

// A segment lies inside the closed terrain iff both endpoints are inside and
// it stays weakly below the chain at every chain-vertex x in its span. The
// chain and the segment are both piecewise linear, so checking the breakpoint
// x-coordinates is enough.
template <class S>
bool segment_inside(const Terrain<S>& t, const DirSeg<S>& s) {
    if (!t.point_inside(s.src) || !t.point_inside(s.dst)) return false;
    const Pt<S>& a = s.src.x <= s.dst.x ? s.src : s.dst;
    const Pt<S>& b = s.src.x <= s.dst.x ? s.dst : s.src;
    if (a.x == b.x) return true;  // vertical: the slab at fixed x is an interval
    for (int k = 1; k < t.n() - 1; ++k) {
        const Pt<S>& v = t.pt_by_x(k);
        if (v.x <= a.x || v.x >= b.x) continue;
        S sy = a.y + (v.x - a.x) * (b.y - a.y) / (b.x - a.x);
        if (sy > v.y) return false;
    }
    return true;
}

namespace detail {
template <class S>
std::optional<S> line_x_at_y(const Pt<S>& p, const Pt<S>& q, const S& y) {
    if (p.y == q.y) return std::nullopt;
    S x = p.x + (y - p.y) * (q.x - p.x) / (q.y - p.y);
    return x;
}
} // namespace detail

// Triangle with its base on the terrain base, left side on left_line and
// right side on right_line; empty if the construction leaves the terrain.
template <class S>
std::optional<GroundedTriangle<S>> grounded_triangle_from_lines(const Terrain<S>& t,
                                                                const Pt<S>& la, const Pt<S>& lb,
                                                                const Pt<S>& ra, const Pt<S>& rb) {
    S denom = (lb.x - la.x) * (rb.y - ra.y) - (lb.y - la.y) * (rb.x - ra.x);
    if (num_sgn(denom) == 0) return std::nullopt;
    S u = ((ra.x - la.x) * (rb.y - ra.y) - (ra.y - la.y) * (rb.x - ra.x)) / denom;
    Pt<S> apex{la.x + u * (lb.x - la.x), la.y + u * (lb.y - la.y)};
    if (!(apex.y > t.base_y())) return std::nullopt;
    auto lf = detail::line_x_at_y(la, lb, t.base_y());
    auto rf = detail::line_x_at_y(ra, rb, t.base_y());
    if (!lf || !rf) return std::nullopt;
    if (*lf > *rf) return std::nullopt;
    if (*lf < t.x_left() || *rf > t.x_right()) return std::nullopt;
    GroundedTriangle<S> g;
    g.apex = apex;
    g.left_foot = Pt<S>{*lf, t.base_y()};
    g.right_foot = Pt<S>{*rf, t.base_y()};
    g.area = (*rf - *lf) * (apex.y - t.base_y()) / 2;
    if (!segment_inside(t, DirSeg<S>{g.left_foot, apex}) ||
        !segment_inside(t, DirSeg<S>{g.right_foot, apex}))
        return std::nullopt;
    return g;
}

// Invariant checks on an already-normalized terrain. Violations come back as
// short codes; an empty list means the terrain is valid. full_gp additionally
// scans all vertex triples for collinearity (cubic, small inputs only).
template <class S>
std::vector<std::string> validate(const Terrain<S>& t, bool full_gp = false) {
    std::vector<std::string> out;
    int n = t.n();
    if (n < 3) {
        out.push_back("TooFewVertices");
        return out;
    }
    if (!(t.vertices[0].x < t.vertices[1].x)) out.push_back("BaseOrder");
    if (t.vertices[0].y != t.vertices[1].y) out.push_back("BaseNotHorizontal");
    for (int i = 2; i < n; ++i) {
        const S& x = t.vertices[i].x;
        const S& px = i == 2 ? t.vertices[1].x : t.vertices[i - 1].x;
        if (x == px)
            out.push_back("VerticalEdge");
        else if (x > px)
            out.push_back("ChainNotMonotone");
        if (!(t.vertices[i].x > t.vertices[0].x)) out.push_back("ChainNotMonotone");
        if (!(t.vertices[i].y > t.base_y())) out.push_back("ChainBelowBase");
    }
    for (int i = 0; i < n && n >= 3; ++i) {
        const Pt<S>& a = t.vertices[(i + n - 1) % n];
        const Pt<S>& b = t.vertices[i];
        const Pt<S>& c = t.vertices[(i + 1) % n];
        if (orient(a, b, c) == 0) out.push_back("CollinearEdges(" + std::to_string(i) + ")");
    }
    if (full_gp) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k)
                    if (orient(t.vertices[i], t.vertices[j], t.vertices[k]) == 0)
                        out.push_back("CollinearTriple(" + std::to_string(i) + "," +
                                      std::to_string(j) + "," + std::to_string(k) + ")");
    }
    return out;
}

// Build the normal form from a raw counterclockwise listing (any rotation).
inline TerrainQ build_terrain(const std::vector<PtQ>& raw) {
    int n = static_cast<int>(raw.size());
    if (n < 3) throw ValidationError("TooFewVertices");
    int imin = 0, imax = 0;
    for (int i = 1; i < n; ++i) {
        if (raw[i].x < raw[imin].x) imin = i;
        if (raw[i].x > raw[imax].x) imax = i;
    }
    for (int i = 0; i < n; ++i) {
        if (i != imin && raw[i].x == raw[imin].x) throw ValidationError("DuplicateExtremeX");
        if (i != imax && raw[i].x == raw[imax].x) throw ValidationError("DuplicateExtremeX");
    }
    if ((imin + 1) % n != imax) {
        if ((imax + 1) % n == imin) throw ValidationError("ClockwiseOrder");
        throw ValidationError("BaseNotAdjacent");
    }
    std::vector<PtQ> rot;
    rot.reserve(n);
    for (int i = 0; i < n; ++i) rot.push_back(raw[(imin + i) % n]);
    auto [sheared, sh] = shear_to_horizontal(rot);
    TerrainQ t;
    t.vertices = std::move(sheared);
    t.shear = sh;
    auto viol = validate(t);
    if (!viol.empty()) throw ValidationError(viol.front());
    return t;
}

inline TerrainQ parse_terrain(std::istream& in) {
    auto next_line = [&in](std::string& line) {
        while (std::getline(in, line)) {
            std::size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos) continue;
            if (line[i] == '#') continue;
            return true;
        }
        return false;
    };
    std::string line;
    if (!next_line(line)) throw SyntaxError("missing vertex count");
    long n = 0;
    {
        std::istringstream ls(line);
        if (!(ls >> n)) throw SyntaxError("bad vertex count '" + line + "'");
        std::string rest;
        if (ls >> rest) throw SyntaxError("trailing data after vertex count");
    }
    if (n < 3) throw ValidationError("TooFewVertices");
    std::vector<PtQ> raw;
    raw.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        if (!next_line(line)) throw SyntaxError("expected " + std::to_string(n) + " vertices");
        std::istringstream ls(line);
        std::string xs, ys, rest;
        if (!(ls >> xs >> ys)) throw SyntaxError("bad vertex line '" + line + "'");
        if (ls >> rest) throw SyntaxError("trailing data on vertex line '" + line + "'");
        raw.push_back(PtQ{parse_rat(xs), parse_rat(ys)});
    }
    return build_terrain(raw);
}

inline TerrainQ parse_terrain(const std::string& text) {
    std::istringstream in(text);
    return parse_terrain(in);
}

inline Terrain<double> to_double_terrain(const TerrainQ& t) {
    Terrain<double> d;
    d.vertices.reserve(t.vertices.size());
    for (const PtQ& p : t.vertices) d.vertices.push_back(Pt<double>{to_double(p.x), to_double(p.y)});
    d.shear.x0 = to_double(t.shear.x0);
    d.shear.slope = to_double(t.shear.slope);
    return d;
}

} // namespace terratri

#endif

// Points, directed segments, orientation and intersection predicates, and the
// shear that makes the base horizontal. Everything is templated on the scalar:
// S = Rat gives exact predicates, S = double is the timing-only mode.
#ifndef TERRATRI_GEOM_HPP
#define TERRATRI_GEOM_HPP

#include <optional>
#include <utility>
#include <vector>

#include "terratri/errors.hpp"
#include "terratri/scalar.hpp"

namespace terratri {

template <class S>
struct Pt {
    S x{}, y{};
    friend bool operator==(const Pt& a, const Pt& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Pt& a, const Pt& b) { return !(a == b); }
};

using PtQ = Pt<Rat>;

enum class SegTag { LSide, RSide, TreeEdge, Other };

template <class S>
struct DirSeg {
    Pt<S> src, dst;
    SegTag tag = SegTag::Other;
};

using DirSegQ = DirSeg<Rat>;

// Sign of twice the signed area of (p,q,r): +1 for a left turn.
template <class S>
int orient(const Pt<S>& p, const Pt<S>& q, const Pt<S>& r) {
    S d = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return num_sgn(d);
}

template <class S>
S cross2(const Pt<S>& p, const Pt<S>& q, const Pt<S>& r) {
    S d = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return d;
}

template <class S>
S triangle_area(const Pt<S>& p, const Pt<S>& q, const Pt<S>& r) {
    S d = cross2(p, q, r);
    if (num_sgn(d) < 0) d = -d;
    d /= 2;
    return d;
}

template <class S>
bool collinear_point_on(const Pt<S>& a, const Pt<S>& b, const Pt<S>& p) {
    // p is assumed collinear with a,b; test membership in the closed segment.
    S lox = a.x < b.x ? a.x : b.x;
    S hix = a.x < b.x ? b.x : a.x;
    S loy = a.y < b.y ? a.y : b.y;
    S hiy = a.y < b.y ? b.y : a.y;
    return lox <= p.x && p.x <= hix && loy <= p.y && p.y <= hiy;
}

// Unique intersection point of two closed segments, if any. Collinear
// segments sharing more than one point are a general-position failure.
template <class S>
std::optional<Pt<S>> segment_intersection(const DirSeg<S>& a, const DirSeg<S>& b) {
    const Pt<S>&p = a.src, &q = a.dst, &u = b.src, &v = b.dst;
    int o1 = orient(p, q, u);
    int o2 = orient(p, q, v);
    int o3 = orient(u, v, p);
    int o4 = orient(u, v, q);
    if (o1 == 0 && o2 == 0) {
        // All four points on one line. Count shared points.
        bool u_on = collinear_point_on(p, q, u);
        bool v_on = collinear_point_on(p, q, v);
        bool p_on = collinear_point_on(u, v, p);
        bool q_on = collinear_point_on(u, v, q);
        int hits = 0;
        Pt<S> hit{};
        auto keep = [&](const Pt<S>& w) {
            if (hits == 0) {
                hit = w;
                hits = 1;
            } else if (!(hit == w)) {
                hits = 2;
            }
        };
        if (u_on) keep(u);
        if (v_on) keep(v);
        if (p_on) keep(p);
        if (q_on) keep(q);
        if (hits == 0) return std::nullopt;
        if (hits > 1) throw CollinearOverlap("collinear segments share a stretch");
        return hit;
    }
    if (o1 * o2 > 0 || o3 * o4 > 0) return std::nullopt;
    if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0) {
        // An endpoint lies on the other segment's line; keep only real touches.
        if (o1 == 0 && collinear_point_on(p, q, u)) return u;
        if (o2 == 0 && collinear_point_on(p, q, v)) return v;
        if (o3 == 0 && collinear_point_on(u, v, p)) return p;
        if (o4 == 0 && collinear_point_on(u, v, q)) return q;
        return std::nullopt;
    }
    // Proper crossing: solve p + t(q-p) = u + s(v-u).
    S denom = (q.x - p.x) * (v.y - u.y) - (q.y - p.y) * (v.x - u.x);
    S t = ((u.x - p.x) * (v.y - u.y) - (u.y - p.y) * (v.x - u.x));
    t /= denom;
    Pt<S> r{p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
    return r;
}

// (x, y) -> (x, y - (x - x0) * slope). Verticals map to verticals and the
// Jacobian determinant is 1, so areas are untouched.
template <class S>
struct AffineShear {
    S x0{}, slope{};
    Pt<S> apply(const Pt<S>& p) const {
        Pt<S> r{p.x, p.y - (p.x - x0) * slope};
        return r;
    }
    Pt<S> invert(const Pt<S>& p) const {
        Pt<S> r{p.x, p.y + (p.x - x0) * slope};
        return r;
    }
    bool is_identity() const { return num_sgn(slope) == 0; }
};

// The first two vertices are the base endpoints; shear so the base comes out
// horizontal at the left endpoint's height.
template <class S>
std::pair<std::vector<Pt<S>>, AffineShear<S>> shear_to_horizontal(const std::vector<Pt<S>>& raw) {
    if (raw.size() < 2) throw SyntaxError("need at least two vertices for a base");
    const Pt<S>&b0 = raw[0], &b1 = raw[1];
    if (b0.x == b1.x) throw VerticalBase();
    AffineShear<S> sh;
    sh.x0 = b0.x;
    sh.slope = (b1.y - b0.y) / (b1.x - b0.x);
    std::vector<Pt<S>> out;
    out.reserve(raw.size());
    for (const Pt<S>& p : raw) out.push_back(sh.apply(p));
    return {out, sh};
}

} // namespace terratri

#endif

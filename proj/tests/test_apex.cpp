#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <utility>
#include <vector>

#include "terratri/boundary.hpp"
#include "terratri/generate.hpp"
#include "terratri/interact.hpp"
#include "terratri/oracle.hpp"
#include "terratri/poly.hpp"
#include "terratri/solve.hpp"

#include "test_util.hpp"

using namespace terratri;
using tt_test::rat;

namespace {

TerrainQ load(const char* text) { return parse_terrain(std::string(text)); }

struct Built {
    TerrainQ t;
    Triangulation tr;
    SPTree tl, trr;
    std::vector<Prolongation<Rat>> L, R;
    std::vector<BoundaryPiece<Rat>> pieces;
};

Built build(const TerrainQ& t) {
    Built b;
    b.t = t;
    b.tr = triangulate(b.t);
    b.tl = shortest_path_tree(b.t, b.tr, 0);
    b.trr = shortest_path_tree(b.t, b.tr, 1);
    auto inc = vertex_incidence(b.tr, b.t.n());
    b.L = forward_prolongations(b.t, b.tr, b.tl, &inc);
    b.R = forward_prolongations(b.t, b.tr, b.trr, &inc);
    b.pieces = boundary_pieces(b.t, b.tl, b.trr, b.L, b.R);
    return b;
}

Poly lin(long c0, long c1) { return Poly{rat(c0), rat(c1)}; }

using MatrixEntryQ = MatrixEntry<Rat>;

} // namespace

TEST_CASE("polynomial arithmetic") {
    Poly p = p_mul(p_mul(lin(-1, 1), lin(-2, 1)), lin(-3, 1));  // (x-1)(x-2)(x-3)
    CHECK(p == Poly{rat(-6), rat(11), rat(-6), rat(1)});
    CHECK(p_eval(p, rat(0)) == rat(-6));
    CHECK(p_eval(p, rat(4)) == rat(6));
    CHECK(p_eval(Poly{}, rat(7)) == rat(0));
    CHECK(p_deriv(p) == Poly{rat(11), rat(-12), rat(3)});
    CHECK(p_sub(p, p).empty());
    CHECK(p_add(p, p_scale(p, rat(-1))).empty());
    CHECK(p_divexact(p, lin(-2, 1)) == p_mul(lin(-1, 1), lin(-3, 1)));
    CHECK(p_rem(p, lin(-2, 1)).empty());
    CHECK(p_rem(Poly{rat(0), rat(0), rat(1)}, lin(-1, 1)) == Poly{rat(1)});
    CHECK(p_gcd(p_mul(lin(-1, 1), lin(-2, 1)), p_mul(lin(-2, 1), lin(-3, 1))) == lin(-2, 1));

    Poly sq = p_squarefree(p_mul(p_mul(lin(-1, 1), lin(-1, 1)), lin(-2, 1)));
    CHECK(p_deg(sq) == 2);
    CHECK(p_eval(sq, rat(1)) == rat(0));
    CHECK(p_eval(sq, rat(2)) == rat(0));

    CHECK(rat_sqrt(rat(49, 4)) == rat(7, 2));
    CHECK(rat_sqrt(rat(0)) == rat(0));
    CHECK_FALSE(rat_sqrt(rat(2)).has_value());
    CHECK_FALSE(rat_sqrt(rat(-4)).has_value());
}

TEST_CASE("root isolation") {
    // Three simple roots, never hit by a dyadic split point.
    Poly cubic = p_mul(p_mul(lin(-1, 1), lin(-2, 1)), lin(-3, 1));
    IsolatedRoots iso = isolate_roots(cubic, rat(0), rat(10));
    REQUIRE(iso.roots.size() == 3);
    for (int k = 1; k <= 3; ++k) {
        const RootBracket& br = iso.roots[k - 1];
        if (br.exact)
            CHECK(br.root == rat(k));
        else {
            CHECK(br.lo < rat(k));
            CHECK(rat(k) < br.hi);
            CHECK(num_sgn(p_eval(iso.p, br.lo)) * num_sgn(p_eval(iso.p, br.hi)) == -1);
        }
    }

    // The first split point lands on the middle root exactly; the remaining
    // quadratic is then solved in closed form.
    iso = isolate_roots(p_mul(p_mul(lin(-1, 1), lin(-5, 1)), lin(-9, 1)), rat(0), rat(10));
    REQUIRE(iso.roots.size() == 3);
    for (int k = 0; k < 3; ++k) {
        CHECK(iso.roots[k].exact);
        CHECK(iso.roots[k].root == rat(4 * k + 1));
    }

    // Quadratics with a rational discriminant come out exact.
    iso = isolate_roots(Poly{rat(-25), rat(0), rat(1)}, rat(-10), rat(10));
    REQUIRE(iso.roots.size() == 2);
    CHECK(iso.roots[0].exact);
    CHECK(iso.roots[0].root == rat(-5));
    CHECK(iso.roots[1].root == rat(5));
    iso = isolate_roots(lin(-3, 2), rat(0), rat(10));
    REQUIRE(iso.roots.size() == 1);
    CHECK(iso.roots[0].exact);
    CHECK(iso.roots[0].root == rat(3, 2));

    // Irrational quadratic roots stay bracketed.
    iso = isolate_roots(Poly{rat(-2), rat(0), rat(1)}, rat(0), rat(2));
    REQUIRE(iso.roots.size() == 1);
    CHECK_FALSE(iso.roots[0].exact);
    CHECK(iso.roots[0].lo >= rat(0));
    CHECK(iso.roots[0].hi <= rat(2));
    CHECK(num_sgn(p_eval(iso.p, iso.roots[0].lo)) * num_sgn(p_eval(iso.p, iso.roots[0].hi)) == -1);

    // Roots on the interval ends are excluded; repeated roots count once.
    CHECK(isolate_roots(p_mul(lin(-1, 1), lin(-2, 1)), rat(1), rat(2)).roots.empty());
    iso = isolate_roots(p_mul(lin(-1, 1), lin(-2, 1)), rat(0), rat(2));
    REQUIRE(iso.roots.size() == 1);
    CHECK(iso.roots[0].root == rat(1));
    iso = isolate_roots(p_mul(p_mul(lin(-1, 1), lin(-1, 1)), lin(-3, 1)), rat(0), rat(10));
    REQUIRE(iso.roots.size() == 2);
    CHECK(iso.roots[0].root == rat(1));
    CHECK(iso.roots[1].root == rat(3));

    CHECK(isolate_roots(Poly{}, rat(0), rat(1)).roots.empty());
    CHECK(isolate_roots(Poly{rat(5)}, rat(0), rat(1)).roots.empty());

    // Mixed rational and irrational roots of a quartic.
    Poly quartic = p_mul(p_mul(Poly{rat(-2), rat(0), rat(1)}, lin(-1, 1)), lin(-4, 1));
    iso = isolate_roots(quartic, rat(0), rat(10));
    REQUIRE(iso.roots.size() == 3);
    std::vector<int> want{-1, -1, 1};  // sign of x - 2 at roots 1, sqrt(2), 4
    for (std::size_t i = 0; i < 3; ++i) CHECK(sign_at_root(iso.p, iso.roots[i], lin(-2, 1)) == want[i]);
    CHECK(sign_at_root(iso.p, iso.roots[0], Poly{rat(-2), rat(0), rat(1)}) == -1);
    CHECK(sign_at_root(iso.p, iso.roots[1], Poly{rat(-2), rat(0), rat(1)}) == 0);
    CHECK(sign_at_root(iso.p, iso.roots[2], Poly{rat(-2), rat(0), rat(1)}) == 1);
}

TEST_CASE("signs at isolated roots") {
    Poly p{rat(-2), rat(0), rat(1)};  // root sqrt(2) in (1, 2)
    IsolatedRoots iso = isolate_roots(p, rat(1), rat(2));
    REQUIRE(iso.roots.size() == 1);
    const RootBracket& br = iso.roots[0];
    REQUIRE_FALSE(br.exact);

    CHECK(sign_at_root(iso.p, br, p) == 0);
    CHECK(sign_at_root(iso.p, br, p_scale(p, rat(3))) == 0);
    CHECK(sign_at_root(iso.p, br, p_mul(p, lin(-3, 2))) == 0);
    CHECK(sign_at_root(iso.p, br, lin(-1, 1)) == 1);
    CHECK(sign_at_root(iso.p, br, lin(-2, 1)) == -1);
    // h vanishes inside the bracket but not at the root, forcing bisection.
    CHECK(sign_at_root(iso.p, br, lin(-3, 2)) == -1);
    CHECK(sign_at_root(iso.p, br, Poly{}) == 0);

    RootBracket ex{rat(3, 2), rat(3, 2), true, rat(3, 2)};
    CHECK(sign_at_root(p, ex, lin(-3, 2)) == 0);
    CHECK(sign_at_root(p, ex, lin(0, 1)) == 1);
    CHECK(sign_at_root(p, ex, lin(-2, 1)) == -1);
}

TEST_CASE("boundary pieces on the fixtures") {
    Built b1 = build(load(tt_test::T1));
    CHECK(b1.L.empty());
    CHECK(b1.R.empty());
    REQUIRE(b1.pieces.size() == 2);
    for (const auto& pc : b1.pieces) {
        CHECK(pc.t0 == rat(0));
        CHECK(pc.t1 == rat(1));
        CHECK(pc.w_left == 0);
        CHECK(pc.w_right == 1);
    }

    Built b2 = build(load(tt_test::T2));
    REQUIRE(b2.pieces.size() == 3);
    for (const auto& pc : b2.pieces) {
        CHECK(pc.w_left == 0);
        CHECK(pc.w_right == 1);
    }

    // T3 by increasing x: (0,0), (2,4), (5,2), (7,6), (10,0) with vertex ids
    // 0, 4, 3, 2, 1. One prolongation per tree, both through the valley:
    // the left one continues (0,0)->(5,2) and hits (25/3, 10/3) on the last
    // edge, the right one continues (10,0)->(5,2) and hits (5/3, 10/3) on
    // the first edge.
    Built b3 = build(load(tt_test::T3));
    REQUIRE(b3.L.size() == 1);
    REQUIRE(b3.R.size() == 1);
    CHECK(b3.L[0].segment.dst == (PtQ{rat(25, 3), rat(10, 3)}));
    CHECK(b3.R[0].segment.dst == (PtQ{rat(5, 3), rat(10, 3)}));
    REQUIRE(b3.pieces.size() == 6);
    // id, edge, t0, t1, w_left, w_right
    struct Row {
        int edge;
        Rat t0, t1;
        int wl, wr;
    };
    std::vector<Row> want{
        {0, rat(0), rat(5, 6), 0, 1},  {0, rat(5, 6), rat(1), 0, 3}, {1, rat(0), rat(1), 0, 3},
        {2, rat(0), rat(1), 3, 1},     {3, rat(0), rat(4, 9), 3, 1}, {3, rat(4, 9), rat(1), 0, 1},
    };
    for (std::size_t i = 0; i < want.size(); ++i) {
        CAPTURE(i);
        CHECK(b3.pieces[i].id == static_cast<int>(i));
        CHECK(b3.pieces[i].edge == want[i].edge);
        CHECK(b3.pieces[i].t0 == want[i].t0);
        CHECK(b3.pieces[i].t1 == want[i].t1);
        CHECK(b3.pieces[i].w_left == want[i].wl);
        CHECK(b3.pieces[i].w_right == want[i].wr);
    }
}

TEST_CASE("vertex apex triangles") {
    Built b3 = build(load(tt_test::T3));
    GroundedTriangle<Rat> g = vertex_apex_triangle(b3.t, b3.tl, b3.trr, 2);
    CHECK(g.left_foot.x == rat(4));
    CHECK(g.right_foot.x == rat(10));
    CHECK(g.area == rat(18));
    g = vertex_apex_triangle(b3.t, b3.tl, b3.trr, 3);
    CHECK(g.left_foot.x == rat(0));
    CHECK(g.right_foot.x == rat(10));
    CHECK(g.area == rat(10));
    g = vertex_apex_triangle(b3.t, b3.tl, b3.trr, 4);
    CHECK(g.left_foot.x == rat(0));
    CHECK(g.right_foot.x == rat(8));
    CHECK(g.area == rat(16));

    Built b2 = build(load(tt_test::T2));
    for (int v : {2, 3}) {
        g = vertex_apex_triangle(b2.t, b2.tl, b2.trr, v);
        CHECK(g.area == rat(20));
    }
}

TEST_CASE("piece maximization on the fixtures") {
    Built b1 = build(load(tt_test::T1));
    for (const auto& pc : b1.pieces) {
        auto best = best_apex_on_piece(b1.t, pc);
        REQUIRE(best.has_value());
        CHECK(best->triangle.area == rat(25));
        CHECK(best->triangle.apex == (PtQ{rat(5), rat(5)}));
        CHECK(std::get<BoundaryApex>(best->provenance).piece == pc.id);
    }

    Built b2 = build(load(tt_test::T2));
    auto best = best_apex_on_piece(b2.t, b2.pieces[1]);
    REQUIRE(best.has_value());
    CHECK(best->triangle.area == rat(20));
    CHECK(best->triangle.apex == (PtQ{rat(2), rat(4)}));
    best = best_apex_on_piece(b2.t, b2.pieces[2]);
    REQUIRE(best.has_value());
    CHECK(best->triangle.area == rat(20));
    CHECK(best->triangle.apex == (PtQ{rat(8), rat(4)}));

    Built b3 = build(load(tt_test::T3));
    // Piece 4 carries the optimum at its left end; its area function dips to
    // a local minimum of 16 at t = 1/3 before rising to 50/3 at the cut.
    best = best_apex_on_piece(b3.t, b3.pieces[4]);
    REQUIRE(best.has_value());
    CHECK(best->triangle.area == rat(18));
    CHECK(best->triangle.apex == (PtQ{rat(7), rat(6)}));
    CHECK(best->triangle.left_foot.x == rat(4));
    // Piece 5 starts at the prolongation hit; its far end is the base corner
    // and is skipped.
    best = best_apex_on_piece(b3.t, b3.pieces[5]);
    REQUIRE(best.has_value());
    CHECK(best->triangle.area == rat(50, 3));
    CHECK(best->triangle.apex == (PtQ{rat(25, 3), rat(10, 3)}));
    // Piece 3 begins at the valley, which is its own left tangent; only the
    // peak end counts.
    best = best_apex_on_piece(b3.t, b3.pieces[3]);
    REQUIRE(best.has_value());
    CHECK(best->triangle.area == rat(18));
    CHECK(best->triangle.apex == (PtQ{rat(7), rat(6)}));
    // Piece 2 slides the apex down from (2,4) toward the valley; the right
    // side lies along the edge, so the foot stays at x = 8.
    best = best_apex_on_piece(b3.t, b3.pieces[2]);
    REQUIRE(best.has_value());
    CHECK(best->triangle.area == rat(16));
    CHECK(best->triangle.apex == (PtQ{rat(2), rat(4)}));
    CHECK(best->triangle.right_foot.x == rat(8));
    best = best_apex_on_piece(b3.t, b3.pieces[0]);
    REQUIRE(best.has_value());
    CHECK(best->triangle.area == rat(50, 3));
    CHECK(best->triangle.apex == (PtQ{rat(5, 3), rat(10, 3)}));
    best = best_apex_on_piece(b3.t, b3.pieces[1]);
    REQUIRE(best.has_value());
    CHECK(best->triangle.area == rat(50, 3));
    CHECK(best->triangle.apex == (PtQ{rat(5, 3), rat(10, 3)}));
}

TEST_CASE("boundary search on the fixtures") {
    Built b1 = build(load(tt_test::T1));
    auto best = best_boundary_apex(b1.t, b1.tl, b1.trr, b1.pieces);
    REQUIRE(best.has_value());
    CHECK(best->triangle.area == rat(25));
    CHECK(best->triangle.apex == (PtQ{rat(5), rat(5)}));

    best = best_boundary_apex(load(tt_test::T2));
    REQUIRE(best.has_value());
    CHECK(best->triangle.area == rat(20));
    CHECK(best->triangle.apex == (PtQ{rat(2), rat(4)}));

    best = best_boundary_apex(load(tt_test::T3));
    REQUIRE(best.has_value());
    CHECK(best->triangle.area == rat(18));
    CHECK(best->triangle.apex == (PtQ{rat(7), rat(6)}));
    CHECK(best->triangle.left_foot.x == rat(4));
    CHECK(best->triangle.right_foot.x == rat(10));

    // Convex once normalized; the highest vertex wins.
    best = best_boundary_apex(load(tt_test::T3_SHEARED));
    REQUIRE(best.has_value());
    CHECK(best->triangle.area == rat(30));
    CHECK(best->triangle.apex == (PtQ{rat(2), rat(6)}));
}

TEST_CASE("random terrains agree with the tangent-scan oracle") {
    int checked = 0;
    for (int n : {4, 6, 9, 13}) {
        for (Profile profile : {Profile::Uniform, Profile::Spiky, Profile::Plateau}) {
            for (int rep = 0; rep < 2; ++rep) {
                std::uint64_t seed = 3000 + 17 * static_cast<std::uint64_t>(n) + rep;
                TerrainQ t = generate_terrain(n, seed, profile);
                Built b = build(t);
                CHECK(b.pieces.size() <= static_cast<std::size_t>(t.n()) + b.L.size() + b.R.size());
                CHECK(b.pieces.front().w_left == 0);
                CHECK(b.pieces.back().w_right == 1);

                // The fixed tangents of every piece must reproduce the
                // brute-force tangent scan wherever the apex is not a vertex
                // of the piece's own tangency.
                for (const auto& pc : b.pieces) {
                    const PtQ& a = t.pt_by_x(pc.edge);
                    const PtQ& bb = t.pt_by_x(pc.edge + 1);
                    Rat tmid = (pc.t0 + pc.t1) / 2;
                    for (const Rat& tt : {pc.t0, tmid, pc.t1}) {
                        PtQ p{a.x + tt * (bb.x - a.x), a.y + tt * (bb.y - a.y)};
                        const PtQ& wl = t.vertices[pc.w_left];
                        const PtQ& wr = t.vertices[pc.w_right];
                        if (p.y == t.base_y() || p.y == wl.y || p.y == wr.y) continue;
                        auto scan = boundary_candidate_at(t, p);
                        REQUIRE(scan.has_value());
                        CHECK(scan->left_foot.x == detail::tangent_foot(t, wl, p));
                        CHECK(scan->right_foot.x == detail::tangent_foot(t, wr, p));
                    }
                }

                // Exact agreement: no piece interior ever beat its ends on
                // these inputs, so the best boundary apex equals the best
                // candidate over vertices and piece ends.
                auto best = best_boundary_apex(t, b.tl, b.trr, b.pieces);
                REQUIRE(best.has_value());
                CHECK(check_triangle_valid(t, best->triangle));
                std::optional<GroundedTriangle<Rat>> expect;
                auto consider = [&](const std::optional<GroundedTriangle<Rat>>& g) {
                    if (!g) return;
                    if (!expect || tri_prefers(*g, *expect)) expect = *g;
                };
                for (int k = 1; k + 1 < t.n(); ++k) consider(boundary_candidate_at(t, t.pt_by_x(k)));
                for (const auto& pc : b.pieces) {
                    const PtQ& a = t.pt_by_x(pc.edge);
                    const PtQ& bb = t.pt_by_x(pc.edge + 1);
                    for (const Rat& tt : {pc.t0, pc.t1}) {
                        PtQ p{a.x + tt * (bb.x - a.x), a.y + tt * (bb.y - a.y)};
                        if (p.y == t.base_y()) continue;
                        consider(boundary_candidate_at(t, p));
                    }
                }
                REQUIRE(expect.has_value());
                CHECK(best->triangle.area == expect->area);
                CHECK(best->triangle.apex == expect->apex);

                // Dense sampling never exceeds the reported optimum.
                OracleReport<Rat> dense = oracle_boundary(t, 9);
                CHECK(dense.best.triangle.area <= best->triangle.area);
                ++checked;
            }
        }
    }
    CHECK(checked == 24);
}

TEST_CASE("interior search on the fixtures") {
    SUBCASE("convex terrains have no prolongations") {
        for (const char* text : {tt_test::T1, tt_test::T2}) {
            Built b = build(load(text));
            CHECK(b.L.empty());
            CHECK(b.R.empty());
        }
    }

    SUBCASE("the one crossing pair of T3 is a touch at the valley") {
        Built b = build(load(tt_test::T3));
        REQUIRE(b.L.size() == 1);
        REQUIRE(b.R.size() == 1);
        auto s = make_interior_search(b.t, b.L, b.R);

        REQUIRE(s.hst.xs.size() == 3);
        CHECK(s.hst.xs[0] == rat(5, 3));
        CHECK(s.hst.xs[1] == rat(5));
        CHECK(s.hst.xs[2] == rat(25, 3));

        // Both segments meet only at the reflex vertex (5,2), so no node
        // builds a matrix; the rescue list of the right leaf carries them.
        for (int v = 0; v < static_cast<int>(s.hst.nodes.size()); ++v)
            CHECK(node_matrices(s, v).empty());
        REQUIRE(s.rescue.size() == 2);
        CHECK(s.rescue[0].empty());
        REQUIRE(s.rescue[1].size() == 1);
        CHECK(s.rescue[1][0] == std::pair<int, int>(0, 0));

        auto g = crossing_triangle(s, 0, 0);
        CHECK(g.apex == PtQ{rat(5), rat(2)});
        CHECK(g.left_foot.x == rat(0));
        CHECK(g.right_foot.x == rat(10));
        CHECK(g.area == rat(10));

        auto best = best_interior_apex(s);
        REQUIRE(best.has_value());
        CHECK(best->triangle.area == rat(10));
        CHECK(best->triangle.apex == g.apex);
        REQUIRE(std::holds_alternative<InteriorApex>(best->provenance));
        InteriorApex ia = std::get<InteriorApex>(best->provenance);
        CHECK(ia.i == 0);
        CHECK(ia.j == 0);
        CHECK(s.hst.nodes[ia.node].leaf_idx == 1);
    }
}

namespace {

struct InteriorStats {
    bool built = false;
    long proper = 0;
    long maxdim = 0;
};

// Cross-checks the whole interior machinery on one terrain against a
// quadratic enumeration of prolongation pairs. Returns a few size figures
// so callers can assert an instance was not trivially empty.
InteriorStats exercise_interior(const TerrainQ& t) {
    InteriorStats stats;
    Built b = build(t);
    if (b.L.empty() || b.R.empty()) return stats;
    auto s = make_interior_search(b.t, b.L, b.R);
    stats.built = true;
    {

        // Every pair either crosses properly (strictly inside both
        // x-extents), touches in a shared endpoint, or misses.
        std::vector<std::pair<int, int>> proper, touching;
        for (int l = 0; l < static_cast<int>(s.ls.size()); ++l) {
            for (int r = 0; r < static_cast<int>(s.rs.size()); ++r) {
                const DirSegQ& a = s.ls[l];
                const DirSegQ& bb = s.rs[r];
                PtQ p = detail::line_cross(a, bb);
                bool shares = a.src == bb.src || a.src == bb.dst ||
                              a.dst == bb.src || a.dst == bb.dst;
                bool on_l = a.src.x <= p.x && p.x <= a.dst.x;
                bool on_r = bb.dst.x <= p.x && p.x <= bb.src.x;
                bool strict = a.src.x < p.x && p.x < a.dst.x &&
                              bb.dst.x < p.x && p.x < bb.src.x;
                if (strict) {
                    CHECK(!shares);
                    proper.push_back({l, r});
                } else if (on_l && on_r) {
                    // A non-strict intersection is always a shared
                    // endpoint, never an endpoint inside the other.
                    REQUIRE(shares);
                    touching.push_back({l, r});
                }
            }
        }

        stats.proper = static_cast<long>(proper.size());
        std::vector<std::pair<int, int>> charged, rescued;
        for (int v = 0; v < static_cast<int>(s.hst.nodes.size()); ++v) {
            for (const auto& m : node_matrices(s, v)) {
                stats.maxdim =
                    std::max(stats.maxdim, static_cast<long>(m.oracle.rows) * m.oracle.cols);
                for (int i = 0; i < m.oracle.rows; ++i) {
                    int areas = 0;
                    int last_kind = MatrixEntryQ::PosEpsK;
                    for (int j = 0; j < m.oracle.cols; ++j) {
                        MatrixEntryQ e = m.oracle.at(i, j);
                        if (e.kind == MatrixEntryQ::AreaK) {
                            ++areas;
                            CHECK(last_kind != MatrixEntryQ::NegEpsK);
                            charged.push_back({m.row_ids[i], m.col_ids[j]});
                        } else if (e.kind == MatrixEntryQ::PosEpsK) {
                            CHECK(last_kind == MatrixEntryQ::PosEpsK);
                            CHECK(m.kind != ContextKind::HerStd);
                        } else {
                            CHECK(m.kind != ContextKind::StdHer);
                        }
                        last_kind = e.kind;
                    }
                    if (m.kind == ContextKind::StdStd) CHECK(areas > 0);
                }
                if (m.oracle.rows * m.oracle.cols <= 200)
                    CHECK(is_totally_monotone(m.oracle));
                CHECK(row_maxima(m.oracle) == naive_row_maxima(m.oracle));
            }
            const auto& nd = s.hst.nodes[v];
            if (nd.leaf_idx >= 0)
                for (const auto& pr : s.rescue[nd.leaf_idx]) rescued.push_back(pr);

            // Base feet order along the sorted standard lists.
            for (std::size_t i = 1; i < nd.lv.size(); ++i)
                CHECK(s.L[nd.lv[i - 1]].base_foot_x > s.L[nd.lv[i]].base_foot_x);
            for (std::size_t i = 1; i < nd.rv.size(); ++i)
                CHECK(s.R[nd.rv[i - 1]].base_foot_x < s.R[nd.rv[i]].base_foot_x);

            // A partial-span segment never ends strictly below a
            // full-span segment of the other side inside the strip.
            for (int r : nd.rh)
                for (const PtQ& e : {s.rs[r].src, s.rs[r].dst})
                    if (nd.lo < e.x && e.x < nd.hi)
                        for (int l : nd.lv) CHECK(!(e.y < s.y_l(l, e.x)));
            for (int l : nd.lh)
                for (const PtQ& e : {s.ls[l].src, s.ls[l].dst})
                    if (nd.lo < e.x && e.x < nd.hi)
                        for (int r : nd.rv) CHECK(!(e.y < s.y_r(r, e.x)));
        }

        auto canon = [](std::vector<std::pair<int, int>> v) {
            std::sort(v.begin(), v.end());
            return v;
        };
        CHECK(canon(charged) == canon(proper));
        CHECK(canon(rescued) == canon(touching));

        std::optional<GroundedTriangle<Rat>> expect;
        for (const auto& list : {proper, touching})
            for (const auto& [l, r] : list) {
                GroundedTriangle<Rat> g = crossing_triangle(s, l, r);
                if (!expect || tri_prefers(g, *expect)) expect = g;
            }
        auto best = best_interior_apex(s);
        CHECK(best.has_value() == expect.has_value());
        if (best && expect) {
            CHECK(best->triangle.area == expect->area);
            CHECK(best->triangle.apex == expect->apex);
        }
    }
    return stats;
}

using tt_test::crown_text;

} // namespace

TEST_CASE("interior search agrees with pairwise enumeration") {
    int built = 0;
    for (int n : {6, 10, 14, 19, 24})
        for (Profile profile : {Profile::Uniform, Profile::Spiky, Profile::Plateau})
            for (int rep = 0; rep < 2; ++rep) {
                std::uint64_t seed = 7100 + 23 * static_cast<std::uint64_t>(n) + rep;
                if (exercise_interior(generate_terrain(n, seed, profile)).built) ++built;
            }
    CHECK(built >= 20);
}

TEST_CASE("staircase terrains fill larger interaction matrices") {
    for (int k : {3, 4, 5, 6, 7}) {
        InteriorStats st = exercise_interior(load(crown_text(k, 1).c_str()));
        CHECK(st.built);
        CHECK(st.proper >= 3L * k);
        long side = std::min<long>(k - 1, 4);
        CHECK(st.maxdim >= side * side);
    }
    // An uneven pair of staircases; prolongation counts differ per side.
    InteriorStats st = exercise_interior(load(crown_text(6, 3).c_str()));
    CHECK(st.built);
    CHECK(st.proper >= 18);
}

TEST_CASE("solve on the fixtures") {
    SUBCASE("triangle input returns itself") {
        SolveResultQ r = solve(load(tt_test::T1));
        CHECK(r.kind == SolveCase::WholeTerrain);
        CHECK(r.triangle.area == rat(25));
        CHECK(r.triangle.apex == PtQ{rat(5), rat(5)});
        CHECK(r.triangle.left_foot == PtQ{rat(0), rat(0)});
        CHECK(r.triangle.right_foot == PtQ{rat(10), rat(0)});
        CHECK(std::holds_alternative<WholeTerrain>(r.provenance));
    }

    SUBCASE("flat top") {
        SolveResultQ r = solve(load(tt_test::T2));
        CHECK(r.kind == SolveCase::BoundaryApex);
        CHECK(r.triangle.area == rat(20));
        CHECK(r.triangle.apex == PtQ{rat(2), rat(4)});
    }

    SUBCASE("boundary apex beats the valley crossing") {
        SolveResultQ r = solve(load(tt_test::T3), true);
        CHECK(r.kind == SolveCase::BoundaryApex);
        CHECK(r.triangle.area == rat(18));
        CHECK(r.triangle.apex == PtQ{rat(7), rat(6)});
        CHECK(r.triangle.left_foot == PtQ{rat(4), rat(0)});
        CHECK(r.triangle.right_foot == PtQ{rat(10), rat(0)});
        CHECK(r.normalized.apex == r.triangle.apex);
        CHECK(r.stats.pieces == 6);
        CHECK(r.stats.prolongations_l == 1);
        CHECK(r.stats.prolongations_r == 1);
    }

    SUBCASE("sheared input is answered in input coordinates") {
        SolveResultQ r = solve(load(tt_test::T3_SHEARED));
        CHECK(r.triangle.area == rat(30));
        CHECK(r.triangle.apex == PtQ{rat(2), rat(7)});
        CHECK(r.triangle.left_foot == PtQ{rat(0), rat(0)});
        CHECK(r.triangle.right_foot == PtQ{rat(10), rat(5)});
        CHECK(r.normalized.apex == PtQ{rat(2), rat(6)});
        CHECK(r.normalized.area == rat(30));
    }

    SUBCASE("staircase terrains solve with the minor check enabled") {
        for (int k : {3, 5, 7}) {
            TerrainQ t = load(crown_text(k, 1).c_str());
            SolveResultQ r = solve(t, true);
            CHECK(check_triangle_valid(t, r.normalized));
            OracleReport<Rat> o = oracle_solve(t, 9);
            CHECK(o.best.triangle.area <= r.normalized.area);
        }
    }
}

TEST_CASE("solve matches the oracle candidate space") {
    int checked = 0;
    for (int n : {4, 7, 10, 13, 17}) {
        for (Profile profile : {Profile::Uniform, Profile::Spiky, Profile::Plateau}) {
            std::uint64_t seed = 5200 + 13 * static_cast<std::uint64_t>(n);
            TerrainQ t = generate_terrain(n, seed, profile);
            Built b = build(t);
            SolveResultQ r = solve(t, true);
            CHECK(check_triangle_valid(t, r.normalized));

            // Independent candidate space: all interior pairs by brute force,
            // plus tangent-scan apices at vertices and piece endpoints.
            std::optional<Rat> want;
            auto consider = [&](const std::optional<GroundedTriangle<Rat>>& g) {
                if (g && (!want || g->area > *want)) want = g->area;
            };
            if (auto oi = oracle_interior(t)) consider(oi->best.triangle);
            for (int k = 1; k + 1 < t.n(); ++k) consider(boundary_candidate_at(t, t.pt_by_x(k)));
            for (const auto& pc : b.pieces) {
                const PtQ& pa = t.pt_by_x(pc.edge);
                const PtQ& pb = t.pt_by_x(pc.edge + 1);
                for (const Rat& tt : {pc.t0, pc.t1}) {
                    PtQ p{pa.x + tt * (pb.x - pa.x), pa.y + tt * (pb.y - pa.y)};
                    if (p.y == t.base_y()) continue;
                    consider(boundary_candidate_at(t, p));
                }
            }
            REQUIRE(want.has_value());
            CHECK(r.normalized.area == *want);
            CHECK(oracle_solve(t, 6).best.triangle.area <= r.normalized.area);
            ++checked;
        }
    }
    CHECK(checked == 15);
}

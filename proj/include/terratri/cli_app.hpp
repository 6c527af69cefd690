// Command-line front end. run_cli takes explicit argument and stream objects
// so the whole surface is exercisable in-process by the unit tests; main() is
// a one-line forwarder. Exit codes: 0 success, 1 bad input or runtime failure,
// 2 command-line usage error.
#ifndef TERRATRI_CLI_APP_HPP
#define TERRATRI_CLI_APP_HPP

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "terratri/generate.hpp"
#include "terratri/oracle.hpp"
#include "terratri/solve.hpp"
#include "terratri/svg.hpp"

namespace terratri::cli {

using Json = nlohmann::ordered_json;

struct RunConfig {
    std::string input = "-";
    bool json_out = false;
    bool timings = false;
    bool debug_monotonicity = false;
    bool full_gp = false;
    std::string out_path;  // solve --svg, render -o
    int samples = 64;
    int n = 12;
    std::uint64_t seed = 0;
    std::string profile = "uniform";
    std::string sizes = "256,512,1024,2048";
    int reps = 3;
    bool no_terrain = false, no_base = false, no_trees = false;
    bool no_prolongations = false, no_backward = false, no_triangle = false;
    bool dump_spt = false, dump_hst = false;
};

namespace detail {

inline TerrainQ read_terrain(const std::string& path, std::istream& in) {
    if (path == "-") return parse_terrain(in);
    std::ifstream f(path);
    if (!f) throw SyntaxError("cannot open '" + path + "'");
    return parse_terrain(f);
}

inline void write_file(const std::string& path, const std::string& body) {
    std::ofstream f(path);
    if (!f) throw SyntaxError("cannot write '" + path + "'");
    f << body;
}

// Decimal companion of an exact value: 12 significant digits.
inline std::string approx_text(const Rat& v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", to_double(v));
    return buf;
}

inline double approx_value(const Rat& v) { return std::stod(approx_text(v)); }

inline std::string rat_text(const Rat& v) {
    std::string s = num_string(v);
    if (v.get_den() != 1) s += "/" + den_string(v);
    return s;
}

inline Json rat_json(const Rat& v) {
    return Json{{"num", num_string(v)}, {"den", den_string(v)}, {"approx", approx_value(v)}};
}

inline Json point_json(const PtQ& p) { return Json::array({rat_json(p.x), rat_json(p.y)}); }

inline Json triangle_json(const GroundedTriangle<Rat>& g) {
    return Json::array({point_json(g.apex), point_json(g.left_foot), point_json(g.right_foot)});
}

inline Json point_dump(const PtQ& p) { return Json::array({rat_text(p.x), rat_text(p.y)}); }

inline void write_triangle_text(std::ostream& out, const GroundedTriangle<Rat>& g) {
    out << "area " << rat_text(g.area) << " ~" << approx_text(g.area) << "\n";
    out << "apex " << rat_text(g.apex.x) << " " << rat_text(g.apex.y) << "\n";
    out << "left_foot " << rat_text(g.left_foot.x) << " " << rat_text(g.left_foot.y) << "\n";
    out << "right_foot " << rat_text(g.right_foot.x) << " " << rat_text(g.right_foot.y) << "\n";
}

inline const char* method_name(OracleMethod m) {
    switch (m) {
        case OracleMethod::TwoVertexLines: return "two_vertex_lines";
        case OracleMethod::BoundaryDense: return "boundary_dense";
        default: return "combined";
    }
}

inline std::vector<int> parse_sizes(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            pos = std::string::npos;
        }
        if (pos != tok.size() || v < 3)
            throw CLI::ValidationError("--sizes expects comma-separated integers >= 3");
        out.push_back(v);
    }
    if (out.empty()) throw CLI::ValidationError("--sizes expects at least one size");
    return out;
}

}  // namespace detail

inline int cmd_solve(const RunConfig& cfg, std::istream& in, std::ostream& out) {
    TerrainQ t = detail::read_terrain(cfg.input, in);
    SolveResultQ r = solve(t, cfg.debug_monotonicity);
    if (!cfg.out_path.empty())
        detail::write_file(cfg.out_path, render_svg(t, r.normalized));
    if (cfg.json_out) {
        Json j;
        j["area"] = detail::rat_json(r.triangle.area);
        j["triangle"] = detail::triangle_json(r.triangle);
        j["case"] = solve_case_name(r.kind);
        j["n"] = t.n();
        if (cfg.timings)
            j["timings_ms"] = Json{{"build", r.timings.build_ms},
                                   {"boundary", r.timings.boundary_ms},
                                   {"interior", r.timings.interior_ms},
                                   {"total", r.timings.total_ms}};
        out << j.dump(2) << "\n";
    } else {
        out << "case " << solve_case_name(r.kind) << "\n";
        out << "n " << t.n() << "\n";
        detail::write_triangle_text(out, r.triangle);
        if (cfg.timings) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "total_ms %.3f\n", r.timings.total_ms);
            out << buf;
        }
    }
    return 0;
}

inline int cmd_oracle(const RunConfig& cfg, std::istream& in, std::ostream& out) {
    TerrainQ t = detail::read_terrain(cfg.input, in);
    auto rep = oracle_solve(t, cfg.samples);
    GroundedTriangle<Rat> tri = terratri::detail::unshear(t.shear, rep.best.triangle);
    if (cfg.json_out) {
        Json j;
        j["area"] = detail::rat_json(tri.area);
        j["triangle"] = detail::triangle_json(tri);
        j["method"] = detail::method_name(rep.method);
        j["candidates_examined"] = rep.candidates_examined;
        j["n"] = t.n();
        j["samples"] = cfg.samples;
        out << j.dump(2) << "\n";
    } else {
        out << "method " << detail::method_name(rep.method) << "\n";
        out << "n " << t.n() << "\n";
        out << "candidates " << rep.candidates_examined << "\n";
        detail::write_triangle_text(out, tri);
    }
    return 0;
}

inline int cmd_validate(const RunConfig& cfg, std::istream& in, std::ostream& out,
                        std::ostream& err) {
    TerrainQ t;
    try {
        t = detail::read_terrain(cfg.input, in);
    } catch (const ValidationError& e) {
        err << e.violation << "\n";
        return 1;
    }
    auto viol = validate(t, cfg.full_gp);
    if (!viol.empty()) {
        for (const auto& v : viol) err << v << "\n";
        return 1;
    }
    out << "valid\n";
    return 0;
}

inline int cmd_gen(const RunConfig& cfg, std::ostream& out) {
    TerrainQ t = generate_terrain(cfg.n, cfg.seed, parse_profile(cfg.profile));
    out << t.n() << "\n";
    for (const auto& v : t.vertices)
        out << detail::rat_text(v.x) << " " << detail::rat_text(v.y) << "\n";
    return 0;
}

inline int cmd_bench(const RunConfig& cfg, std::ostream& out) {
    auto sizes = detail::parse_sizes(cfg.sizes);
    Profile prof = parse_profile(cfg.profile);
    out << "n,time_ms,sum_list_sizes,nodes,pieces\n";
    for (int n : sizes) {
        TerrainQ t = generate_terrain(n, cfg.seed, prof);
        std::vector<double> times;
        SolveResultQ r;
        for (int rep = 0; rep < cfg.reps; ++rep) {
            r = solve(t);
            times.push_back(r.timings.total_ms);
        }
        std::sort(times.begin(), times.end());
        double med = times.size() % 2 == 1
                         ? times[times.size() / 2]
                         : (times[times.size() / 2 - 1] + times[times.size() / 2]) / 2;
        char buf[160];
        std::snprintf(buf, sizeof buf, "%d,%.3f,%zu,%zu,%zu\n", n, med, r.stats.sum_list_sizes,
                      r.stats.hst_nodes, r.stats.pieces);
        out << buf;
    }
    return 0;
}

inline int cmd_render(const RunConfig& cfg, std::istream& in, std::ostream& out) {
    TerrainQ t = detail::read_terrain(cfg.input, in);
    RenderOptions opt;
    opt.terrain = !cfg.no_terrain;
    opt.base = !cfg.no_base;
    opt.trees = !cfg.no_trees;
    opt.prolongations = !cfg.no_prolongations;
    opt.backward = !cfg.no_backward;
    opt.triangle = !cfg.no_triangle;
    std::optional<GroundedTriangle<Rat>> tri;
    if (opt.triangle) tri = solve(t).normalized;
    std::string svg = render_svg(t, tri, opt);
    if (cfg.out_path.empty())
        out << svg;
    else
        detail::write_file(cfg.out_path, svg);
    return 0;
}

inline int cmd_dump(const RunConfig& cfg, std::istream& in, std::ostream& out) {
    TerrainQ t = detail::read_terrain(cfg.input, in);
    Triangulation tr = triangulate(t);
    SPTree left_tree = shortest_path_tree(t, tr, 0);
    SPTree right_tree = shortest_path_tree(t, tr, 1);
    auto incidence = vertex_incidence(tr, t.n());
    auto L = forward_prolongations(t, tr, left_tree, &incidence);
    auto R = forward_prolongations(t, tr, right_tree, &incidence);

    Json j;
    j["n"] = t.n();
    if (cfg.dump_spt) {
        auto side = [&](const SPTree& tree, const std::vector<Prolongation<Rat>>& segs) {
            Json s;
            s["root"] = tree.root;
            s["parent"] = tree.parent;
            Json ps = Json::array();
            for (const auto& pr : segs) {
                Json p;
                p["p"] = pr.p;
                p["q"] = pr.q;
                p["src"] = detail::point_dump(pr.segment.src);
                p["dst"] = detail::point_dump(pr.segment.dst);
                p["base_foot_x"] = detail::rat_text(pr.base_foot_x);
                ps.push_back(std::move(p));
            }
            s["prolongations"] = std::move(ps);
            return s;
        };
        j["left"] = side(left_tree, L);
        j["right"] = side(right_tree, R);
    } else {
        j["segments"] = Json{{"l", L.size()}, {"r", R.size()}};
        Json xs = Json::array();
        Json nodes = Json::array();
        std::size_t total = 0;
        if (!L.empty() && !R.empty()) {
            auto s = make_interior_search(t, std::move(L), std::move(R));
            for (const auto& x : s.hst.xs) xs.push_back(detail::rat_text(x));
            for (const auto& nd : s.hst.nodes) {
                Json e;
                e["lo"] = detail::rat_text(nd.lo);
                e["hi"] = detail::rat_text(nd.hi);
                e["std_l"] = nd.lv.size();
                e["std_r"] = nd.rv.size();
                e["her_l"] = nd.lh.size();
                e["her_r"] = nd.rh.size();
                e["leaf"] = nd.leaf_idx;
                nodes.push_back(std::move(e));
            }
            total = s.hst.total_list_size();
        }
        j["xs"] = std::move(xs);
        j["nodes"] = std::move(nodes);
        j["total_list_size"] = total;
    }
    out << j.dump(2) << "\n";
    return 0;
}

inline int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
                   std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"largest-area triangle with one side on the base of a terrain", "terratri"};
    app.require_subcommand(1);

    auto add_input = [&](CLI::App* c) {
        c->add_option("input", cfg.input, "terrain file, '-' for stdin");
    };
    auto add_json = [&](CLI::App* c) {
        c->add_flag("--json", cfg.json_out, "emit JSON instead of text");
    };
    const std::vector<std::string> profiles{"uniform", "spiky", "plateau"};

    auto* c_solve = app.add_subcommand("solve", "compute a largest grounded triangle");
    add_input(c_solve);
    add_json(c_solve);
    c_solve->add_flag("--timings", cfg.timings, "include wall-clock timings in the output");
    c_solve->add_flag("--debug-monotonicity", cfg.debug_monotonicity,
                      "re-check matrix monotonicity while solving");
    c_solve->add_option("--svg", cfg.out_path, "also write an SVG rendering to this file");

    auto* c_oracle = app.add_subcommand("oracle", "brute-force reference answer");
    add_input(c_oracle);
    add_json(c_oracle);
    c_oracle->add_option("--samples", cfg.samples, "boundary sample points per edge")
        ->check(CLI::PositiveNumber);

    auto* c_validate = app.add_subcommand("validate", "check a terrain file");
    add_input(c_validate);
    c_validate->add_flag("--full-gp", cfg.full_gp,
                         "also scan every vertex triple for collinearity");

    auto* c_gen = app.add_subcommand("gen", "generate a random terrain");
    c_gen->add_option("-n,--vertices", cfg.n, "vertex count")->check(CLI::Range(3, 1 << 24));
    c_gen->add_option("--seed", cfg.seed, "RNG seed")->required();
    c_gen->add_option("--profile", cfg.profile, "height profile")
        ->check(CLI::IsMember(profiles));

    auto* c_bench = app.add_subcommand("bench", "time solve across sizes, CSV output");
    c_bench->add_option("--sizes", cfg.sizes, "comma-separated vertex counts");
    c_bench->add_option("--reps", cfg.reps, "repetitions per size")->check(CLI::PositiveNumber);
    c_bench->add_option("--seed", cfg.seed, "RNG seed")->required();
    c_bench->add_option("--profile", cfg.profile, "height profile")
        ->check(CLI::IsMember(profiles));

    auto* c_render = app.add_subcommand("render", "draw a terrain and its solution as SVG");
    add_input(c_render);
    c_render->add_option("-o,--out", cfg.out_path, "output file (default: stdout)");
    c_render->add_flag("--no-terrain", cfg.no_terrain, "omit the terrain outline");
    c_render->add_flag("--no-base", cfg.no_base, "omit the base segment");
    c_render->add_flag("--no-trees", cfg.no_trees, "omit the shortest-path tree edges");
    c_render->add_flag("--no-prolongations", cfg.no_prolongations,
                       "omit the forward prolongation segments");
    c_render->add_flag("--no-backward", cfg.no_backward,
                       "omit the dashed backward prolongations");
    c_render->add_flag("--no-triangle", cfg.no_triangle,
                       "omit the solution triangle (skips solving)");

    auto* c_dump = app.add_subcommand("dump", "JSON dumps of internal structures");
    add_input(c_dump);
    auto* what = c_dump->add_option_group("structure");
    what->add_flag("--spt", cfg.dump_spt, "shortest-path trees and prolongations");
    what->add_flag("--hst", cfg.dump_hst, "segment-tree nodes and list sizes");
    what->require_option(1);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_solve->parsed()) return cmd_solve(cfg, in, out);
        if (c_oracle->parsed()) return cmd_oracle(cfg, in, out);
        if (c_validate->parsed()) return cmd_validate(cfg, in, out, err);
        if (c_gen->parsed()) return cmd_gen(cfg, out);
        if (c_bench->parsed()) return cmd_bench(cfg, out);
        if (c_render->parsed()) return cmd_render(cfg, in, out);
        return cmd_dump(cfg, in, out);
    } catch (const CLI::Error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 1;
    }
}

inline int run_cli(int argc, char** argv, std::istream& in, std::ostream& out,
                   std::ostream& err) {
    return run_cli(std::vector<std::string>(argv + 1, argv + argc), in, out, err);
}

}  // namespace terratri::cli

#endif

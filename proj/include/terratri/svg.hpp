// Standalone SVG picture of a terrain in normal form: outline, base, the two
// shortest-path trees, forward prolongations per side, their dashed backward
// parts down to the base, and optionally a solution triangle. Coordinates are
// converted to double for display only, with a fixed format so identical
// inputs give identical bytes.
#pragma once

#include <cstdio>
#include <optional>
#include <string>

#include "terratri/spt.hpp"
#include "terratri/terrain.hpp"

namespace terratri {

struct RenderOptions {
    bool terrain = true;
    bool base = true;
    bool trees = true;
    bool prolongations = true;
    bool backward = true;
    bool triangle = true;
    double width = 840;  // drawing width in pixels, margins included
};

namespace detail {

inline std::string svg_num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return std::string(buf);
}

struct SvgFrame {
    double minx, maxy, scale, margin;
    std::string x(const Rat& v) const { return svg_num((to_double(v) - minx) * scale + margin); }
    std::string y(const Rat& v) const { return svg_num((maxy - to_double(v)) * scale + margin); }
};

inline void svg_line(std::string& out, const SvgFrame& f, const PtQ& a, const PtQ& b,
                     const std::string& style) {
    out += "<line x1=\"" + f.x(a.x) + "\" y1=\"" + f.y(a.y) + "\" x2=\"" + f.x(b.x) +
           "\" y2=\"" + f.y(b.y) + "\" " + style + "/>\n";
}

}  // namespace detail

inline std::string render_svg(const TerrainQ& t,
                              const std::optional<GroundedTriangle<Rat>>& tri,
                              const RenderOptions& opt = {}) {
    double minx = to_double(t.x_left()), maxx = to_double(t.x_right());
    double miny = to_double(t.base_y()), maxy = miny;
    for (const PtQ& p : t.vertices) maxy = std::max(maxy, to_double(p.y));
    if (maxx <= minx) maxx = minx + 1;
    if (maxy <= miny) maxy = miny + 1;

    detail::SvgFrame f;
    f.margin = opt.width / 21;
    f.scale = (opt.width - 2 * f.margin) / (maxx - minx);
    f.minx = minx;
    f.maxy = maxy;
    double height = (maxy - miny) * f.scale + 2 * f.margin;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::svg_num(opt.width) +
           "\" height=\"" + detail::svg_num(height) + "\" viewBox=\"0 0 " +
           detail::svg_num(opt.width) + " " + detail::svg_num(height) + "\">\n";

    if (opt.terrain) {
        out += "<g id=\"terrain\">\n<polygon points=\"";
        for (int i = 0; i < t.n(); ++i) {
            if (i) out += " ";
            out += f.x(t.vertices[i].x) + "," + f.y(t.vertices[i].y);
        }
        out += "\" fill=\"#f5f0e6\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n</g>\n";
    }
    if (opt.base) {
        out += "<g id=\"base\">\n";
        detail::svg_line(out, f, t.vertices[0], t.vertices[1],
                         "stroke=\"#222222\" stroke-width=\"3\"");
        out += "</g>\n";
    }

    if (opt.trees || opt.prolongations || opt.backward) {
        Triangulation tr = triangulate(t);
        SPTree left_tree = shortest_path_tree(t, tr, 0);
        SPTree right_tree = shortest_path_tree(t, tr, 1);
        auto incidence = vertex_incidence(tr, t.n());
        auto L = forward_prolongations(t, tr, left_tree, &incidence);
        auto R = forward_prolongations(t, tr, right_tree, &incidence);

        if (opt.trees) {
            out += "<g id=\"trees\">\n";
            for (int k = 0; k < t.n(); ++k)
                if (left_tree.parent[k] >= 0)
                    detail::svg_line(out, f, t.vertices[left_tree.parent[k]], t.vertices[k],
                                     "stroke=\"#7aa37a\" stroke-width=\"1\"");
            for (int k = 0; k < t.n(); ++k)
                if (right_tree.parent[k] >= 0)
                    detail::svg_line(out, f, t.vertices[right_tree.parent[k]], t.vertices[k],
                                     "stroke=\"#a37a7a\" stroke-width=\"1\"");
            out += "</g>\n";
        }
        if (opt.prolongations) {
            out += "<g id=\"prolongations\">\n";
            for (const auto& p : L)
                detail::svg_line(out, f, p.segment.src, p.segment.dst,
                                 "stroke=\"#1f77b4\" stroke-width=\"2\"");
            for (const auto& p : R)
                detail::svg_line(out, f, p.segment.src, p.segment.dst,
                                 "stroke=\"#d62728\" stroke-width=\"2\"");
            out += "</g>\n";
        }
        if (opt.backward) {
            out += "<g id=\"backward\">\n";
            for (const auto& p : L) {
                PtQ foot{p.base_foot_x, t.base_y()};
                detail::svg_line(out, f, foot, p.segment.src,
                                 "stroke=\"#1f77b4\" stroke-width=\"1\" stroke-dasharray=\"6 4\"");
            }
            for (const auto& p : R) {
                PtQ foot{p.base_foot_x, t.base_y()};
                detail::svg_line(out, f, foot, p.segment.src,
                                 "stroke=\"#d62728\" stroke-width=\"1\" stroke-dasharray=\"6 4\"");
            }
            out += "</g>\n";
        }
    }

    if (opt.triangle && tri) {
        out += "<g id=\"triangle\">\n<polygon points=\"";
        out += f.x(tri->left_foot.x) + "," + f.y(tri->left_foot.y) + " ";
        out += f.x(tri->apex.x) + "," + f.y(tri->apex.y) + " ";
        out += f.x(tri->right_foot.x) + "," + f.y(tri->right_foot.y);
        out += "\" fill=\"#ffcc33\" fill-opacity=\"0.45\" stroke=\"#cc8800\" stroke-width=\"2\"/>\n</g>\n";
    }

    out += "</svg>\n";
    return out;
}

}  // namespace terratri

#include "naxes/svg_render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "naxes/circles.hpp"
#include "naxes/ngon.hpp"
#include "naxes/theorems.hpp"

namespace naxes {

namespace {

std::string num(double v) {
    if (v == 0.0) v = 0.0; // collapse -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

struct Pt {
    double x, y;
};

// Screen space flips y so the figure keeps its usual orientation.
Pt screen(const ProjPoint& p) {
    return {p.affine_x().to_double(), -p.affine_y().to_double()};
}

struct Box {
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    bool empty = true;

    void add(double x, double y) {
        if (empty) {
            x0 = x1 = x;
            y0 = y1 = y;
            empty = false;
            return;
        }
        x0 = std::min(x0, x);
        x1 = std::max(x1, x);
        y0 = std::min(y0, y);
        y1 = std::max(y1, y);
    }
};

struct Seg {
    double x1, y1, x2, y2;
};

// Liang-Barsky clip of a segment to the box; false when nothing is left.
bool clip_segment(Seg& s, const Box& b) {
    double dx = s.x2 - s.x1, dy = s.y2 - s.y1;
    double t0 = 0.0, t1 = 1.0;
    const double p[4] = {-dx, dx, -dy, dy};
    const double q[4] = {s.x1 - b.x0, b.x1 - s.x1, s.y1 - b.y0, b.y1 - s.y1};
    for (int k = 0; k < 4; ++k) {
        if (p[k] == 0.0) {
            if (q[k] < 0.0) return false;
            continue;
        }
        double r = q[k] / p[k];
        if (p[k] < 0.0) {
            if (r > t1) return false;
            t0 = std::max(t0, r);
        } else {
            if (r < t0) return false;
            t1 = std::min(t1, r);
        }
    }
    Seg out{s.x1 + t0 * dx, s.y1 + t0 * dy, s.x1 + t1 * dx, s.y1 + t1 * dy};
    s = out;
    return true;
}

// The visible piece of the full line ux + vy + w = 0 (screen coords).
bool line_in_box(double u, double v, double w, const Box& b, Seg& out) {
    double n2 = u * u + v * v;
    if (n2 == 0.0) return false;
    double cx = (b.x0 + b.x1) / 2, cy = (b.y0 + b.y1) / 2;
    double d = (u * cx + v * cy + w) / n2;
    double px = cx - d * u, py = cy - d * v; // foot of the center on the line
    double len = std::hypot(b.x1 - b.x0, b.y1 - b.y0) + 1.0;
    double dx = v / std::sqrt(n2), dy = -u / std::sqrt(n2);
    out = {px - len * dx, py - len * dy, px + len * dx, py + len * dy};
    return clip_segment(out, b);
}

struct Scene {
    std::vector<Pt> vertices;
    std::vector<Pt> corners;
    std::vector<std::array<double, 3>> sides;  // screen line coefficients
    std::vector<std::array<double, 3>> axes;
    std::vector<std::array<double, 3>> helpers; // parallel-construction lines
    std::vector<std::array<double, 3>> circles; // cx, cy, r
    std::optional<Pt> center;
};

std::array<double, 3> screen_line(const ProjLine& l) {
    return {l.u().to_double(), -l.v().to_double(), l.w().to_double()};
}

Scene build_scene(const std::vector<ProjPoint>& pts, const RenderOptions& opts) {
    const int n = static_cast<int>(pts.size());
    auto at = [&](int i) -> const ProjPoint& { return pts[((i - 1) % n + n) % n]; };

    Scene sc;
    for (const ProjPoint& p : pts) sc.vertices.push_back(screen(p));

    std::vector<ProjLine> l;
    for (int i = 1; i <= n; ++i) l.push_back(join(at(i - 1), at(i + 1)));
    auto side = [&](int i) -> const ProjLine& { return l[((i - 1) % n + n) % n]; };
    for (const ProjLine& li : l) sc.sides.push_back(screen_line(li));

    std::vector<ProjPoint> B;
    for (int i = 1; i <= n; ++i) B.push_back(meet(side(i), side(i + 1)));
    auto corner = [&](int i) -> const ProjPoint& { return B[((i - 1) % n + n) % n]; };
    for (const ProjPoint& b : B)
        if (!b.is_infinite()) sc.corners.push_back(screen(b));

    if (opts.show_circles) {
        for (int i = 1; i <= n; ++i) {
            Circle c = corner(i) == at(i + 1) ? circle_tangent(at(i), at(i + 1), side(i))
                       : corner(i) == at(i)   ? circle_tangent(at(i + 1), at(i), side(i + 1))
                                              : circle_through(at(i), corner(i), at(i + 1));
            double cx = -c.D().to_double() / 2;
            double cy = c.E().to_double() / 2; // screen flip
            Scalar r2 = (c.D() * c.D() + c.E() * c.E()) / Scalar::from_int(c.field(), 4) - c.F();
            sc.circles.push_back({cx, cy, std::sqrt(std::max(0.0, r2.to_double()))});
        }
    }

    std::vector<ProjLine> g;
    for (int i = 1; i <= n; ++i) {
        if (incident(at(i), side(i))) {
            g.push_back(axis_degenerate(at(i - 1), at(i + 1), at(i), side(i - 1), side(i + 1)).g);
            continue;
        }
        CollinearQuad q =
            CollinearQuad::make(side(i), at(i - 1), corner(i - 1), corner(i), at(i + 1));
        g.push_back(axis_from_outside(q, at(i)).g);
        if (opts.show_parallel_construction) {
            sc.helpers.push_back(screen_line(parallel_through(side(i + 1), at(i - 1))));
            sc.helpers.push_back(screen_line(parallel_through(side(i - 1), at(i + 1))));
        }
    }
    if (opts.show_axes)
        for (const ProjLine& gi : g) sc.axes.push_back(screen_line(gi));

    PencilResult pr = pencil_of(g);
    if (pr.kind == PencilKind::FiniteCenter) sc.center = screen(*pr.center);
    return sc;
}

} // namespace

std::string render_svg(const std::vector<ProjPoint>& points, const RenderOptions& opts) {
    if (points.empty()) throw MathError("nothing to render");
    if (!points.front().field().is_rational()) throw MathError("rendering requires rational field");

    try {
        NgonConfig::validate(points);
    } catch (const InvalidConfig&) {
        bool degenerate_ok = false;
        if (points.size() == 5) {
            try {
                check_degenerate_five(points);
                degenerate_ok = true;
            } catch (const Error&) {
            }
        }
        if (!degenerate_ok) throw;
    }

    Scene sc = build_scene(points, opts);

    Box box;
    if (opts.viewbox) {
        const auto& v = *opts.viewbox;
        box.add(v[0], v[1]);
        box.add(v[0] + v[2], v[1] + v[3]);
    } else {
        for (const Pt& p : sc.vertices) box.add(p.x, p.y);
        for (const Pt& p : sc.corners) box.add(p.x, p.y);
        if (sc.center) box.add(sc.center->x, sc.center->y);
        for (const auto& c : sc.circles) {
            box.add(c[0] - c[2], c[1] - c[2]);
            box.add(c[0] + c[2], c[1] + c[2]);
        }
        double padx = 0.05 * std::max(box.x1 - box.x0, 1e-9);
        double pady = 0.05 * std::max(box.y1 - box.y0, 1e-9);
        if (box.x1 - box.x0 < 1e-9) padx = 1.0;
        if (box.y1 - box.y0 < 1e-9) pady = 1.0;
        box.add(box.x0 - padx, box.y0 - pady);
        box.add(box.x1 + padx, box.y1 + pady);
    }

    const double w = box.x1 - box.x0, h = box.y1 - box.y0;
    const double dim = std::max(w, h);
    const double pxw = w >= h ? opts.size : opts.size * w / h;
    const double pxh = w >= h ? opts.size * h / w : opts.size;
    const double stroke = 0.003 * dim;
    const double dot = 0.008 * dim;
    const double font = 0.03 * dim;

    std::string s;
    auto seg_tag = [&](const std::array<double, 3>& lc, const char* cls) {
        Seg sg{};
        if (!line_in_box(lc[0], lc[1], lc[2], box, sg)) return;
        s += "  <line class=\"" + std::string(cls) + "\" x1=\"" + num(sg.x1) + "\" y1=\"" +
             num(sg.y1) + "\" x2=\"" + num(sg.x2) + "\" y2=\"" + num(sg.y2) + "\"/>\n";
    };

    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(pxw) + "\" height=\"" +
         num(pxh) + "\" viewBox=\"" + num(box.x0) + " " + num(box.y0) + " " + num(w) + " " +
         num(h) + "\">\n";
    s += "<style>\n"
         "  line { stroke-width: " + num(stroke) + "; fill: none; }\n"
         "  circle.arc { stroke: #2aa876; stroke-width: " + num(stroke) + "; fill: none; }\n"
         "  .side { stroke: #444444; }\n"
         "  .axis { stroke: #0066cc; }\n"
         "  .helper { stroke: #99cc66; stroke-dasharray: " + num(3 * stroke) + "; }\n"
         "  .vertex { fill: #cc3333; }\n"
         "  .corner { fill: #444444; }\n"
         "  .center { fill: #0066cc; }\n"
         "  text { font-family: sans-serif; font-size: " + num(font) + "px; fill: #222222; }\n"
         "</style>\n";

    s += "<g class=\"circles\">\n";
    for (const auto& c : sc.circles)
        s += "  <circle class=\"arc\" cx=\"" + num(c[0]) + "\" cy=\"" + num(c[1]) + "\" r=\"" +
             num(c[2]) + "\"/>\n";
    s += "</g>\n<g class=\"sides\">\n";
    for (const auto& lc : sc.sides) seg_tag(lc, "side");
    s += "</g>\n<g class=\"construction\">\n";
    for (const auto& lc : sc.helpers) seg_tag(lc, "helper");
    s += "</g>\n<g class=\"axes\">\n";
    for (const auto& lc : sc.axes) seg_tag(lc, "axis");
    s += "</g>\n<g class=\"points\">\n";
    for (size_t i = 0; i < sc.vertices.size(); ++i) {
        const Pt& p = sc.vertices[i];
        s += "  <circle class=\"vertex\" cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) + "\" r=\"" +
             num(dot) + "\"/>\n";
        s += "  <text x=\"" + num(p.x + 1.5 * dot) + "\" y=\"" + num(p.y - 1.5 * dot) + "\">A" +
             std::to_string(i + 1) + "</text>\n";
    }
    for (const Pt& p : sc.corners)
        s += "  <circle class=\"corner\" cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) + "\" r=\"" +
             num(0.7 * dot) + "\"/>\n";
    if (sc.center) {
        s += "  <circle class=\"center\" cx=\"" + num(sc.center->x) + "\" cy=\"" +
             num(sc.center->y) + "\" r=\"" + num(dot) + "\"/>\n";
        s += "  <text x=\"" + num(sc.center->x + 1.5 * dot) + "\" y=\"" +
             num(sc.center->y - 1.5 * dot) + "\">M</text>\n";
    }
    s += "</g>\n</svg>\n";
    return s;
}

} // namespace naxes

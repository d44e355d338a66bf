#include "hilbertgeo/svg.hpp"

#include "hilbertgeo/errors.hpp"
#include "hilbertgeo/ideal_triangle.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>

namespace hilbertgeo {

namespace {

constexpr double kView = 4.0;  // chart window [0, kView]^2
constexpr double kPixels = 480.0;
constexpr double kMargin = 20.0;

struct Segment {
    Vec2 a;
    Vec2 b;
};

// Liang-Barsky against the view square.
std::optional<Segment> clip(const Vec2& a, const Vec2& b) {
    double t0 = 0.0;
    double t1 = 1.0;
    const Vec2 d = b - a;
    const double p[4] = {-d.x(), d.x(), -d.y(), d.y()};
    const double q[4] = {a.x(), kView - a.x(), a.y(), kView - a.y()};
    for (int i = 0; i < 4; ++i) {
        if (p[i] == 0.0) {
            if (q[i] < 0.0) {
                return std::nullopt;
            }
            continue;
        }
        const double r = q[i] / p[i];
        if (p[i] < 0.0) {
            t0 = std::max(t0, r);
        } else {
            t1 = std::min(t1, r);
        }
    }
    if (t0 >= t1) {
        return std::nullopt;
    }
    return Segment{a + t0 * d, a + t1 * d};
}

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string line(const Segment& s, const char* stroke, double width) {
    auto sx = [](double x) { return px(kMargin + x / kView * kPixels); };
    auto sy = [](double y) { return px(kMargin + kPixels - y / kView * kPixels); };
    return "  <line x1=\"" + sx(s.a.x()) + "\" y1=\"" + sy(s.a.y()) + "\" x2=\"" + sx(s.b.x()) +
           "\" y2=\"" + sy(s.b.y()) + "\" stroke=\"" + stroke + "\" stroke-width=\"" + px(width) +
           "\"/>\n";
}

void add(std::string& out, const Vec2& a, const Vec2& b, const char* stroke, double width) {
    if (auto s = clip(a, b)) {
        out += line(*s, stroke, width);
    }
}

}  // namespace

std::string foliation_svg(double t) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        fail(ErrorCode::DomainError, "foliation plot needs t > 0");
    }
    const double size = kPixels + 2.0 * kMargin;
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + px(size) +
           "\" height=\"" + px(size) + "\" viewBox=\"0 0 " + px(size) + " " + px(size) + "\">\n";
    out += "  <title>ideal triangle t=" + px(t) + "</title>\n";
    out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Quadrant boundary.
    add(out, Vec2(0, 0), Vec2(kView, 0), "black", 1.5);
    add(out, Vec2(0, 0), Vec2(0, kView), "black", 1.5);

    // Leaves x + y = s, geometric in s.
    const double reach = 2.0 * kView * (1.0 + t);
    for (double s = std::sqrt(std::sqrt(2.0)); s < reach; s *= std::sqrt(2.0)) {
        const auto [alpha, beta] = leaf_endpoints(s, t);
        add(out, alpha, beta, "#3b7dd8", 1.0);
    }

    // Sides: x + y = 1, y - 1 = t x, y = t (x - 1).
    const double far = 2.0 * kView;
    add(out, Vec2(0, 1), Vec2(1, 0), "#c0392b", 2.0);
    add(out, Vec2(0, 1), Vec2(far, 1.0 + t * far), "#c0392b", 2.0);
    add(out, Vec2(1, 0), Vec2(1.0 + far, t * far), "#c0392b", 2.0);
    out += "</svg>\n";
    return out;
}

void emit_foliation_svg(double t, const std::string& path) {
    const std::string svg = foliation_svg(t);
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        fail(ErrorCode::IoError, "cannot open " + path + " for writing");
    }
    f << svg;
    f.flush();
    if (!f) {
        fail(ErrorCode::IoError, "failed writing " + path);
    }
}

}  // namespace hilbertgeo

#include "hilbertgeo/hex_plane.hpp"

#include "hilbertgeo/errors.hpp"
#include "hilbertgeo/numerics.hpp"

#include <cmath>
#include <numbers>

namespace hilbertgeo {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

double det2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

std::vector<Vec2> hexagon_vertices() {
    const auto& u = hex_units();
    // Counterclockwise from u0: angles 0, 60, ..., 300 degrees.
    return {u[0].vec(), -u[2].vec(), u[1].vec(), -u[0].vec(), u[2].vec(), -u[1].vec()};
}

}  // namespace

const std::array<HexVector, 3>& hex_units() {
    static const std::array<HexVector, 3> units = {
        HexVector{1.0, 0.0}, HexVector{-0.5, kSqrt3 / 2.0}, HexVector{-0.5, -kSqrt3 / 2.0}};
    return units;
}

PolygonNorm::PolygonNorm(std::vector<Vec2> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 3) {
        fail(ErrorCode::InvalidArgument, "polygon norm needs at least three vertices");
    }
}

double PolygonNorm::operator()(const Vec2& w) const {
    if (w.x() == 0.0 && w.y() == 0.0) {
        return 0.0;
    }
    const std::size_t n = vertices_.size();
    double gauge = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const Vec2& h = vertices_[k];
        const Vec2 e = vertices_[(k + 1) % n] - h;
        // t w = h + mu e
        const double det = det2(w, -e);
        if (det == 0.0) {
            continue;
        }
        const double t = det2(h, -e) / det;
        const double mu = det2(w, h) / det;
        if (t > 0.0 && mu >= -1e-12 && mu <= 1.0 + 1e-12) {
            gauge = std::max(gauge, 1.0 / t);
        }
    }
    return gauge;
}

const PolygonNorm& hex_unit_ball() {
    static const PolygonNorm ball(hexagon_vertices());
    return ball;
}

double hex_norm(const HexVector& w) { return hex_unit_ball()(w.vec()); }

double hex_distance(const HexVector& a, const HexVector& b) { return hex_norm(a - b); }

double hex_parallelogram_area(const HexVector& a, const HexVector& b) {
    return (2.0 / kSqrt3) * std::abs(det2(a.vec(), b.vec()));
}

double hex_distance_to_span(const HexVector& b, const HexVector& a) {
    const Vec2 av = a.vec();
    const Vec2 bv = b.vec();
    const double aa = av.squaredNorm();
    if (aa == 0.0) {
        return hex_norm(b);
    }
    const double t0 = av.dot(bv) / aa;
    // Euclidean <= hex <= (2/sqrt 3) Euclidean, so the minimizer lies within
    // (2/sqrt 3) |b - t0 a| / |a| of t0.
    const double radius = 2.0 * (bv - t0 * av).norm() / std::sqrt(aa);
    if (radius == 0.0) {
        return 0.0;
    }
    auto objective = [&](double t) { return hex_norm(b - a * t); };
    return golden_section_minimize(objective, t0 - radius, t0 + radius, 1e-10 * std::max(1.0, radius))
        .value;
}

Vec2 hex_to_quadrant(const HexVector& w) {
    return Vec2(std::exp(w.u + w.v / kSqrt3), std::exp(2.0 * w.v / kSqrt3));
}

HexVector quadrant_to_hex(const Vec2& p) {
    if (!(p.x() > 0.0 && p.y() > 0.0)) {
        fail(ErrorCode::PointsOutsideDomain, "point is not in the open positive quadrant");
    }
    const double v = 0.5 * kSqrt3 * std::log(p.y());
    return HexVector{std::log(p.x()) - 0.5 * std::log(p.y()), v};
}

HexVector triangle_to_hex(double x0, double x1, double x2) {
    if (!(x0 > 0.0 && x1 > 0.0 && x2 > 0.0)) {
        fail(ErrorCode::NonPositiveCoordinate, "triangle coordinates must be positive");
    }
    // u2 = -u0 - u1, so only the differences against log x2 matter.
    const double l2 = std::log(x2);
    const double a = std::log(x0) - l2;
    const double b = std::log(x1) - l2;
    const auto& u = hex_units();
    return u[0] * a + u[1] * b;
}

HexVector triangle_point_to_hex(const TriangleDomain& tri, const Vec2& p) {
    const Vec3 b = tri.barycentric(Vec3(p.x(), p.y(), 1.0));
    if (!(b.minCoeff() > 0.0)) {
        fail(ErrorCode::PointsOutsideDomain, "point is not interior to the triangle");
    }
    return triangle_to_hex(b.x(), b.y(), b.z());
}

namespace {

/// Coefficients x0, x1 (with x2 = 1) of the triangle point mapped to w.
std::pair<double, double> hex_coefficients(const HexVector& w) {
    const double l1 = 2.0 * w.v / kSqrt3;
    const double l0 = w.u + 0.5 * l1;
    return {std::exp(l0), std::exp(l1)};
}

}  // namespace

Vec2 hex_to_triangle_point(const TriangleDomain& tri, const HexVector& w) {
    const auto [x0, x1] = hex_coefficients(w);
    const Vec3 p = tri.basis() * Vec3(x0, x1, 1.0);
    return p.head<2>() / p.z();
}

double hex_to_triangle_jacobian(const TriangleDomain& tri, const HexVector& w) {
    const auto [x0, x1] = hex_coefficients(w);
    const Vec3 p = tri.basis() * Vec3(x0, x1, 1.0);
    const double z = p.z();
    return (2.0 / kSqrt3) * x0 * x1 * std::abs(tri.basis().determinant()) / (z * z * z);
}

HexCircleStats hex_circle_stats(double r, int n) {
    if (!(r > 0.0)) {
        fail(ErrorCode::InvalidArgument, "hex circle radius must be positive");
    }
    if (n < 6) {
        fail(ErrorCode::InvalidArgument, "hex circle sampling needs n >= 6");
    }
    const std::vector<Vec2> hexagon = hexagon_vertices();
    std::vector<Vec2> points;
    points.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const int num = 6 * k;
        const int edge = num / n;
        const double frac = static_cast<double>(num % n) / n;
        const Vec2& a = hexagon[static_cast<std::size_t>(edge)];
        const Vec2& b = hexagon[static_cast<std::size_t>((edge + 1) % 6)];
        points.push_back(r * (a + frac * (b - a)));
    }
    double circumference = 0.0;
    double twice_area = 0.0;
    for (int k = 0; k < n; ++k) {
        const Vec2& p = points[static_cast<std::size_t>(k)];
        const Vec2& q = points[static_cast<std::size_t>((k + 1) % n)];
        circumference += hex_unit_ball()(q - p);
        twice_area += det2(p, q);
    }
    return HexCircleStats{circumference, (2.0 / kSqrt3) * 0.5 * std::abs(twice_area)};
}

MappedRegion hex_circle_region(const TriangleDomain& tri, double radius, const HexVector& center) {
    if (!(radius > 0.0)) {
        fail(ErrorCode::InvalidArgument, "hex circle radius must be positive");
    }
    MappedRegion region;
    for (const Vec2& h : hexagon_vertices()) {
        region.parameter_polygon.push_back(center.vec() + radius * h);
    }
    region.map = [tri](const Vec2& w) { return hex_to_triangle_point(tri, HexVector::from(w)); };
    region.jacobian = [tri](const Vec2& w) {
        return hex_to_triangle_jacobian(tri, HexVector::from(w));
    };
    return region;
}

}  // namespace hilbertgeo

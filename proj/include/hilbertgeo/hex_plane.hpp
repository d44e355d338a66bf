#pragma once

#include "hilbertgeo/domains.hpp"
#include "hilbertgeo/hilbert_metric.hpp"

#include <array>
#include <vector>

namespace hilbertgeo {

/// A vector of the Hex plane in the standard basis of R^2.
struct HexVector {
    double u = 0.0;
    double v = 0.0;

    Vec2 vec() const { return Vec2(u, v); }
    static HexVector from(const Vec2& w) { return HexVector{w.x(), w.y()}; }

    HexVector operator+(const HexVector& o) const { return {u + o.u, v + o.v}; }
    HexVector operator-(const HexVector& o) const { return {u - o.u, v - o.v}; }
    HexVector operator*(double s) const { return {s * u, s * v}; }
};

/// u0 = (1, 0), u1 = (-1/2, sqrt(3)/2), u2 = -u0 - u1.
const std::array<HexVector, 3>& hex_units();

/// The norm whose unit ball is a centrally symmetric convex polygon.
class PolygonNorm {
public:
    /// Vertices of the unit ball, counterclockwise.
    explicit PolygonNorm(std::vector<Vec2> vertices);

    /// Gauge min{lambda > 0 : w / lambda in ball}, found by intersecting the ray
    /// through w with each edge.
    double operator()(const Vec2& w) const;

    const std::vector<Vec2>& vertices() const { return vertices_; }

private:
    std::vector<Vec2> vertices_;
};

/// The regular hexagon with vertices +-u0, +-u1, +-u2.
const PolygonNorm& hex_unit_ball();

double hex_norm(const HexVector& w);
double hex_distance(const HexVector& a, const HexVector& b);

/// (2/sqrt 3) |det(a, b)|: p-area of the parallelogram spanned by a and b.
double hex_parallelogram_area(const HexVector& a, const HexVector& b);

/// Hex distance from b to the line spanned by a, by golden-section search on
/// hex_norm(b - t a), which is convex in t.
double hex_distance_to_span(const HexVector& b, const HexVector& a);

/// A(u, v) = (exp(u + v/sqrt 3), exp(2v/sqrt 3)), an isometry onto the quadrant.
Vec2 hex_to_quadrant(const HexVector& w);
HexVector quadrant_to_hex(const Vec2& p);

/// (log x0) u0 + (log x1) u1 + (log x2) u2 for the point [x0 v0 + x1 v1 + x2 v2].
HexVector triangle_to_hex(double x0, double x1, double x2);

/// The isometry from a triangle domain to the Hex plane, through the vertex basis.
HexVector triangle_point_to_hex(const TriangleDomain& tri, const Vec2& p);
Vec2 hex_to_triangle_point(const TriangleDomain& tri, const HexVector& w);
/// Jacobian determinant of hex_to_triangle_point at w.
double hex_to_triangle_jacobian(const TriangleDomain& tri, const HexVector& w);

struct HexCircleStats {
    double circumference;
    double area;
};

/// Hex length and p-area of the polygon through n equally spaced (by perimeter)
/// points of the Hex circle of radius r, starting at the vertex r u0. Exact when
/// n is a multiple of 6.
HexCircleStats hex_circle_stats(double r, int n);

/// The Hex circle of the given radius pulled back into a triangle domain.
MappedRegion hex_circle_region(const TriangleDomain& tri, double radius,
                               const HexVector& center = {});

}  // namespace hilbertgeo

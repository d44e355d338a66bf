#pragma once

#include "hilbertgeo/domains.hpp"
#include "hilbertgeo/hilbert_metric.hpp"

#include <array>
#include <cmath>
#include <memory>

namespace hilbertgeo {

/// Fock-Goncharov shape parameter of an ideal triangle.
///
/// Keeps the raw value for the chosen vertex ordering; reversing the ordering
/// inverts it. The canonical value max(t, 1/t) classifies the triangle.
class ShapeParam {
public:
    explicit ShapeParam(double t);

    double raw() const { return raw_; }
    double canonical() const { return raw_ >= 1.0 ? raw_ : 1.0 / raw_; }
    /// Signed triangle invariant log t of the raw value.
    double tau() const { return std::log(raw_); }

    ShapeParam reversed() const { return ShapeParam(1.0 / raw_); }

private:
    double raw_;
};

/// A proper ideal triangle: three boundary points of a domain whose open sides
/// lie in the open domain.
class IdealTriangle {
public:
    IdealTriangle(std::shared_ptr<const ConvexDomain> dom, const ProjPoint& p, const ProjPoint& q,
                  const ProjPoint& r);

    const ConvexDomain& domain() const { return *dom_; }
    std::shared_ptr<const ConvexDomain> domain_ptr() const { return dom_; }
    const std::array<ProjPoint, 3>& vertices() const { return vertices_; }

    /// The same triangle after applying g to the domain and the vertices.
    IdealTriangle transformed(const ProjMap& g) const;

    /// The triangle as an area region of its domain.
    PolygonRegion region() const;

private:
    std::shared_ptr<const ConvexDomain> dom_;
    std::array<ProjPoint, 3> vertices_;
};

/// Vertex basis of the triangle cut out by the tangent lines at the vertices.
/// With vertices (p, q, r) the columns are v0 = L_r ^ L_p, v1 = L_p ^ L_q,
/// v2 = L_q ^ L_r, so p lies on edge v0v1, q on v1v2 and r on v2v0; signs are
/// chosen so that positive combinations cover the domain. The triangle may
/// cross the line at infinity.
Mat3 tangent_basis(const IdealTriangle& tri);

/// The tangent triangle as a domain; DegenerateTangents when it meets the line
/// at infinity of the standard chart.
TriangleDomain tangent_triangle(const IdealTriangle& tri);

/// t = abc for w0 = v0 + a v1, w1 = v1 + b v2, w2 = v2 + c v0 with a, b, c > 0,
/// where v_i are the columns of basis.
ShapeParam shape_parameter(const Mat3& basis, const ProjPoint& w0, const ProjPoint& w1,
                           const ProjPoint& w2);
ShapeParam shape_parameter(const TriangleDomain& delta, const ProjPoint& w0, const ProjPoint& w1,
                           const ProjPoint& w2);

/// Shape of the triangle relative to its tangent triangle.
ShapeParam shape_of_ideal_triangle(const IdealTriangle& tri);

/// The ideal triangle in the quadrant bounded by x + y = 1 and the parallel rays
/// y - 1 = t x and y = t (x - 1), with vertices ordered ([1:t:0], (0,1), (1,0))
/// so that its shape relative to the quadrant is t.
IdealTriangle embed_canonical(double t);

/// alpha(s), beta(s): where the leaf x + y = s meets the two rays.
std::array<Vec2, 2> leaf_endpoints(double s, double t);

/// Hilbert length of the leaf x + y = s in the canonical triangle,
/// log((s + t)(s t + 1) / (t (s - 1)^2)).
double leaf_length(double s, double t);

/// B(t) as the integral over s in (1, inf) of leaf_length(s, t) / s (Full).
QuadratureResult triangle_area_quadrature(double t, double tol);
double triangle_area_numeric(double t, double tol);

/// (pi^2 + (log t)^2) / 2 under Full, a quarter of that under Announced.
double triangle_area_closed(double t, Normalization norm = Normalization::Full);

/// Area of the same-shape triangle in its tangent triangle: a lower bound for
/// the area of the triangle in its own domain.
double triangle_area_lower_bound(const IdealTriangle& tri, Normalization norm = Normalization::Full);

struct DerivativeCheck {
    double finite_difference;
    double analytic;
};

/// Central difference of triangle_area_numeric against (log t) / t.
DerivativeCheck dB_dt_check(double t, double h, double tol = 1e-8);

}  // namespace hilbertgeo

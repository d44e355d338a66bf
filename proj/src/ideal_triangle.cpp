#include "hilbertgeo/ideal_triangle.hpp"

#include "hilbertgeo/errors.hpp"
#include "hilbertgeo/numerics.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace hilbertgeo {

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

/// b_j / b_i for a point w on the open edge v_i v_j of delta (k opposite).
double edge_ratio(const Mat3& inverse, const ProjPoint& w, int i, int j, int k) {
    Vec3 b = inverse * w.normalized();
    Eigen::Index idx = 0;
    b.cwiseAbs().maxCoeff(&idx);
    b /= b[idx];
    if (std::abs(b[k]) > kBoundaryTol) {
        fail(ErrorCode::EdgeMismatch, "vertex does not lie on its edge of the triangle");
    }
    if (std::abs(b[i]) <= kBoundaryTol || std::abs(b[j]) <= kBoundaryTol) {
        fail(ErrorCode::VertexOnEdgeEndpoint, "vertex sits on an endpoint of its edge");
    }
    if (b[i] < 0.0 || b[j] < 0.0) {
        fail(ErrorCode::EdgeMismatch, "vertex lies outside its closed edge");
    }
    return b[j] / b[i];
}

ProjPoint meet_tangents(const ProjLine& l1, const ProjLine& l2) {
    try {
        return meet(l1, l2);
    } catch (const Error&) {
        fail(ErrorCode::DegenerateTangents, "two tangent lines coincide");
    }
}

const std::shared_ptr<const ConvexDomain>& shared_quadrant() {
    static const std::shared_ptr<const ConvexDomain> q =
        std::make_shared<TriangleDomain>(TriangleDomain::quadrant());
    return q;
}

}  // namespace

ShapeParam::ShapeParam(double t) : raw_(t) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        fail(ErrorCode::DomainError, "shape parameter must be positive and finite");
    }
}

IdealTriangle::IdealTriangle(std::shared_ptr<const ConvexDomain> dom, const ProjPoint& p,
                             const ProjPoint& q, const ProjPoint& r)
    : dom_(std::move(dom)), vertices_{p, q, r} {
    if (!dom_) {
        fail(ErrorCode::InvalidArgument, "ideal triangle needs a domain");
    }
    for (const ProjPoint& v : vertices_) {
        if (!dom_->on_boundary(v)) {
            fail(ErrorCode::NotOnBoundary, "ideal triangle vertex is not on the boundary");
        }
    }
    for (int i = 0; i < 3; ++i) {
        const ProjPoint& a = vertices_[static_cast<std::size_t>(i)];
        const ProjPoint& b = vertices_[static_cast<std::size_t>((i + 1) % 3)];
        if (a.approx_equal(b)) {
            fail(ErrorCode::DegenerateConfiguration, "ideal triangle vertices must be distinct");
        }
        // A convex domain contains the open segment iff it contains one of its points.
        if (!dom_->contains(ProjPoint(dom_->lift(a) + dom_->lift(b)))) {
            fail(ErrorCode::DegenerateConfiguration, "ideal triangle side runs along the boundary");
        }
    }
    if (collinear(p, q, r)) {
        fail(ErrorCode::DegenerateConfiguration, "ideal triangle vertices are collinear");
    }
}

IdealTriangle IdealTriangle::transformed(const ProjMap& g) const {
    std::shared_ptr<const ConvexDomain> image = dom_->transformed(g);
    return IdealTriangle(std::move(image), g(vertices_[0]), g(vertices_[1]), g(vertices_[2]));
}

PolygonRegion IdealTriangle::region() const {
    return PolygonRegion{{vertices_[0], vertices_[1], vertices_[2]}};
}

Mat3 tangent_basis(const IdealTriangle& tri) {
    const ConvexDomain& dom = tri.domain();
    const auto& [p, q, r] = tri.vertices();
    const ProjLine lp = dom.tangent_at(p);
    const ProjLine lq = dom.tangent_at(q);
    const ProjLine lr = dom.tangent_at(r);

    Mat3 basis;
    basis << meet_tangents(lr, lp).normalized(), meet_tangents(lp, lq).normalized(),
        meet_tangents(lq, lr).normalized();
    if (std::abs(basis.determinant()) < kSingularityFloor) {
        fail(ErrorCode::DegenerateTangents, "tangent lines are concurrent");
    }
    // Pick the one of the four triangles cut out by the tangents that holds the domain.
    const Vec3 inside = dom.lift(p) + dom.lift(q) + dom.lift(r);
    Vec3 coords = basis.inverse() * inside;
    coords /= coords.cwiseAbs().maxCoeff();
    for (int i = 0; i < 3; ++i) {
        if (std::abs(coords[i]) < kBoundaryTol) {
            fail(ErrorCode::DegenerateTangents, "tangent triangle does not enclose the domain");
        }
        if (coords[i] < 0.0) {
            basis.col(i) = -basis.col(i);
        }
    }
    return basis;
}

TriangleDomain tangent_triangle(const IdealTriangle& tri) {
    const Mat3 basis = tangent_basis(tri);
    try {
        return TriangleDomain(Vec3(basis.col(0)), Vec3(basis.col(1)), Vec3(basis.col(2)));
    } catch (const Error& e) {
        fail(ErrorCode::DegenerateTangents, std::string("tangent triangle: ") + e.what());
    }
}

ShapeParam shape_parameter(const Mat3& basis, const ProjPoint& w0, const ProjPoint& w1,
                           const ProjPoint& w2) {
    const Mat3 scaled = basis / basis.cwiseAbs().maxCoeff();
    if (std::abs(scaled.determinant()) < kSingularityFloor) {
        fail(ErrorCode::DegenerateConfiguration, "triangle vertices are collinear");
    }
    const Mat3 inverse = basis.inverse();
    const double a = edge_ratio(inverse, w0, 0, 1, 2);
    const double b = edge_ratio(inverse, w1, 1, 2, 0);
    const double c = edge_ratio(inverse, w2, 2, 0, 1);
    return ShapeParam(a * b * c);
}

ShapeParam shape_parameter(const TriangleDomain& delta, const ProjPoint& w0, const ProjPoint& w1,
                           const ProjPoint& w2) {
    return shape_parameter(delta.basis(), w0, w1, w2);
}

ShapeParam shape_of_ideal_triangle(const IdealTriangle& tri) {
    const auto& v = tri.vertices();
    return shape_parameter(tangent_basis(tri), v[0], v[1], v[2]);
}

IdealTriangle embed_canonical(double t) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        fail(ErrorCode::DomainError, "shape parameter must be positive and finite");
    }
    return IdealTriangle(shared_quadrant(), ProjPoint(1.0, t, 0.0), ProjPoint(0.0, 1.0, 1.0),
                         ProjPoint(1.0, 0.0, 1.0));
}

std::array<Vec2, 2> leaf_endpoints(double s, double t) {
    const double xa = (s - 1.0) / (t + 1.0);
    const double xb = (s + t) / (t + 1.0);
    return {Vec2(xa, s - xa), Vec2(xb, s - xb)};
}

double leaf_length(double s, double t) {
    if (!(s > 1.0)) {
        fail(ErrorCode::DomainError, "leaf_length needs s > 1");
    }
    if (!(t > 0.0)) {
        fail(ErrorCode::DomainError, "leaf_length needs t > 0");
    }
    // (s + t)(s t + 1) = t (s - 1)^2 + s (t + 1)^2
    const double sm1 = s - 1.0;
    return std::log1p(s * (t + 1.0) * (t + 1.0) / (t * sm1 * sm1));
}

QuadratureResult triangle_area_quadrature(double t, double tol) {
    if (!(t > 0.0)) {
        fail(ErrorCode::DomainError, "triangle area needs t > 0");
    }
    auto integrand = [t](double s) { return leaf_length(s, t) / s; };
    const QuadratureResult head =
        integrate_1d(integrand, 1.0, 2.0, 0.5 * tol, EndpointFlags{true, false});
    const QuadratureResult tail =
        integrate_1d(integrand, 2.0, std::numeric_limits<double>::infinity(), 0.5 * tol);
    return QuadratureResult{head.value + tail.value, head.error_estimate + tail.error_estimate,
                            head.evaluations + tail.evaluations};
}

double triangle_area_numeric(double t, double tol) { return triangle_area_quadrature(t, tol).value; }

double triangle_area_closed(double t, Normalization norm) {
    if (!(t > 0.0)) {
        fail(ErrorCode::DomainError, "triangle area needs t > 0");
    }
    const double lt = std::log(t);
    return 0.5 * (kPi2 + lt * lt) * area_scale(norm);
}

double triangle_area_lower_bound(const IdealTriangle& tri, Normalization norm) {
    return triangle_area_closed(shape_of_ideal_triangle(tri).canonical(), norm);
}

DerivativeCheck dB_dt_check(double t, double h, double tol) {
    if (!(t > 0.0)) {
        fail(ErrorCode::DomainError, "dB/dt check needs t > 0");
    }
    if (!(h > 0.0 && h < t / 10.0)) {
        fail(ErrorCode::InvalidArgument, "dB/dt check needs 0 < h < t/10");
    }
    const double fd =
        central_difference([tol](double x) { return triangle_area_numeric(x, tol); }, t, h);
    return DerivativeCheck{fd, std::log(t) / t};
}

}  // namespace hilbertgeo

#include "hilbertgeo/domains.hpp"

#include "hilbertgeo/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace hilbertgeo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

/// Boundary hits for an intersection of half-planes h_i(base + s dir) > 0 whose
/// defining forms are affine in s: h_i = value_i + s * slope_i.
RayHits half_plane_hits(const double* value, const double* slope, std::size_t count) {
    RayHits hits{-kInf, kInf};
    for (std::size_t i = 0; i < count; ++i) {
        if (slope[i] < 0.0) {
            hits.forward = std::min(hits.forward, -value[i] / slope[i]);
        } else if (slope[i] > 0.0) {
            hits.backward = std::max(hits.backward, -value[i] / slope[i]);
        }
    }
    return hits;
}

}  // namespace

bool ConvexDomain::contains(const ProjPoint& p) const {
    if (p.is_ideal()) {
        return false;
    }
    return contains(p.affine());
}

Vec3 ConvexDomain::lift(const ProjPoint& p) const {
    Vec3 v = p.normalized();
    if (v.z() < 0.0) {
        v = -v;
    }
    return v;
}

// ---------------------------------------------------------------------------
// TriangleDomain

TriangleDomain::TriangleDomain(const ProjPoint& v0, const ProjPoint& v1, const ProjPoint& v2)
    : TriangleDomain(v0.coords(), v1.coords(), v2.coords()) {}

TriangleDomain::TriangleDomain(const Vec3& v0, const Vec3& v1, const Vec3& v2) {
    for (const Vec3* v : {&v0, &v1, &v2}) {
        if (!v->allFinite() || v->cwiseAbs().maxCoeff() == 0.0) {
            fail(ErrorCode::InvalidDomain, "triangle vertex must be a finite nonzero triple");
        }
    }
    basis_ << v0 / v0.cwiseAbs().maxCoeff(), v1 / v1.cwiseAbs().maxCoeff(),
        v2 / v2.cwiseAbs().maxCoeff();
    if (std::abs(basis_.determinant()) < kSingularityFloor) {
        fail(ErrorCode::InvalidDomain, "triangle vertices are collinear");
    }
    constexpr double kZeroZ = 1e-14;
    bool any_positive = false;
    bool any_negative = false;
    for (int i = 0; i < 3; ++i) {
        any_positive = any_positive || basis_(2, i) > kZeroZ;
        any_negative = any_negative || basis_(2, i) < -kZeroZ;
    }
    if (any_positive && any_negative) {
        fail(ErrorCode::InvalidDomain, "triangle interior meets the line at infinity");
    }
    if (!any_positive) {
        basis_ = -basis_;
    }
    for (int i = 0; i < 3; ++i) {
        if (std::abs(basis_(2, i)) <= kZeroZ) {
            basis_(2, i) = 0.0;
        }
    }
    inverse_ = basis_.inverse();
}

TriangleDomain TriangleDomain::quadrant() {
    return TriangleDomain(Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1));
}

bool TriangleDomain::is_standard_quadrant() const {
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (i == j ? basis_(i, j) <= 0.0 : basis_(i, j) != 0.0) {
                return false;
            }
        }
    }
    return true;
}

bool TriangleDomain::contains(const Vec2& p) const {
    const Vec3 b = inverse_ * Vec3(p.x(), p.y(), 1.0);
    return b.x() > 0.0 && b.y() > 0.0 && b.z() > 0.0;
}

RayHits TriangleDomain::ray_hits(const Vec2& base, const Vec2& dir) const {
    const Vec3 value = inverse_ * Vec3(base.x(), base.y(), 1.0);
    if (!(value.minCoeff() > 0.0)) {
        fail(ErrorCode::PointsOutsideDomain, "base point is not interior to the triangle");
    }
    const Vec3 slope = inverse_ * Vec3(dir.x(), dir.y(), 0.0);
    return half_plane_hits(value.data(), slope.data(), 3);
}

Vec3 TriangleDomain::boundary_coordinates(const ProjPoint& p) const {
    Vec3 b = inverse_ * p.normalized();
    Eigen::Index idx = 0;
    b.cwiseAbs().maxCoeff(&idx);
    return b / b[idx];
}

bool TriangleDomain::on_boundary(const ProjPoint& p) const {
    const Vec3 b = boundary_coordinates(p);
    return b.minCoeff() >= -kBoundaryTol && b.cwiseAbs().minCoeff() <= kBoundaryTol;
}

ProjLine TriangleDomain::tangent_at(const ProjPoint& p) const {
    if (!on_boundary(p)) {
        fail(ErrorCode::NotOnBoundary, "point is not on the triangle boundary");
    }
    const Vec3 b = boundary_coordinates(p);
    int zeros = 0;
    int opposite = 0;
    for (int i = 0; i < 3; ++i) {
        if (std::abs(b[i]) <= kBoundaryTol) {
            ++zeros;
            opposite = i;
        }
    }
    if (zeros != 1) {
        fail(ErrorCode::NoUniqueTangent, "triangle vertices have no unique tangent line");
    }
    const int j = (opposite + 1) % 3;
    const int k = (opposite + 2) % 3;
    return ProjLine(basis_.col(j).cross(basis_.col(k)));
}

Vec3 TriangleDomain::lift(const ProjPoint& p) const {
    Vec3 v = p.normalized();
    Vec3 b = inverse_ * v;
    if (b.sum() < 0.0) {
        v = -v;
    }
    return v;
}

std::unique_ptr<ConvexDomain> TriangleDomain::transformed(const ProjMap& g) const {
    const Mat3 m = g.matrix() * basis_;
    return std::make_unique<TriangleDomain>(Vec3(m.col(0)), Vec3(m.col(1)), Vec3(m.col(2)));
}

Vec2 TriangleDomain::interior_point() const {
    const Vec3 p = basis_ * Vec3(1.0, 1.0, 1.0);
    return p.head<2>() / p.z();
}

// ---------------------------------------------------------------------------
// EllipseDomain

EllipseDomain::EllipseDomain(const Vec2& center, const Mat2& shape)
    : center_(center), shape_(shape) {
    if (!center.allFinite() || !shape.allFinite()) {
        fail(ErrorCode::InvalidDomain, "ellipse parameters must be finite");
    }
    const double scale = shape.cwiseAbs().maxCoeff();
    if (scale == 0.0 || std::abs(shape.determinant()) / (scale * scale) < kSingularityFloor) {
        fail(ErrorCode::InvalidDomain, "ellipse shape matrix is singular");
    }
    shape_inverse_ = shape.inverse();
}

EllipseDomain EllipseDomain::unit_disc() { return EllipseDomain(Vec2::Zero(), Mat2::Identity()); }

Vec2 EllipseDomain::boundary_point(double theta) const {
    return center_ + shape_ * Vec2(std::cos(theta), std::sin(theta));
}

bool EllipseDomain::contains(const Vec2& p) const {
    return (shape_inverse_ * (p - center_)).squaredNorm() < 1.0;
}

RayHits EllipseDomain::ray_hits(const Vec2& base, const Vec2& dir) const {
    const Vec2 u = shape_inverse_ * (base - center_);
    const Vec2 w = shape_inverse_ * dir;
    // |u + s w|^2 = 1
    const double a = w.squaredNorm();
    const double b = 2.0 * u.dot(w);
    const double c = u.squaredNorm() - 1.0;
    if (!(c < 0.0)) {
        fail(ErrorCode::PointsOutsideDomain, "base point is not interior to the ellipse");
    }
    const double disc = std::sqrt(b * b - 4.0 * a * c);
    const double q = -0.5 * (b + std::copysign(disc, b));
    const double r1 = q / a;
    const double r2 = c / q;
    return RayHits{std::min(r1, r2), std::max(r1, r2)};
}

bool EllipseDomain::on_boundary(const ProjPoint& p) const {
    if (p.is_ideal()) {
        return false;
    }
    const double r = (shape_inverse_ * (p.affine() - center_)).norm();
    return std::abs(r - 1.0) <= kBoundaryTol;
}

ProjLine EllipseDomain::tangent_at(const ProjPoint& p) const {
    if (!on_boundary(p)) {
        fail(ErrorCode::NotOnBoundary, "point is not on the ellipse boundary");
    }
    const Vec2 x = p.affine();
    const Vec2 u = (shape_inverse_ * (x - center_)).normalized();
    const Vec2 n = shape_inverse_.transpose() * u;
    return ProjLine(n.x(), n.y(), -n.dot(center_ + shape_ * u));
}

std::unique_ptr<ConvexDomain> EllipseDomain::transformed(const ProjMap& g) const {
    // Interior is {X : X^T C X < 0} with C built from |S^-1 (x - c)|^2 - 1.
    const Mat2 m = shape_inverse_.transpose() * shape_inverse_;
    Mat3 conic = Mat3::Zero();
    conic.topLeftCorner<2, 2>() = m;
    conic.topRightCorner<2, 1>() = -m * center_;
    conic.bottomLeftCorner<1, 2>() = (-m * center_).transpose();
    conic(2, 2) = center_.dot(m * center_) - 1.0;

    const Mat3 ginv = g.matrix().inverse();
    Mat3 image = ginv.transpose() * conic * ginv;
    image /= image.cwiseAbs().maxCoeff();
    image = 0.5 * (image + image.transpose());

    const Mat2 quad = image.topLeftCorner<2, 2>();
    if (!(quad(0, 0) > 0.0 && quad.determinant() > 0.0)) {
        fail(ErrorCode::InvalidDomain, "image of the ellipse meets the line at infinity");
    }
    const Vec2 center = -quad.inverse() * Vec2(image.topRightCorner<2, 1>());
    const double k = center.dot(quad * center) - image(2, 2);
    if (!(k > 0.0)) {
        fail(ErrorCode::InvalidDomain, "image of the ellipse is empty");
    }
    const Eigen::LLT<Mat2> llt(quad / k);
    const Mat2 lower = llt.matrixL();
    return std::make_unique<EllipseDomain>(center, Mat2(lower.transpose().inverse()));
}

// ---------------------------------------------------------------------------
// PolygonDomain

PolygonDomain::PolygonDomain(std::vector<Vec2> vertices) : vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    if (n < 3) {
        fail(ErrorCode::InvalidDomain, "polygon needs at least three vertices");
    }
    double turning = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 e0 = vertices_[(i + 1) % n] - vertices_[i];
        const Vec2 e1 = vertices_[(i + 2) % n] - vertices_[(i + 1) % n];
        if (!e0.allFinite() || !(cross2(e0, e1) > 0.0)) {
            fail(ErrorCode::InvalidDomain,
                 "polygon vertices must be strictly convex and counterclockwise");
        }
        turning += std::atan2(cross2(e0, e1), e0.dot(e1));
    }
    if (std::abs(turning - 2.0 * std::numbers::pi) > 1e-6) {
        fail(ErrorCode::InvalidDomain, "polygon winds more than once");
    }
    inward_normals_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 e = vertices_[(i + 1) % n] - vertices_[i];
        inward_normals_.push_back(Vec2(-e.y(), e.x()).normalized());
    }
}

double PolygonDomain::edge_distance(std::size_t edge, const Vec2& p) const {
    return inward_normals_[edge].dot(p - vertices_[edge]);
}

bool PolygonDomain::contains(const Vec2& p) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!(edge_distance(i, p) > 0.0)) {
            return false;
        }
    }
    return true;
}

RayHits PolygonDomain::ray_hits(const Vec2& base, const Vec2& dir) const {
    const std::size_t n = vertices_.size();
    std::vector<double> value(n);
    std::vector<double> slope(n);
    for (std::size_t i = 0; i < n; ++i) {
        value[i] = edge_distance(i, base);
        if (!(value[i] > 0.0)) {
            fail(ErrorCode::PointsOutsideDomain, "base point is not interior to the polygon");
        }
        slope[i] = inward_normals_[i].dot(dir);
    }
    return half_plane_hits(value.data(), slope.data(), n);
}

bool PolygonDomain::on_boundary(const ProjPoint& p) const {
    if (p.is_ideal()) {
        return false;
    }
    const Vec2 x = p.affine();
    double nearest = kInf;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const double h = edge_distance(i, x);
        if (h < -kBoundaryTol) {
            return false;
        }
        nearest = std::min(nearest, std::abs(h));
    }
    return nearest <= kBoundaryTol;
}

ProjLine PolygonDomain::tangent_at(const ProjPoint& p) const {
    if (!on_boundary(p)) {
        fail(ErrorCode::NotOnBoundary, "point is not on the polygon boundary");
    }
    const Vec2 x = p.affine();
    int hits = 0;
    std::size_t edge = 0;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (std::abs(edge_distance(i, x)) <= kBoundaryTol) {
            ++hits;
            edge = i;
        }
    }
    if (hits != 1) {
        fail(ErrorCode::NoUniqueTangent, "polygon vertices have no unique tangent line");
    }
    const Vec2& n = inward_normals_[edge];
    return ProjLine(n.x(), n.y(), -n.dot(vertices_[edge]));
}

std::unique_ptr<ConvexDomain> PolygonDomain::transformed(const ProjMap& g) const {
    // With every vertex strictly on one side of the preimage of z = 0,
    // convexity keeps the whole closed polygon there.
    std::vector<Vec3> images;
    images.reserve(vertices_.size());
    int positive = 0;
    int negative = 0;
    for (const Vec2& v : vertices_) {
        const Vec3 img = g.matrix() * Vec3(v.x(), v.y(), 1.0);
        const double z = img.z() / img.cwiseAbs().maxCoeff();
        positive += z > 1e-12 ? 1 : 0;
        negative += z < -1e-12 ? 1 : 0;
        images.push_back(img);
    }
    const int n = static_cast<int>(images.size());
    if (positive != n && negative != n) {
        fail(ErrorCode::InvalidDomain, "image of the polygon meets the line at infinity");
    }
    std::vector<Vec2> out;
    out.reserve(images.size());
    for (const Vec3& img : images) {
        out.push_back(img.head<2>() / img.z());
    }
    double area = 0.0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        area += cross2(out[i], out[(i + 1) % out.size()]);
    }
    if (area < 0.0) {
        std::reverse(out.begin(), out.end());
    }
    return std::make_unique<PolygonDomain>(std::move(out));
}

Vec2 PolygonDomain::interior_point() const {
    Vec2 c = Vec2::Zero();
    for (const Vec2& v : vertices_) {
        c += v;
    }
    return c / static_cast<double>(vertices_.size());
}

PolygonDomain PolygonDomain::scaled_toward_centroid(double factor) const {
    if (!(factor > 0.0 && factor <= 1.0)) {
        fail(ErrorCode::InvalidArgument, "scale factor must lie in (0, 1]");
    }
    const Vec2 c = interior_point();
    std::vector<Vec2> out;
    out.reserve(vertices_.size());
    for (const Vec2& v : vertices_) {
        out.push_back(c + factor * (v - c));
    }
    return PolygonDomain(std::move(out));
}

// ---------------------------------------------------------------------------

std::pair<ProjPoint, ProjPoint> chord_endpoints(const ConvexDomain& dom, const Vec2& b,
                                                const Vec2& c) {
    if (!dom.contains(b) || !dom.contains(c)) {
        fail(ErrorCode::PointsOutsideDomain, "chord endpoints need interior points");
    }
    const Vec2 dir = c - b;
    if (dir.cwiseAbs().maxCoeff() == 0.0) {
        fail(ErrorCode::IdenticalPoints, "chord needs two distinct points");
    }
    const RayHits hits = dom.ray_hits(b, dir);
    const ProjPoint a = std::isinf(hits.backward) ? ProjPoint::at_infinity(-dir)
                                                  : ProjPoint::from_affine(b + hits.backward * dir);
    const ProjPoint d = std::isinf(hits.forward) ? ProjPoint::at_infinity(dir)
                                                 : ProjPoint::from_affine(b + hits.forward * dir);
    if (a.approx_equal(d)) {
        fail(ErrorCode::InvalidDomain, "domain contains an affine line");
    }
    return {a, d};
}

ProjLine tangent_at(const ConvexDomain& dom, const ProjPoint& p) { return dom.tangent_at(p); }

bool contains(const ConvexDomain& dom, const ProjPoint& p) { return dom.contains(p); }

}  // namespace hilbertgeo

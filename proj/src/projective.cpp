#include "hilbertgeo/projective.hpp"

#include "hilbertgeo/errors.hpp"

#include <cmath>
#include <limits>

namespace hilbertgeo {

namespace {

Mat3 scaled_by_max(const Mat3& m) {
    const double scale = m.cwiseAbs().maxCoeff();
    return m / scale;
}

bool same_up_to_scale(const Vec3& a, const Vec3& b, double tol) {
    const Vec3 na = max_normalized(a);
    const Vec3 nb = max_normalized(b);
    // Ties between +/- extremal entries can pick opposite signs.
    return (na - nb).cwiseAbs().maxCoeff() < tol || (na + nb).cwiseAbs().maxCoeff() < tol;
}

}  // namespace

Vec3 max_normalized(const Vec3& v) {
    Eigen::Index idx = 0;
    v.cwiseAbs().maxCoeff(&idx);
    return v / v[idx];
}

ProjPoint::ProjPoint(double x, double y, double z) : ProjPoint(Vec3(x, y, z)) {}

ProjPoint::ProjPoint(const Vec3& coords) : coords_(coords) {
    if (!coords_.allFinite()) {
        fail(ErrorCode::InvalidArgument, "projective point has non-finite coordinates");
    }
    if (coords_.cwiseAbs().maxCoeff() == 0.0) {
        fail(ErrorCode::InvalidArgument, "projective point [0:0:0] is undefined");
    }
}

ProjPoint ProjPoint::from_affine(const Vec2& p) { return ProjPoint(p.x(), p.y(), 1.0); }

ProjPoint ProjPoint::at_infinity(const Vec2& d) { return ProjPoint(d.x(), d.y(), 0.0); }

bool ProjPoint::is_ideal(double tol) const {
    return std::abs(coords_.z()) <= tol * coords_.cwiseAbs().maxCoeff();
}

Vec2 ProjPoint::affine() const {
    if (is_ideal()) {
        fail(ErrorCode::InfiniteValue, "point at infinity has no affine coordinates");
    }
    return coords_.head<2>() / coords_.z();
}

bool ProjPoint::approx_equal(const ProjPoint& other, double tol) const {
    return same_up_to_scale(coords_, other.coords_, tol);
}

ProjLine::ProjLine(double a, double b, double c) : ProjLine(Vec3(a, b, c)) {}

ProjLine::ProjLine(const Vec3& coeffs) : coeffs_(coeffs) {
    if (!coeffs_.allFinite() || coeffs_.cwiseAbs().maxCoeff() == 0.0) {
        fail(ErrorCode::InvalidArgument, "projective line needs finite, not all zero coefficients");
    }
}

double ProjLine::evaluate(const ProjPoint& p) const {
    return normalized().dot(p.normalized());
}

bool ProjLine::incident(const ProjPoint& p, double tol) const {
    return std::abs(evaluate(p)) < tol;
}

bool ProjLine::approx_equal(const ProjLine& other, double tol) const {
    return same_up_to_scale(coeffs_, other.coeffs_, tol);
}

ProjMap::ProjMap(const Mat3& m) : matrix_(m) {
    if (!m.allFinite() || m.cwiseAbs().maxCoeff() == 0.0 ||
        std::abs(scaled_by_max(m).determinant()) < kSingularityFloor) {
        fail(ErrorCode::SingularMap, "projective map is singular");
    }
}

ProjMap ProjMap::identity() { return ProjMap(Mat3::Identity()); }

ProjMap ProjMap::diagonal(double a, double b, double c) {
    return ProjMap(Vec3(a, b, c).asDiagonal().toDenseMatrix());
}

ProjMap ProjMap::affine(const Mat2& a, const Vec2& t) {
    Mat3 m = Mat3::Identity();
    m.topLeftCorner<2, 2>() = a;
    m.topRightCorner<2, 1>() = t;
    return ProjMap(m);
}

ProjPoint ProjMap::operator()(const ProjPoint& p) const { return ProjPoint(matrix_ * p.coords()); }

ProjLine ProjMap::operator()(const ProjLine& l) const {
    return ProjLine(matrix_.inverse().transpose() * l.coeffs());
}

ProjMap ProjMap::operator*(const ProjMap& rhs) const { return ProjMap(matrix_ * rhs.matrix_); }

ProjMap ProjMap::inverse() const { return ProjMap(matrix_.inverse()); }

int ProjMap::orientation() const { return matrix_.determinant() > 0 ? 1 : -1; }

double ProjectiveRatio::value() const {
    if (den == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return num / den;
}

bool ProjectiveRatio::approx_equal(const ProjectiveRatio& other, double tol) const {
    return same_up_to_scale(Vec3(num, den, 0.0), Vec3(other.num, other.den, 0.0), tol);
}

double cross_ratio_affine(double y1, double y2, double y3, double y4, InfinityPolicy policy) {
    const int distinct = 1 + (y2 != y1) + (y3 != y1 && y3 != y2) + (y4 != y1 && y4 != y2 && y4 != y3);
    if (distinct < 3) {
        fail(ErrorCode::DegenerateConfiguration, "cross-ratio needs at least three distinct points");
    }
    const double den = (y1 - y2) * (y3 - y4);
    if (den == 0.0) {
        if (policy == InfinityPolicy::ExtendedReal) {
            return std::numeric_limits<double>::infinity();
        }
        fail(ErrorCode::InfiniteValue, "cross-ratio is the point at infinity");
    }
    return (y1 - y3) * (y2 - y4) / den;
}

ProjectiveRatio cross_ratio_proj(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
                                 const ProjPoint& p4) {
    const std::array<Vec3, 4> pts = {p1.normalized(), p2.normalized(), p3.normalized(),
                                     p4.normalized()};
    const std::array<ProjPoint, 4> raw = {p1, p2, p3, p4};

    int distinct = 0;
    for (int i = 0; i < 4; ++i) {
        bool repeated = false;
        for (int j = 0; j < i; ++j) {
            repeated = repeated || raw[i].approx_equal(raw[j]);
        }
        distinct += repeated ? 0 : 1;
    }
    if (distinct < 3) {
        fail(ErrorCode::DegenerateConfiguration, "cross-ratio needs at least three distinct points");
    }
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            for (int k = j + 1; k < 4; ++k) {
                Mat3 m;
                m << pts[i], pts[j], pts[k];
                if (std::abs(m.determinant()) >= kCollinearityTol) {
                    fail(ErrorCode::NotCollinear, "cross-ratio points are not collinear");
                }
            }
        }
    }

    // Basis of the common line: the best-separated pair.
    Vec3 a = pts[0];
    Vec3 b = pts[1];
    double best = -1.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            const double sep = pts[i].cross(pts[j]).norm();
            if (sep > best) {
                best = sep;
                a = pts[i];
                b = pts[j];
            }
        }
    }
    const Vec3 axb = a.cross(b);
    const double scale = axb.squaredNorm();
    std::array<double, 4> x{};
    std::array<double, 4> y{};
    for (int i = 0; i < 4; ++i) {
        x[i] = pts[i].cross(b).dot(axb) / scale;
        y[i] = a.cross(pts[i]).dot(axb) / scale;
    }

    // Value y/x for [x : y]; the pair below is [num : den].
    const double num = (x[2] * y[0] - x[0] * y[2]) * (x[3] * y[1] - x[1] * y[3]);
    const double den = (x[1] * y[0] - x[0] * y[1]) * (x[3] * y[2] - x[2] * y[3]);
    const double norm = std::max(std::abs(num), std::abs(den));
    return ProjectiveRatio{num / norm, den / norm};
}

ProjLine line_through(const ProjPoint& p, const ProjPoint& q) {
    if (p.approx_equal(q)) {
        fail(ErrorCode::IdenticalPoints, "line_through needs two distinct points");
    }
    return ProjLine(p.normalized().cross(q.normalized()));
}

ProjPoint meet(const ProjLine& l1, const ProjLine& l2) {
    if (l1.approx_equal(l2)) {
        fail(ErrorCode::IdenticalLines, "meet needs two distinct lines");
    }
    return ProjPoint(l1.normalized().cross(l2.normalized()));
}

ProjPoint apply_map(const ProjMap& g, const ProjPoint& p) { return g(p); }

double collinearity_defect(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
    Mat3 m;
    m << p.normalized(), q.normalized(), r.normalized();
    return std::abs(m.determinant());
}

bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r, double tol) {
    return collinearity_defect(p, q, r) < tol;
}

}  // namespace hilbertgeo

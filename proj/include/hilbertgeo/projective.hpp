#pragma once

#include <Eigen/Dense>

#include <array>

namespace hilbertgeo {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;

/// Absolute tolerance on max-normalized homogeneous coordinates for equality.
inline constexpr double kProjectiveEqualityTol = 1e-10;
/// |det| bound below which three max-normalized points count as collinear.
inline constexpr double kCollinearityTol = 1e-9;
/// |det| floor for a max-normalized 3x3 matrix to count as invertible.
inline constexpr double kSingularityFloor = 1e-12;

/// Scales a nonzero homogeneous triple so its largest-magnitude entry is +1.
Vec3 max_normalized(const Vec3& v);

/// A point of the real projective plane, stored as a homogeneous triple.
class ProjPoint {
public:
    ProjPoint(double x, double y, double z);
    explicit ProjPoint(const Vec3& coords);

    /// [x : y : 1]
    static ProjPoint from_affine(const Vec2& p);
    /// [dx : dy : 0], the point at infinity in direction d.
    static ProjPoint at_infinity(const Vec2& d);

    const Vec3& coords() const { return coords_; }
    Vec3 normalized() const { return max_normalized(coords_); }

    bool is_ideal(double tol = 1e-12) const;
    /// Chart coordinates in z = 1. Throws InfiniteValue for ideal points.
    Vec2 affine() const;

    bool approx_equal(const ProjPoint& other, double tol = kProjectiveEqualityTol) const;
    bool operator==(const ProjPoint& other) const { return approx_equal(other); }

private:
    Vec3 coords_;
};

/// A line of the projective plane in dual coordinates: a.x + b.y + c.z = 0.
class ProjLine {
public:
    ProjLine(double a, double b, double c);
    explicit ProjLine(const Vec3& coeffs);

    const Vec3& coeffs() const { return coeffs_; }
    Vec3 normalized() const { return max_normalized(coeffs_); }

    /// Signed value of the defining form at p, both sides max-normalized.
    double evaluate(const ProjPoint& p) const;
    bool incident(const ProjPoint& p, double tol = kProjectiveEqualityTol) const;

    bool approx_equal(const ProjLine& other, double tol = kProjectiveEqualityTol) const;
    bool operator==(const ProjLine& other) const { return approx_equal(other); }

private:
    Vec3 coeffs_;
};

/// An element of PGL(3, R).
class ProjMap {
public:
    explicit ProjMap(const Mat3& m);

    static ProjMap identity();
    static ProjMap diagonal(double a, double b, double c);
    /// The affine map p -> A p + t of the standard chart.
    static ProjMap affine(const Mat2& a, const Vec2& t);

    const Mat3& matrix() const { return matrix_; }

    ProjPoint operator()(const ProjPoint& p) const;
    /// Lines transform by the inverse transpose.
    ProjLine operator()(const ProjLine& l) const;

    ProjMap operator*(const ProjMap& rhs) const;
    ProjMap inverse() const;

    /// Sign of the determinant; negative maps reverse orientation.
    int orientation() const;

private:
    Mat3 matrix_;
};

/// A point of RP^1 written [num : den], standing for the value num/den.
struct ProjectiveRatio {
    double num = 0.0;
    double den = 1.0;

    bool is_infinite() const { return den == 0.0; }
    /// num/den, +inf when den is zero.
    double value() const;
    bool approx_equal(const ProjectiveRatio& other, double tol = 1e-9) const;
};

enum class InfinityPolicy { Throw, ExtendedReal };

/// cr(y1,y2,y3,y4) = (y1-y3)(y2-y4) / ((y1-y2)(y3-y4)).
///
/// Needs at least three distinct inputs. A vanishing denominator throws
/// InfiniteValue, or returns +inf under InfinityPolicy::ExtendedReal.
double cross_ratio_affine(double y1, double y2, double y3, double y4,
                          InfinityPolicy policy = InfinityPolicy::Throw);

/// Homogeneous cross-ratio of four collinear points, at least three distinct.
///
/// The points are written in a basis of their common line as [x_i : y_i] and
/// the result is
///   [(x3 y1 - x1 y3)(x4 y2 - x2 y4) : (x2 y1 - x1 y2)(x4 y3 - x3 y4)],
/// which agrees with cross_ratio_affine in any affine chart. Never fails on
/// infinite values.
ProjectiveRatio cross_ratio_proj(const ProjPoint& p1, const ProjPoint& p2,
                                 const ProjPoint& p3, const ProjPoint& p4);

ProjLine line_through(const ProjPoint& p, const ProjPoint& q);
ProjPoint meet(const ProjLine& l1, const ProjLine& l2);
ProjPoint apply_map(const ProjMap& g, const ProjPoint& p);

/// |det| of three max-normalized points.
double collinearity_defect(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);
bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r,
               double tol = kCollinearityTol);

}  // namespace hilbertgeo

#pragma once

#include "hilbertgeo/projective.hpp"

#include <memory>
#include <string_view>
#include <utility>
#include <vector>

namespace hilbertgeo {

/// Distance tolerance (chart units) for accepting a point as a boundary point.
inline constexpr double kBoundaryTol = 1e-8;

/// Parameters s of the boundary hits of the line base + s * dir.
/// backward < 0 < forward; either may be infinite when the hit is an ideal point.
struct RayHits {
    double backward;
    double forward;
};

/// An open, properly convex domain of RP^2, presented in the standard chart z = 1.
///
/// Every realization keeps its interior off the line at infinity, so interior
/// points are always finite chart points. Boundary points may be ideal (the
/// quadrant touches the line at infinity along one edge).
class ConvexDomain {
public:
    virtual ~ConvexDomain() = default;

    virtual std::string_view kind() const = 0;

    /// Strict interior membership.
    virtual bool contains(const Vec2& p) const = 0;
    bool contains(const ProjPoint& p) const;

    /// Boundary hits along a line through an interior point. Throws
    /// PointsOutsideDomain when base is not interior; dir must be nonzero.
    virtual RayHits ray_hits(const Vec2& base, const Vec2& dir) const = 0;

    virtual bool on_boundary(const ProjPoint& p) const = 0;

    /// Supporting line at a boundary point where the boundary is smooth.
    virtual ProjLine tangent_at(const ProjPoint& p) const = 0;

    /// Homogeneous representative of a point of the closed domain chosen so that
    /// positive combinations of lifts stay in the closed domain (z >= 0).
    virtual Vec3 lift(const ProjPoint& p) const;

    /// Image of the domain under g; throws InvalidDomain when the image meets
    /// the line at infinity.
    virtual std::unique_ptr<ConvexDomain> transformed(const ProjMap& g) const = 0;

    /// Some interior point.
    virtual Vec2 interior_point() const = 0;
};

/// The open triangle {[x0 v0 + x1 v1 + x2 v2] : x_i > 0}.
///
/// The signs of the representatives select one of the four triangles spanned
/// by the vertices. Vertices may be ideal; the interior may not meet z = 0.
class TriangleDomain final : public ConvexDomain {
public:
    TriangleDomain(const Vec3& v0, const Vec3& v1, const Vec3& v2);
    TriangleDomain(const ProjPoint& v0, const ProjPoint& v1, const ProjPoint& v2);

    /// Vertices [1:0:0], [0:1:0], [0:0:1]; the open positive quadrant Q.
    static TriangleDomain quadrant();

    std::string_view kind() const override { return "triangle"; }
    bool contains(const Vec2& p) const override;
    using ConvexDomain::contains;
    RayHits ray_hits(const Vec2& base, const Vec2& dir) const override;
    bool on_boundary(const ProjPoint& p) const override;
    ProjLine tangent_at(const ProjPoint& p) const override;
    Vec3 lift(const ProjPoint& p) const override;
    std::unique_ptr<ConvexDomain> transformed(const ProjMap& g) const override;
    Vec2 interior_point() const override;

    /// Vertex representatives, as chosen at construction (columns).
    const Mat3& basis() const { return basis_; }
    Vec3 vertex(int i) const { return basis_.col(i); }

    /// Coordinates of a homogeneous vector in the vertex basis.
    Vec3 barycentric(const Vec3& x) const { return inverse_ * x; }

    bool is_standard_quadrant() const;

private:
    /// Max-normalized barycentric coordinates with the sign that makes the
    /// largest one positive.
    Vec3 boundary_coordinates(const ProjPoint& p) const;

    Mat3 basis_;
    Mat3 inverse_;
};

/// The image c + S(D) of the open unit disc D.
class EllipseDomain final : public ConvexDomain {
public:
    EllipseDomain(const Vec2& center, const Mat2& shape);

    static EllipseDomain unit_disc();

    std::string_view kind() const override { return "ellipse"; }
    bool contains(const Vec2& p) const override;
    using ConvexDomain::contains;
    RayHits ray_hits(const Vec2& base, const Vec2& dir) const override;
    bool on_boundary(const ProjPoint& p) const override;
    ProjLine tangent_at(const ProjPoint& p) const override;
    std::unique_ptr<ConvexDomain> transformed(const ProjMap& g) const override;
    Vec2 interior_point() const override { return center_; }

    const Vec2& center() const { return center_; }
    const Mat2& shape() const { return shape_; }

    /// c + S (cos theta, sin theta)
    Vec2 boundary_point(double theta) const;

private:
    Vec2 center_;
    Mat2 shape_;
    Mat2 shape_inverse_;
};

/// A strictly convex polygon with counterclockwise vertices.
class PolygonDomain final : public ConvexDomain {
public:
    explicit PolygonDomain(std::vector<Vec2> vertices);

    std::string_view kind() const override { return "polygon"; }
    bool contains(const Vec2& p) const override;
    using ConvexDomain::contains;
    RayHits ray_hits(const Vec2& base, const Vec2& dir) const override;
    bool on_boundary(const ProjPoint& p) const override;
    ProjLine tangent_at(const ProjPoint& p) const override;
    std::unique_ptr<ConvexDomain> transformed(const ProjMap& g) const override;
    Vec2 interior_point() const override;

    const std::vector<Vec2>& vertices() const { return vertices_; }

    /// Copy scaled toward the vertex centroid by factor in (0, 1].
    PolygonDomain scaled_toward_centroid(double factor) const;

private:
    /// Signed distances to the edge lines, positive inside.
    double edge_distance(std::size_t edge, const Vec2& p) const;

    std::vector<Vec2> vertices_;
    std::vector<Vec2> inward_normals_;
};

/// Chord through two distinct interior points: boundary points (a, d) with
/// a, b, c, d in linear order.
std::pair<ProjPoint, ProjPoint> chord_endpoints(const ConvexDomain& dom, const Vec2& b,
                                                const Vec2& c);

ProjLine tangent_at(const ConvexDomain& dom, const ProjPoint& p);
bool contains(const ConvexDomain& dom, const ProjPoint& p);

}  // namespace hilbertgeo

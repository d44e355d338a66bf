#pragma once

#include "hilbertgeo/domains.hpp"
#include "hilbertgeo/numerics.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace hilbertgeo {

/// Full: d = |log cr|. Announced: half that metric, so areas are a quarter.
enum class Normalization { Full, Announced };

inline double distance_scale(Normalization n) { return n == Normalization::Full ? 1.0 : 0.5; }
inline double area_scale(Normalization n) { return n == Normalization::Full ? 1.0 : 0.25; }

std::string_view to_string(Normalization n);
/// Accepts "full" or "announced".
Normalization parse_normalization(std::string_view text);

struct TangentVector {
    Vec2 base;
    Vec2 dir;
};

inline constexpr int kDefaultDensitySamples = 1024;
inline constexpr int kAcceptanceDensitySamples = 4096;

/// |log cr(a, b, c, d)| along the chord through b and c (Full), halved under
/// Announced. Points within kBoundaryTol of the boundary along the chord are
/// rejected with PointsOutsideDomain.
double hilbert_distance(const ConvexDomain& dom, const Vec2& b, const Vec2& c,
                        Normalization norm = Normalization::Full);

/// (1/|x - a| + 1/|x - b|) |dir| where a, b are the boundary hits of the line
/// through the base point in direction dir.
double finsler_norm(const ConvexDomain& dom, const TangentVector& v,
                    Normalization norm = Normalization::Full);

/// A norm on the plane, given as a function of the vector.
using NormFunction = std::function<double(const Vec2&)>;

/// n points of the unit sphere of a norm, the i-th at angle 2 pi i / n.
std::vector<Vec2> unit_sphere_samples(const NormFunction& norm, int n);

/// Largest |det(a, b)| over pairs of sampled sphere points.
///
/// The supremum over the unit ball is attained with both vectors on the unit
/// sphere: det is linear in each argument, so pushing either vector outward
/// along its ray never decreases |det|. For a fixed a, |det(a, .)| is a linear
/// functional and is unimodal along the convex sphere curve, so a rotating
/// pointer finds each partner in amortized constant time.
double max_unit_parallelogram(std::span<const Vec2> sphere);

/// Exhaustive O(n^2) version of max_unit_parallelogram.
double max_unit_parallelogram_exhaustive(std::span<const Vec2> sphere);

/// Sampled maximum followed by alternating golden-section searches on the two
/// angles around the best sampled pair. Never below max_unit_parallelogram.
double max_unit_parallelogram_refined(const NormFunction& norm, int n);

/// p-area density of a norm relative to Lebesgue measure: 1 / K, with K from
/// max_unit_parallelogram_refined.
double parallelogram_density(const NormFunction& norm, int n = kDefaultDensitySamples);

std::vector<Vec2> unit_ball_boundary(const ConvexDomain& dom, const Vec2& x, int n,
                                     Normalization norm = Normalization::Full);

/// Hilbert area density at x relative to Lebesgue measure in the standard chart.
double p_area_density(const ConvexDomain& dom, const Vec2& x, int n = kDefaultDensitySamples,
                      Normalization norm = Normalization::Full);

/// A convex polygon in the closed domain. Vertices may be ideal points; each is
/// lifted into the domain's cone, so the polygon is the one inside the domain.
struct PolygonRegion {
    std::vector<ProjPoint> vertices;
};

/// The image of a parameter polygon under a smooth injective map with the given
/// Jacobian determinant.
struct MappedRegion {
    std::vector<Vec2> parameter_polygon;
    std::function<Vec2(const Vec2&)> map;
    std::function<double(const Vec2&)> jacobian;
};

using Region = std::variant<PolygonRegion, MappedRegion>;

enum class AreaMethod { Adaptive, MonteCarlo };

struct AreaOptions {
    AreaMethod method = AreaMethod::Adaptive;
    int density_samples = kDefaultDensitySamples;
    std::int64_t budget = kDefaultEvaluationBudget;
    std::int64_t mc_samples = 1'000'000;
    std::uint64_t seed = 1;
};

/// Integral of p_area_density over the region. Adaptive quadrature reports its
/// error estimate; Monte Carlo reports the standard error.
QuadratureResult hilbert_area(const ConvexDomain& dom, const Region& region,
                              Normalization norm, double tol, const AreaOptions& options = {});

}  // namespace hilbertgeo

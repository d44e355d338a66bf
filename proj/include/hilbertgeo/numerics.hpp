#pragma once

#include "hilbertgeo/projective.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace hilbertgeo {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::int64_t evaluations = 0;
};

/// Default cap on integrand evaluations for one request.
inline constexpr std::int64_t kDefaultEvaluationBudget = 10'000'000;

/// Caller-declared endpoint behaviour for integrate_1d. A singular endpoint is
/// approached by geometric (ratio 1/2) subdivision; evaluation never touches
/// either endpoint.
struct EndpointFlags {
    bool singular_lo = false;
    bool singular_hi = false;
};

/// Adaptive 15-point Gauss-Kronrod quadrature with a global error-ordered queue.
///
/// hi may be +infinity; with lo > 0 the tail is mapped by s = 1/u onto
/// (0, 1/lo], otherwise [lo, 1] is integrated directly first. Throws
/// NonConvergenceError when the budget runs out before the summed error
/// estimate drops below tol.
QuadratureResult integrate_1d(const std::function<double(double)>& f, double lo, double hi,
                              double tol, EndpointFlags flags = {},
                              std::int64_t budget = kDefaultEvaluationBudget);

using Triangle2 = std::array<Vec2, 3>;

/// Adaptive integration over a union of triangles. Each cell is estimated by a
/// degree-5 seven-point rule; the error estimate is the difference between the
/// rule on the cell and the sum over its four midpoint children. Cells are
/// refined largest-error first. The integrand is never evaluated on a cell
/// boundary, so integrable corner singularities are fine.
QuadratureResult integrate_2d(const std::function<double(const Vec2&)>& density,
                              std::span<const Triangle2> region, double tol,
                              std::int64_t budget = kDefaultEvaluationBudget);

/// A point produced by a sampler together with its change-of-variables weight.
struct WeightedPoint {
    Vec2 point;
    double weight;
};

/// A region presented as strata, each a map from the unit square.
/// The integral over the region is the sum over strata of the integral of
/// density(point) * weight over the unit square.
struct RegionSampler {
    std::vector<std::function<WeightedPoint(const Vec2&)>> strata;

    static RegionSampler unit_square();
    static RegionSampler rectangle(const Vec2& lo, const Vec2& hi);
    /// Uniform sampling of a triangle.
    static RegionSampler triangle(const Triangle2& tri);
    /// Six strata per triangle, each graded quadratically toward one corner so
    /// that densities blowing up like r^(-3/2) at the corners keep finite variance.
    static RegionSampler graded_triangle(const Triangle2& tri);
};

/// Stratified Monte Carlo estimate with standard error. Samples are drawn in
/// fixed blocks with per-block seeds, so the result is bitwise reproducible for
/// a given seed regardless of the thread count.
QuadratureResult monte_carlo_2d(const std::function<double(const Vec2&)>& density,
                                const RegionSampler& sampler, std::int64_t n,
                                std::uint64_t seed);

/// (f(x + h) - f(x - h)) / (2h)
double central_difference(const std::function<double(double)>& f, double x, double h);

struct Minimum {
    double argmin;
    double value;
};

/// Golden-section search for a unimodal function on [lo, hi].
Minimum golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                double tol = 1e-10);

/// Worker count from HILBERTGEO_THREADS (0 or unset: hardware concurrency).
int configured_threads();

/// Runs body(i) for i in [0, count) on up to configured_threads() workers.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace hilbertgeo

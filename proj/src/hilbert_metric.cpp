#include "hilbertgeo/hilbert_metric.hpp"

#include "hilbertgeo/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace hilbertgeo {

namespace {

double det2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

Triangle2 unit_simplex() { return {Vec2(0.0, 0.0), Vec2(1.0, 0.0), Vec2(0.0, 1.0)}; }

/// Chart point and Jacobian of the projective parametrization
/// (u, v) -> [(1 - u - v) l0 + u l1 + v l2] of a triangle with lifted vertices.
struct ProjectiveTriangle {
    Vec3 l0;
    Vec3 l1;
    Vec3 l2;
    double det;

    ProjectiveTriangle(const Vec3& a, const Vec3& b, const Vec3& c) : l0(a), l1(b), l2(c) {
        Mat3 m;
        m << a, b, c;
        det = std::abs(m.determinant());
    }

    WeightedPoint operator()(const Vec2& uv) const {
        const Vec3 p = (1.0 - uv.x() - uv.y()) * l0 + uv.x() * l1 + uv.y() * l2;
        const double z = p.z();
        return WeightedPoint{p.head<2>() / z, det / (z * z * z)};
    }
};

void require_in_closure(const ConvexDomain& dom, const ProjPoint& p) {
    if (!dom.contains(p) && !dom.on_boundary(p)) {
        fail(ErrorCode::RegionOutsideDomain, "region vertex lies outside the closed domain");
    }
}

}  // namespace

std::string_view to_string(Normalization n) {
    return n == Normalization::Full ? "full" : "announced";
}

Normalization parse_normalization(std::string_view text) {
    if (text == "full") {
        return Normalization::Full;
    }
    if (text == "announced") {
        return Normalization::Announced;
    }
    fail(ErrorCode::InvalidArgument, "normalization must be 'full' or 'announced', got '" +
                                         std::string(text) + "'");
}

double hilbert_distance(const ConvexDomain& dom, const Vec2& b, const Vec2& c, Normalization norm) {
    if (!dom.contains(b) || !dom.contains(c)) {
        fail(ErrorCode::PointsOutsideDomain, "hilbert_distance needs interior points");
    }
    const Vec2 dir = c - b;
    const double length = dir.norm();
    if (length == 0.0) {
        return 0.0;
    }
    const RayHits hits = dom.ray_hits(b, dir);
    // b sits at s = 0, c at s = 1; a and d at hits.backward and hits.forward.
    if (-hits.backward * length < kBoundaryTol || (hits.forward - 1.0) * length < kBoundaryTol) {
        fail(ErrorCode::PointsOutsideDomain, "point lies within boundary tolerance of the domain");
    }
    // log cr(a,b,c,d) = log((1 - sa)/(-sa)) + log(sd/(sd - 1)); ideal ends drop out.
    const double full = std::log1p(1.0 / -hits.backward) + std::log1p(1.0 / (hits.forward - 1.0));
    return full * distance_scale(norm);
}

double finsler_norm(const ConvexDomain& dom, const TangentVector& v, Normalization norm) {
    if (!dom.contains(v.base)) {
        fail(ErrorCode::PointsOutsideDomain, "finsler_norm needs an interior base point");
    }
    if (v.dir.x() == 0.0 && v.dir.y() == 0.0) {
        return 0.0;
    }
    const RayHits hits = dom.ray_hits(v.base, v.dir);
    return (1.0 / -hits.backward + 1.0 / hits.forward) * distance_scale(norm);
}

std::vector<Vec2> unit_sphere_samples(const NormFunction& norm, int n) {
    if (n < 8) {
        fail(ErrorCode::InvalidArgument, "unit sphere sampling needs n >= 8");
    }
    std::vector<Vec2> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double theta = 2.0 * std::numbers::pi * i / n;
        const Vec2 e(std::cos(theta), std::sin(theta));
        out.push_back(e / norm(e));
    }
    return out;
}

namespace {

struct SampledPair {
    double value;
    std::size_t i;
    std::size_t j;
};

SampledPair best_sampled_pair(std::span<const Vec2> sphere) {
    const std::size_t n = sphere.size();
    if (n < 3) {
        fail(ErrorCode::InvalidArgument, "need at least three sphere samples");
    }
    auto at = [&](std::size_t k) -> const Vec2& { return sphere[k % n]; };
    SampledPair best{0.0, 0, 1};
    std::size_t j = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (j <= i) {
            j = i + 1;
        }
        while (j + 1 < i + n && det2(at(i), at(j + 1)) >= det2(at(i), at(j))) {
            ++j;
        }
        // Guard against sampling noise stalling the pointer on a near-plateau.
        for (std::size_t k = j; k < std::min(j + 3, i + n); ++k) {
            const double d = det2(at(i), at(k));
            if (d > best.value) {
                best = SampledPair{d, i, k % n};
            }
        }
    }
    return best;
}

Vec2 sphere_point(const NormFunction& norm, double theta) {
    const Vec2 e(std::cos(theta), std::sin(theta));
    return e / norm(e);
}

}  // namespace

double max_unit_parallelogram(std::span<const Vec2> sphere) {
    return best_sampled_pair(sphere).value;
}

double max_unit_parallelogram_exhaustive(std::span<const Vec2> sphere) {
    double best = 0.0;
    for (std::size_t i = 0; i < sphere.size(); ++i) {
        for (std::size_t j = i + 1; j < sphere.size(); ++j) {
            best = std::max(best, std::abs(det2(sphere[i], sphere[j])));
        }
    }
    return best;
}

double max_unit_parallelogram_refined(const NormFunction& norm, int n) {
    const std::vector<Vec2> sphere = unit_sphere_samples(norm, n);
    const SampledPair best = best_sampled_pair(sphere);
    const double step = 2.0 * std::numbers::pi / n;
    double a = step * static_cast<double>(best.i);
    double b = step * static_cast<double>(best.j);
    double value = best.value;
    for (int round = 0; round < 2; ++round) {
        const Vec2 pa = sphere_point(norm, a);
        const Minimum mb = golden_section_minimize(
            [&](double t) { return -std::abs(det2(pa, sphere_point(norm, t))); }, b - step, b + step,
            1e-11);
        if (-mb.value > value) {
            value = -mb.value;
            b = mb.argmin;
        }
        const Vec2 pb = sphere_point(norm, b);
        const Minimum ma = golden_section_minimize(
            [&](double t) { return -std::abs(det2(sphere_point(norm, t), pb)); }, a - step, a + step,
            1e-11);
        if (-ma.value > value) {
            value = -ma.value;
            a = ma.argmin;
        }
    }
    return value;
}

double parallelogram_density(const NormFunction& norm, int n) {
    return 1.0 / max_unit_parallelogram_refined(norm, n);
}

std::vector<Vec2> unit_ball_boundary(const ConvexDomain& dom, const Vec2& x, int n,
                                     Normalization norm) {
    if (!dom.contains(x)) {
        fail(ErrorCode::PointsOutsideDomain, "unit ball needs an interior base point");
    }
    return unit_sphere_samples(
        [&](const Vec2& v) { return finsler_norm(dom, TangentVector{x, v}, norm); }, n);
}

double p_area_density(const ConvexDomain& dom, const Vec2& x, int n, Normalization norm) {
    if (!dom.contains(x)) {
        fail(ErrorCode::PointsOutsideDomain, "unit ball needs an interior base point");
    }
    const double k = max_unit_parallelogram_refined(
        [&](const Vec2& v) { return finsler_norm(dom, TangentVector{x, v}); }, n);
    return area_scale(norm) / k;
}

QuadratureResult hilbert_area(const ConvexDomain& dom, const Region& region, Normalization norm,
                              double tol, const AreaOptions& options) {
    if (options.method == AreaMethod::Adaptive && !(tol > 0.0)) {
        fail(ErrorCode::InvalidArgument, "hilbert_area: tolerance must be positive");
    }
    auto density = [&dom, &options](const Vec2& x) {
        // Only boundary points (a null set) can fail this once the region is validated.
        if (!dom.contains(x)) {
            return 0.0;
        }
        return p_area_density(dom, x, options.density_samples, Normalization::Full);
    };

    // Every region becomes a list of parameter triangles plus a map into the chart.
    std::vector<Triangle2> cells;
    std::vector<std::function<WeightedPoint(const Vec2&)>> maps;

    if (const auto* poly = std::get_if<PolygonRegion>(&region)) {
        if (poly->vertices.size() < 3) {
            fail(ErrorCode::InvalidArgument, "region polygon needs at least three vertices");
        }
        std::vector<Vec3> lifted;
        for (const ProjPoint& v : poly->vertices) {
            require_in_closure(dom, v);
            lifted.push_back(dom.lift(v));
        }
        for (std::size_t i = 1; i + 1 < lifted.size(); ++i) {
            cells.push_back(unit_simplex());
            maps.push_back(ProjectiveTriangle(lifted[0], lifted[i], lifted[i + 1]));
        }
    } else {
        const auto& mapped = std::get<MappedRegion>(region);
        const auto& polygon = mapped.parameter_polygon;
        if (polygon.size() < 3) {
            fail(ErrorCode::InvalidArgument, "region polygon needs at least three vertices");
        }
        for (const Vec2& w : polygon) {
            require_in_closure(dom, ProjPoint::from_affine(mapped.map(w)));
        }
        auto map = [mapped](const Vec2& w) {
            return WeightedPoint{mapped.map(w), std::abs(mapped.jacobian(w))};
        };
        for (std::size_t i = 1; i + 1 < polygon.size(); ++i) {
            cells.push_back({polygon[0], polygon[i], polygon[i + 1]});
            maps.push_back(map);
        }
    }

    const double scale = area_scale(norm);
    QuadratureResult result;
    if (options.method == AreaMethod::Adaptive) {
        // One integration per piece keeps each map attached to its own cells.
        const double piece_tol = tol / scale / static_cast<double>(cells.size());
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const auto& map = maps[i];
            auto integrand = [&](const Vec2& uv) {
                const WeightedPoint wp = map(uv);
                return density(wp.point) * wp.weight;
            };
            const QuadratureResult piece = integrate_2d(
                integrand, std::span<const Triangle2>(&cells[i], 1), piece_tol,
                options.budget - result.evaluations);
            result.value += piece.value;
            result.error_estimate += piece.error_estimate;
            result.evaluations += piece.evaluations;
        }
    } else {
        RegionSampler sampler;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            for (auto& stratum : RegionSampler::graded_triangle(cells[i]).strata) {
                sampler.strata.push_back([stratum, map = maps[i]](const Vec2& u) {
                    const WeightedPoint inner = stratum(u);
                    const WeightedPoint outer = map(inner.point);
                    return WeightedPoint{outer.point, inner.weight * outer.weight};
                });
            }
        }
        result = monte_carlo_2d(density, sampler, options.mc_samples, options.seed);
    }
    result.value *= scale;
    result.error_estimate *= scale;
    return result;
}

}  // namespace hilbertgeo

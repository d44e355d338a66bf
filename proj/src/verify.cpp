#include "hilbertgeo/verify.hpp"

#include "hilbertgeo/errors.hpp"
#include "hilbertgeo/hex_plane.hpp"
#include "hilbertgeo/hilbert_metric.hpp"
#include "hilbertgeo/ideal_triangle.hpp"
#include "hilbertgeo/numerics.hpp"
#include "hilbertgeo/surface_bounds.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <random>

namespace hilbertgeo {

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool passed;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Vec2 random_point_in(const ConvexDomain& dom, const Vec2& lo, const Vec2& hi,
                     std::mt19937_64& rng) {
    for (;;) {
        const Vec2 p(uniform(rng, lo.x(), hi.x()), uniform(rng, lo.y(), hi.y()));
        if (dom.contains(p)) {
            return p;
        }
    }
}

Outcome closed_form_area() {
    double worst = 0.0;
    for (double t : {1.0, 2.0, 10.0, 100.0}) {
        worst = std::max(worst, std::abs(triangle_area_numeric(t, 1e-8) - triangle_area_closed(t)));
    }
    const double b1 = std::abs(triangle_area_numeric(1.0, 1e-8) - 4.934802200544679);
    return {worst < 1e-6 && b1 < 1e-6, fmt("max |B_num - B| = %.3e, |B(1) - pi^2/2| = %.3e", worst, b1)};
}

Outcome quadrant_density() {
    const TriangleDomain q = TriangleDomain::quadrant();
    std::mt19937_64 rng(20240611);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const Vec2 p(std::exp(uniform(rng, -2.0, 2.0)), std::exp(uniform(rng, -2.0, 2.0)));
        const double d = p_area_density(q, p, kAcceptanceDensitySamples);
        worst = std::max(worst, std::abs(d * p.x() * p.y() - 1.0));
    }
    return {worst < 1e-3, fmt("max relative error %.3e over 20 points", worst)};
}

Outcome hex_density() {
    const double d = parallelogram_density(
        [](const Vec2& w) { return hex_norm(HexVector::from(w)); }, kAcceptanceDensitySamples);
    const double expected = 2.0 / std::sqrt(3.0);
    const double rel = std::abs(d / expected - 1.0);
    return {rel < 1e-3, fmt("density %.12f, relative error %.3e", d, rel)};
}

Outcome hex_isometry() {
    const TriangleDomain q = TriangleDomain::quadrant();
    std::mt19937_64 rng(7);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const HexVector a{uniform(rng, -3, 3), uniform(rng, -3, 3)};
        const HexVector b{uniform(rng, -3, 3), uniform(rng, -3, 3)};
        const double dq = hilbert_distance(q, hex_to_quadrant(a), hex_to_quadrant(b));
        worst = std::max(worst, std::abs(hex_distance(a, b) - dq));
    }
    return {worst < 1e-9, fmt("max |d_Hex - d_Q| = %.3e over 1000 pairs", worst)};
}

Outcome hex_circle() {
    const TriangleDomain q = TriangleDomain::quadrant();
    double worst = 0.0;
    for (double r : {1.0, 2.0}) {
        const HexCircleStats s = hex_circle_stats(r, 600);
        worst = std::max({worst, std::abs(s.circumference - 6.0 * r), std::abs(s.area - 3.0 * r * r)});

        // The same circle measured inside the quadrant.
        double length = 0.0;
        const auto& balls = hex_unit_ball().vertices();
        for (std::size_t k = 0; k < balls.size(); ++k) {
            const Vec2 a = hex_to_quadrant(HexVector::from(r * balls[k]));
            const Vec2 b = hex_to_quadrant(HexVector::from(r * balls[(k + 1) % balls.size()]));
            length += hilbert_distance(q, a, b);
        }
        AreaOptions opt;
        opt.density_samples = kAcceptanceDensitySamples;
        const double area =
            hilbert_area(q, hex_circle_region(q, r), Normalization::Full, 1e-11, opt).value;
        worst = std::max({worst, std::abs(length - 6.0 * r), std::abs(area - 3.0 * r * r)});
    }
    return {worst < 1e-9, fmt("max deviation from 6r and 3r^2: %.3e", worst)};
}

Outcome base_height() {
    std::mt19937_64 rng(11);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const HexVector a{uniform(rng, -1, 1), uniform(rng, -1, 1)};
        const HexVector b{uniform(rng, -1, 1), uniform(rng, -1, 1)};
        const double lhs = hex_parallelogram_area(a, b);
        const double rhs = hex_norm(a) * hex_distance_to_span(b, a);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return {worst < 1e-6, fmt("max |area - base*height| = %.3e over 200", worst)};
}

Outcome metric_axioms() {
    Mat2 shape;
    shape << 2.0, 0.5, 0.0, 1.0;
    const EllipseDomain ellipse(Vec2(0.3, -0.2), shape);
    const PolygonDomain polygon({Vec2(0, 0), Vec2(3, -0.5), Vec2(4, 1.5), Vec2(2.5, 3), Vec2(0.2, 2)});
    std::mt19937_64 rng(13);
    double worst = -1e300;

    auto triples = [&](const ConvexDomain& dom, const Vec2& lo, const Vec2& hi) {
        for (int i = 0; i < 1000; ++i) {
            const Vec2 a = random_point_in(dom, lo, hi, rng);
            const Vec2 b = random_point_in(dom, lo, hi, rng);
            const Vec2 c = random_point_in(dom, lo, hi, rng);
            const double excess = hilbert_distance(dom, a, c) -
                                  (hilbert_distance(dom, a, b) + hilbert_distance(dom, b, c));
            worst = std::max(worst, excess);
        }
    };
    triples(ellipse, Vec2(-2.5, -1.5), Vec2(3.0, 1.0));
    triples(polygon, Vec2(0, -0.5), Vec2(4, 3));
    const bool triangle_ok = worst <= 1e-9;
    const double tri_worst = worst;

    const PolygonDomain inner = polygon.scaled_toward_centroid(0.7);
    double mono = -1e300;
    for (int i = 0; i < 500; ++i) {
        const Vec2 a = random_point_in(inner, Vec2(0, -0.5), Vec2(4, 3), rng);
        const Vec2 b = random_point_in(inner, Vec2(0, -0.5), Vec2(4, 3), rng);
        mono = std::max(mono, hilbert_distance(polygon, a, b) - hilbert_distance(inner, a, b));
    }
    return {triangle_ok && mono <= 1e-9,
            fmt("max triangle excess %.3e, max d_outer - d_inner %.3e", tri_worst, mono)};
}

Outcome derivative() {
    double worst = 0.0;
    for (double t : {1.0, std::numbers::e, 4.0}) {
        const DerivativeCheck c = dB_dt_check(t, 1e-3, 1e-10);
        worst = std::max(worst, std::abs(c.finite_difference - c.analytic));
    }
    return {worst < 1e-4, fmt("max |dB/dt - (log t)/t| = %.3e", worst)};
}

Outcome equality_case() {
    const TriangleDomain q = TriangleDomain::quadrant();
    double worst = 0.0;
    for (double t : {1.0, 5.0}) {
        AreaOptions opt;
        opt.density_samples = kAcceptanceDensitySamples;
        const double area =
            hilbert_area(q, embed_canonical(t).region(), Normalization::Full, 1e-4, opt).value;
        worst = std::max(worst, std::abs(area - triangle_area_closed(t)));
    }
    return {worst < 1e-3, fmt("max |area - B(t)| = %.3e for t in {1, 5}", worst)};
}

Outcome strict_case() {
    auto disc = std::make_shared<EllipseDomain>(EllipseDomain::unit_disc());
    auto vertex = [&](int i) {
        return ProjPoint::from_affine(disc->boundary_point(kPi / 2.0 + 2.0 * kPi * i / 3.0));
    };
    const IdealTriangle tri(disc, vertex(0), vertex(1), vertex(2));
    AreaOptions opt;
    opt.method = AreaMethod::MonteCarlo;
    opt.mc_samples = 1'000'000;
    opt.seed = 42;
    opt.density_samples = 64;
    const QuadratureResult r = hilbert_area(*disc, tri.region(), Normalization::Full, 0.0, opt);
    const double rel = std::abs(r.value / (4.0 * kPi) - 1.0);
    const double bound = triangle_area_lower_bound(tri);
    const bool ok = rel < 0.01 && r.value > kPi * kPi / 2.0 && r.value > bound;
    return {ok, fmt("area %.6f +- %.1e (4pi = %.6f, relative %.2e), bound %.6f", r.value,
                    r.error_estimate, 4.0 * kPi, rel, bound)};
}

ProjMap random_map(std::mt19937_64& rng) {
    Mat3 m = Mat3::Identity();
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            m(i, j) += uniform(rng, -0.3, 0.3);
        }
    }
    return ProjMap(m);
}

Outcome shape_invariance() {
    auto disc = std::make_shared<EllipseDomain>(EllipseDomain::unit_disc());
    Mat2 shape;
    shape << 1.5, 0.4, -0.2, 0.8;
    auto ellipse = std::make_shared<EllipseDomain>(Vec2(0.5, 0.2), shape);
    auto polygon = std::make_shared<PolygonDomain>(
        std::vector<Vec2>{Vec2(0, 0), Vec2(2, 0), Vec2(2.5, 1.5), Vec2(1, 2.5), Vec2(-0.5, 1.2)});

    std::vector<IdealTriangle> fixtures = {
        IdealTriangle(disc, ProjPoint::from_affine(disc->boundary_point(0.3)),
                      ProjPoint::from_affine(disc->boundary_point(2.0)),
                      ProjPoint::from_affine(disc->boundary_point(4.4))),
        IdealTriangle(ellipse, ProjPoint::from_affine(ellipse->boundary_point(1.0)),
                      ProjPoint::from_affine(ellipse->boundary_point(2.5)),
                      ProjPoint::from_affine(ellipse->boundary_point(5.5))),
        IdealTriangle(polygon, ProjPoint::from_affine(Vec2(1.2, 0.0)),
                      ProjPoint::from_affine(Vec2(1.75, 2.0)),
                      ProjPoint::from_affine(Vec2(-0.25, 0.6))),
        embed_canonical(3.0),
    };
    std::mt19937_64 rng(17);
    double worst = 0.0;
    int applied = 0;
    for (const IdealTriangle& tri : fixtures) {
        const double t0 = shape_of_ideal_triangle(tri).raw();
        int done = 0;
        while (done < 100) {
            const ProjMap g = random_map(rng);
            std::optional<IdealTriangle> image;
            try {
                image.emplace(tri.transformed(g));
            } catch (const Error& e) {
                if (e.code() == ErrorCode::InvalidDomain) {
                    continue;  // image meets the line at infinity
                }
                throw;
            }
            const double t1 = shape_of_ideal_triangle(*image).raw();
            worst = std::max(worst, std::abs(t1 / t0 - 1.0));
            ++done;
        }
        applied += done;
    }

    const TriangleDomain q = TriangleDomain::quadrant();
    const Vec3 v0 = q.vertex(0), v1 = q.vertex(1), v2 = q.vertex(2);
    const double t = shape_parameter(q, ProjPoint(Vec3(v0 + 2.0 * v1)), ProjPoint(Vec3(v1 + 3.0 * v2)),
                                     ProjPoint(Vec3(v2 + 4.0 * v0)))
                         .raw();
    const bool ok = worst < 1e-9 && std::abs(t - 24.0) < 1e-9 * 24.0;
    return {ok, fmt("max relative drift %.3e over %d maps, t(2,3,4) = %.15g", worst, applied, t)};
}

Outcome surface_bounds() {
    const double pi2 = kPi * kPi;
    const double a0 = alpha_bound(SurfaceSpec{2, {0, 0, 0, 0}});
    std::mt19937_64 rng(19);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        SurfaceSpec s{2, {}};
        double sum = 0.0;
        for (int k = 0; k < 4; ++k) {
            s.tau.push_back(uniform(rng, -3.0, 3.0));
            sum += triangle_area_closed(std::exp(s.tau.back()), Normalization::Announced);
        }
        worst = std::max(worst, std::abs(alpha_bound(s) - sum));
    }
    const double orb = orbifold_bound(OrbifoldSpec{Rational(-1, 42)});
    const double e0 = std::abs(a0 - pi2 / 2.0);
    const double e1 = std::abs(orb - pi2 / 168.0);
    return {e0 < 1e-12 && worst < 1e-12 && e1 < 1e-12,
            fmt("|alpha - pi^2/2| = %.1e, max decomposition gap %.1e, |orb - pi^2/168| = %.1e", e0,
                worst, e1)};
}

struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "closed-form triangle area", closed_form_area},
        {2, "quadrant density 1/(xy)", quadrant_density},
        {3, "hex density 2/sqrt(3)", hex_density},
        {4, "hex-quadrant isometry", hex_isometry},
        {5, "hex circle 6r and 3r^2", hex_circle},
        {6, "hex base x height", base_height},
        {7, "metric axioms and monotonicity", metric_axioms},
        {8, "dB/dt = (log t)/t", derivative},
        {9, "equality case in the quadrant", equality_case},
        {10, "strict inequality in the disc", strict_case},
        {11, "shape parameter invariance", shape_invariance},
        {12, "surface and orbifold bounds", surface_bounds},
    };
    return all;
}

}  // namespace

std::vector<int> criterion_ids() {
    std::vector<int> ids;
    for (const Criterion& c : criteria()) {
        ids.push_back(c.id);
    }
    return ids;
}

CriterionResult run_criterion(int id) {
    for (const Criterion& c : criteria()) {
        if (c.id != id) {
            continue;
        }
        CriterionResult result{c.id, c.name, false, {}, 0.0};
        const auto start = std::chrono::steady_clock::now();
        try {
            const Outcome o = c.run();
            result.passed = o.passed;
            result.detail = o.detail;
        } catch (const std::exception& e) {
            result.detail = std::string("error: ") + e.what();
        }
        result.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return result;
    }
    fail(ErrorCode::InvalidArgument, "no acceptance criterion " + std::to_string(id));
}

std::vector<CriterionResult> run_criteria(const std::vector<int>& ids) {
    std::vector<CriterionResult> out;
    for (int id : ids) {
        out.push_back(run_criterion(id));
    }
    return out;
}

}  // namespace hilbertgeo

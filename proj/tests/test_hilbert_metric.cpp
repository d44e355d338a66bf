#include "hilbertgeo/hilbert_metric.hpp"

#include "hilbertgeo/hex_plane.hpp"
#include "hilbertgeo/ideal_triangle.hpp"

#include "support.hpp"

#include <numbers>

using namespace hilbertgeo;
using testing::error_code_of;
using testing::uniform;

namespace {

constexpr double kPi = std::numbers::pi;

// Twice the hyperbolic distance of the Klein model.
double klein_full(const Vec2& a, const Vec2& b) {
    const double c = (1.0 - a.dot(b)) / std::sqrt((1.0 - a.squaredNorm()) * (1.0 - b.squaredNorm()));
    return 2.0 * std::acosh(c);
}

// Hilbert metric of a simplex: log of max/min of the coordinate ratios.
double simplex_distance(const Vec3& x, const Vec3& y) {
    const Vec3 r = y.cwiseQuotient(x);
    return std::log(r.maxCoeff() / r.minCoeff());
}

// 4 / (1 - r^2)^(3/2): twice-hyperbolic Riemannian area density in the Klein disc.
double disc_density(const Vec2& p) { return 4.0 / std::pow(1.0 - p.squaredNorm(), 1.5); }

Vec2 random_in_disc(std::mt19937_64& rng, double radius) {
    for (;;) {
        const Vec2 p(uniform(rng, -radius, radius), uniform(rng, -radius, radius));
        if (p.norm() < radius) {
            return p;
        }
    }
}

}  // namespace

TEST_SUITE("hilbert_metric") {

TEST_CASE("distance examples") {
    const TriangleDomain q = TriangleDomain::quadrant();
    const double e = std::numbers::e;
    CHECK(hilbert_distance(q, Vec2(1, 1), Vec2(e, e)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(hilbert_distance(q, Vec2(1, 1), Vec2(e, e), Normalization::Announced) ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(hilbert_distance(q, Vec2(2, 3), Vec2(2, 3)) == 0.0);
    const EllipseDomain disc = EllipseDomain::unit_disc();
    CHECK(error_code_of([&] { hilbert_distance(disc, Vec2(0, 0), Vec2(1.0 - 1e-10, 0)); }) ==
          ErrorCode::PointsOutsideDomain);
    CHECK(error_code_of([&] { hilbert_distance(disc, Vec2(0, 0), Vec2(2, 0)); }) ==
          ErrorCode::PointsOutsideDomain);
}

TEST_CASE("disc distance matches the Klein model") {
    const EllipseDomain disc = EllipseDomain::unit_disc();
    std::mt19937_64 rng(31);
    for (int i = 0; i < 500; ++i) {
        const Vec2 a = random_in_disc(rng, 0.999);
        const Vec2 b = random_in_disc(rng, 0.999);
        CHECK(testing::rel_err(hilbert_distance(disc, a, b), klein_full(a, b)) < 1e-9);
    }
}

TEST_CASE("triangle distance matches the simplex formula") {
    std::mt19937_64 rng(32);
    const Mat3 basis = (Mat3() << 1, 0, -1, 0, 2, 1, 1, 1, 3).finished();
    const TriangleDomain tri(Vec3(basis.col(0)), Vec3(basis.col(1)), Vec3(basis.col(2)));
    for (int i = 0; i < 300; ++i) {
        const Vec3 x(uniform(rng, 0.05, 1), uniform(rng, 0.05, 1), uniform(rng, 0.05, 1));
        const Vec3 y(uniform(rng, 0.05, 1), uniform(rng, 0.05, 1), uniform(rng, 0.05, 1));
        const Vec2 px = ProjPoint(Vec3(tri.basis() * x)).affine();
        const Vec2 py = ProjPoint(Vec3(tri.basis() * y)).affine();
        CHECK(std::abs(hilbert_distance(tri, px, py) - simplex_distance(x, y)) < 1e-9);
    }
}

TEST_CASE("distance is projectively invariant") {
    std::mt19937_64 rng(33);
    const EllipseDomain disc = EllipseDomain::unit_disc();
    int done = 0;
    while (done < 50) {
        const ProjMap g(Mat3::Identity() + testing::random_matrix(rng, 0.3));
        std::unique_ptr<ConvexDomain> image;
        try {
            image = disc.transformed(g);
        } catch (const Error&) {
            continue;
        }
        const Vec2 a = random_in_disc(rng, 0.9), b = random_in_disc(rng, 0.9);
        const Vec2 ga = g(ProjPoint::from_affine(a)).affine();
        const Vec2 gb = g(ProjPoint::from_affine(b)).affine();
        CHECK(testing::rel_err(hilbert_distance(*image, ga, gb), hilbert_distance(disc, a, b)) < 1e-8);
        ++done;
    }
}

TEST_CASE("finsler norm") {
    const EllipseDomain disc = EllipseDomain::unit_disc();
    CHECK(finsler_norm(disc, {Vec2(0, 0), Vec2(1, 0)}) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(finsler_norm(disc, {Vec2(0, 0), Vec2(0, 1)}, Normalization::Announced) ==
          doctest::Approx(1.0).epsilon(1e-14));
    const TriangleDomain q = TriangleDomain::quadrant();
    const Vec2 dir = Vec2(1, 1).normalized();
    const double h = 1e-6;
    const double fd = (hilbert_distance(q, Vec2(1, 1), Vec2(1, 1) + h * dir)) / h;
    CHECK(finsler_norm(q, {Vec2(1, 1), dir}) == doctest::Approx(fd).epsilon(1e-5));
    CHECK(finsler_norm(q, {Vec2(2, 3), 2.0 * dir}) ==
          doctest::Approx(2.0 * finsler_norm(q, {Vec2(2, 3), dir})).epsilon(1e-14));

    const auto ball = unit_ball_boundary(disc, Vec2(0, 0), 64);
    for (const Vec2& p : ball) {
        CHECK(p.norm() == doctest::Approx(0.5).epsilon(1e-14));
    }
}

TEST_CASE("density examples") {
    const TriangleDomain q = TriangleDomain::quadrant();
    CHECK(p_area_density(q, Vec2(2, 3)) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(p_area_density(q, Vec2(1, 1)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p_area_density(q, Vec2(1, 1), kDefaultDensitySamples, Normalization::Announced) ==
          doctest::Approx(0.25).epsilon(1e-12));
    const EllipseDomain disc = EllipseDomain::unit_disc();
    CHECK(p_area_density(disc, Vec2(0, 0)) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(error_code_of([&] { p_area_density(disc, Vec2(1, 1)); }) == ErrorCode::PointsOutsideDomain);
    CHECK(parallelogram_density([](const Vec2& v) { return v.norm(); }) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("density oracles") {
    const TriangleDomain q = TriangleDomain::quadrant();
    const EllipseDomain disc = EllipseDomain::unit_disc();
    std::mt19937_64 rng(34);
    for (int i = 0; i < 50; ++i) {
        const Vec2 p(std::exp(uniform(rng, -3, 3)), std::exp(uniform(rng, -3, 3)));
        CHECK(p_area_density(q, p) * p.x() * p.y() == doctest::Approx(1.0).epsilon(1e-10));
        const Vec2 d = random_in_disc(rng, 0.995);
        CHECK(p_area_density(disc, d, 64) == doctest::Approx(disc_density(d)).epsilon(1e-9));
    }
}

TEST_CASE("sampled density improves with n") {
    const EllipseDomain disc = EllipseDomain::unit_disc();
    const Vec2 p(0.6, 0.3);
    double previous = 1e300;
    for (int n : {16, 64, 256, 1024}) {
        const auto sphere = unit_ball_boundary(disc, p, n);
        const double err = std::abs(1.0 / max_unit_parallelogram(sphere) - disc_density(p));
        CHECK(err < previous);
        previous = err;
    }
}

TEST_CASE("rotating pointer agrees with the exhaustive search") {
    std::mt19937_64 rng(35);
    for (int trial = 0; trial < 30; ++trial) {
        // l^p norms composed with random linear maps, plus the hexagon.
        const double p = uniform(rng, 1.1, 8.0);
        Mat2 m;
        m << uniform(rng, 0.5, 2), uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, 0.5, 2);
        auto norm = [&](const Vec2& w) {
            const Vec2 x = m * w;
            return std::pow(std::pow(std::abs(x.x()), p) + std::pow(std::abs(x.y()), p), 1.0 / p);
        };
        for (int n : {17, 64, 101}) {
            const auto sphere = unit_sphere_samples(norm, n);
            CHECK(max_unit_parallelogram(sphere) ==
                  doctest::Approx(max_unit_parallelogram_exhaustive(sphere)).epsilon(1e-12));
            CHECK(max_unit_parallelogram_refined(norm, n) >= max_unit_parallelogram(sphere));
        }
    }
    for (int n : {12, 30, 97}) {
        const auto sphere = unit_sphere_samples([](const Vec2& w) { return hex_norm(HexVector::from(w)); }, n);
        CHECK(max_unit_parallelogram(sphere) ==
              doctest::Approx(max_unit_parallelogram_exhaustive(sphere)).epsilon(1e-12));
    }
}

TEST_CASE("areas") {
    const TriangleDomain q = TriangleDomain::quadrant();
    const double e = std::numbers::e;
    const PolygonRegion square{{ProjPoint(1, 1, 1), ProjPoint(e, 1, 1), ProjPoint(e, e, 1),
                                ProjPoint(1, e, 1)}};
    const QuadratureResult r = hilbert_area(q, square, Normalization::Full, 1e-9);
    CHECK(std::abs(r.value - 1.0) < 1e-7);
    const QuadratureResult ra = hilbert_area(q, square, Normalization::Announced, 1e-9);
    CHECK(ra.value == doctest::Approx(r.value / 4.0).epsilon(1e-9));

    for (double radius : {0.5, 1.0, 2.0}) {
        CHECK(hilbert_area(q, hex_circle_region(q, radius), Normalization::Full, 1e-10).value ==
              doctest::Approx(3.0 * radius * radius).epsilon(1e-9));
    }
    const TriangleDomain tri(Vec3(0, 0, 1), Vec3(4, 0, 1), Vec3(1, 3, 1));
    CHECK(hilbert_area(tri, hex_circle_region(tri, 1.0, HexVector{0.3, -0.2}), Normalization::Full,
                       1e-8)
              .value == doctest::Approx(3.0).epsilon(1e-6));

    const QuadratureResult ideal =
        hilbert_area(q, embed_canonical(1.0).region(), Normalization::Full, 1e-4);
    CHECK(std::abs(ideal.value - kPi * kPi / 2.0) < 1e-3);

    CHECK(error_code_of([&] {
              hilbert_area(q, PolygonRegion{{ProjPoint(-1, 1, 1), ProjPoint(2, 1, 1), ProjPoint(1, 2, 1)}},
                           Normalization::Full, 1e-6);
          }) == ErrorCode::RegionOutsideDomain);
}

TEST_CASE("monte carlo area agrees with adaptive area") {
    const EllipseDomain disc = EllipseDomain::unit_disc();
    const PolygonRegion tri{{ProjPoint(-0.5, -0.4, 1), ProjPoint(0.7, -0.3, 1), ProjPoint(0.1, 0.8, 1)}};
    const QuadratureResult adaptive = hilbert_area(disc, tri, Normalization::Full, 1e-8);
    AreaOptions opt;
    opt.method = AreaMethod::MonteCarlo;
    opt.mc_samples = 100'000;
    opt.density_samples = 64;
    const QuadratureResult mc = hilbert_area(disc, tri, Normalization::Full, 0.0, opt);
    CHECK(std::abs(mc.value - adaptive.value) <= 3.0 * mc.error_estimate);
    const QuadratureResult again = hilbert_area(disc, tri, Normalization::Full, 0.0, opt);
    CHECK(again.value == mc.value);
}

}

#include "hilbertgeo/surface_bounds.hpp"

#include "hilbertgeo/ideal_triangle.hpp"

#include "support.hpp"

#include <numbers>

using namespace hilbertgeo;
using testing::error_code_of;
using testing::uniform;

namespace {
constexpr double kPi2 = std::numbers::pi * std::numbers::pi;
}

TEST_SUITE("surface_bounds") {

TEST_CASE("topology") {
    CHECK(euler_characteristic(2) == -2);
    CHECK(euler_characteristic(3) == -4);
    CHECK(error_code_of([] { euler_characteristic(1); }) == ErrorCode::GenusTooSmall);
    CHECK(ideal_triangle_count(2) == 4);
    CHECK(ideal_triangle_count(3) == 8);
    for (int g = 2; g < 20; ++g) {
        CHECK(ideal_triangle_count(g) == 2 * std::abs(euler_characteristic(g)));
        CHECK(ideal_triangle_count(g) == 4 * g - 4);
    }
}

TEST_CASE("alpha bound") {
    CHECK(alpha_bound({2, {0, 0, 0, 0}}) == doctest::Approx(kPi2 / 2.0).epsilon(1e-15));
    CHECK(alpha_bound({2, {2, 0, 0, 0}}) == doctest::Approx(kPi2 / 2.0 + 0.5).epsilon(1e-15));
    CHECK(alpha_bound({2, {2, 0, 0, 0}}, Normalization::Full) ==
          doctest::Approx(4.0 * (kPi2 / 2.0 + 0.5)).epsilon(1e-15));
    CHECK(alpha_bound({3, std::vector<double>(8, 0.0)}) == doctest::Approx(kPi2).epsilon(1e-15));
    CHECK(error_code_of([] { alpha_bound({2, {0, 0, 0}}); }) == ErrorCode::TauLengthMismatch);
    CHECK(error_code_of([] { alpha_bound({1, {}}); }) == ErrorCode::GenusTooSmall);
}

TEST_CASE("alpha is a sum of triangle areas") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 100; ++i) {
        const int g = 2 + static_cast<int>(rng() % 5);
        SurfaceSpec s{g, {}};
        double sum = 0.0;
        for (int k = 0; k < ideal_triangle_count(g); ++k) {
            s.tau.push_back(uniform(rng, -4, 4));
            sum += triangle_area_closed(std::exp(s.tau.back()), Normalization::Announced);
        }
        CHECK(std::abs(alpha_bound(s) - sum) < 1e-12 * std::max(1.0, sum));
    }
}

TEST_CASE("alpha monotonicity and the coarse bound") {
    std::mt19937_64 rng(62);
    for (int i = 0; i < 100; ++i) {
        SurfaceSpec s{3, {}};
        for (int k = 0; k < 8; ++k) {
            s.tau.push_back(uniform(rng, -2, 2));
        }
        const double base = alpha_bound(s);
        const double coarse = coarse_bound(euler_characteristic(3));
        CHECK(base > coarse);
        SurfaceSpec bigger = s;
        const std::size_t k = rng() % 8;
        bigger.tau[k] += bigger.tau[k] >= 0 ? 0.1 : -0.1;
        CHECK(alpha_bound(bigger) > base);
    }
    CHECK(alpha_bound({3, std::vector<double>(8, 0.0)}) == coarse_bound(-4));
}

TEST_CASE("coarse bound") {
    CHECK(coarse_bound(-2) == doctest::Approx(kPi2 / 2.0).epsilon(1e-15));
    CHECK(coarse_bound(-1) == doctest::Approx(kPi2 / 4.0).epsilon(1e-15));
    CHECK(coarse_bound(-1, Normalization::Full) == doctest::Approx(kPi2).epsilon(1e-15));
    CHECK(error_code_of([] { coarse_bound(0); }) == ErrorCode::NonNegativeChi);
}

TEST_CASE("orbifold bound") {
    CHECK(orbifold_bound({Rational(-1, 42)}) == doctest::Approx(kPi2 / 168.0).epsilon(1e-15));
    CHECK(std::abs(orbifold_bound({Rational(-1, 42)}) - 0.0587) < 1e-4);
    CHECK(orbifold_bound({Rational(-2, 1)}) == doctest::Approx(kPi2 / 2.0).epsilon(1e-15));
    CHECK(orbifold_bound({Rational(-1, 2)}) == doctest::Approx(kPi2 / 8.0).epsilon(1e-15));
    CHECK(error_code_of([] { orbifold_bound({Rational(1, 6)}); }) == ErrorCode::NonNegativeChi);
    CHECK(error_code_of([] { orbifold_bound({Rational(0, 6)}); }) == ErrorCode::NonNegativeChi);
}

TEST_CASE("rationals") {
    const Rational r = Rational::parse("-2/84");
    CHECK(r.num == -1);
    CHECK(r.den == 42);
    CHECK(r.str() == "-1/42");
    CHECK(Rational::parse("3/-6").str() == "-1/2");
    CHECK(Rational::parse("-2").str() == "-2");
    CHECK(Rational::parse(Rational::parse("-5/35").str()).str() == "-1/7");
    CHECK(error_code_of([] { Rational::parse("1/0"); }) == ErrorCode::InvalidArgument);
    CHECK(error_code_of([] { Rational::parse("a/2"); }) == ErrorCode::InvalidArgument);
    CHECK(error_code_of([] { Rational::parse("1/2/3"); }) == ErrorCode::InvalidArgument);
}

}

#include "hilbertgeo/ideal_triangle.hpp"

#include "support.hpp"

#include <algorithm>
#include <numbers>

using namespace hilbertgeo;
using testing::error_code_of;
using testing::uniform;

namespace {

constexpr double kPi = std::numbers::pi;

std::shared_ptr<const EllipseDomain> disc() {
    static const auto d = std::make_shared<const EllipseDomain>(EllipseDomain::unit_disc());
    return d;
}

ProjPoint on_circle(double theta) { return ProjPoint(std::cos(theta), std::sin(theta), 1.0); }

IdealTriangle symmetric_disc_triangle() {
    return IdealTriangle(disc(), on_circle(kPi / 2), on_circle(kPi / 2 + 2 * kPi / 3),
                         on_circle(kPi / 2 + 4 * kPi / 3));
}

std::shared_ptr<const PolygonDomain> pentagon() {
    static const auto p = std::make_shared<const PolygonDomain>(
        std::vector<Vec2>{Vec2(0, 0), Vec2(2, 0), Vec2(2.5, 1.5), Vec2(1, 2.5), Vec2(-0.5, 1.2)});
    return p;
}

// The (s, t) leaf length from the cross-ratio of the chord x + y = s of Q,
// parametrized by x: endpoints 0 and s, interior points x_alpha < x_beta.
double leaf_oracle(double s, double t) {
    const long double xa = (s - 1.0L) / (t + 1.0L);
    const long double xb = (s + static_cast<long double>(t)) / (t + 1.0L);
    const long double cr = (0.0L - xb) * (xa - s) / ((0.0L - xa) * (xb - s));
    return static_cast<double>(std::log(cr));
}

}  // namespace

TEST_SUITE("ideal_triangle") {

TEST_CASE("validation") {
    CHECK(error_code_of([] {
              IdealTriangle(disc(), on_circle(0), on_circle(1), ProjPoint(0.5, 0, 1));
          }) == ErrorCode::NotOnBoundary);
    CHECK(error_code_of([] { IdealTriangle(disc(), on_circle(0), on_circle(0), on_circle(2)); }) ==
          ErrorCode::DegenerateConfiguration);
    // Two vertices on one edge of a polygon: that side runs along the boundary.
    CHECK(error_code_of([] {
              IdealTriangle(pentagon(), ProjPoint(0.5, 0, 1), ProjPoint(1.5, 0, 1), ProjPoint(1, 2.5, 1));
          }) == ErrorCode::DegenerateConfiguration);
    CHECK(error_code_of([] { ShapeParam(0.0); }) == ErrorCode::DomainError);
    CHECK(error_code_of([] { embed_canonical(-1.0); }) == ErrorCode::DomainError);
}

TEST_CASE("tangent triangle of the symmetric disc triangle") {
    const IdealTriangle tri = symmetric_disc_triangle();
    const TriangleDomain delta = tangent_triangle(tri);
    for (int i = 0; i < 3; ++i) {
        const Vec2 v = ProjPoint(delta.vertex(i)).affine();
        CHECK(v.norm() == doctest::Approx(2.0).epsilon(1e-12));
    }
    for (int k = 0; k < 1000; ++k) {
        const double th = 2.0 * kPi * k / 1000.0 + 1e-3;
        const Vec3 b = delta.barycentric(on_circle(th).coords());
        CHECK(b.minCoeff() >= -1e-12 * b.cwiseAbs().maxCoeff());
        CHECK(delta.contains(Vec2(0.999 * std::cos(th), 0.999 * std::sin(th))));
    }
    CHECK(shape_of_ideal_triangle(tri).canonical() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(triangle_area_lower_bound(tri, Normalization::Announced) ==
          doctest::Approx(kPi * kPi / 8.0).epsilon(1e-12));
}

TEST_CASE("tangent triangle of a triangle domain is the domain") {
    const Vec3 v0(0, 0, 1), v1(4, 0, 1), v2(1, 3, 1);
    const auto dom = std::make_shared<const TriangleDomain>(v0, v1, v2);
    const IdealTriangle tri(dom, ProjPoint(Vec3(v0 + 0.7 * v1)), ProjPoint(Vec3(v1 + 2.0 * v2)),
                            ProjPoint(Vec3(v2 + 0.4 * v0)));
    const TriangleDomain delta = tangent_triangle(tri);
    const Mat3 b = dom->basis().inverse() * delta.basis();
    // Each tangent vertex is a domain vertex: one nonzero coordinate per column.
    for (int i = 0; i < 3; ++i) {
        const Vec3 c = b.col(i) / b.col(i).cwiseAbs().maxCoeff();
        std::array<double, 3> a{std::abs(c[0]), std::abs(c[1]), std::abs(c[2])};
        std::sort(a.begin(), a.end());
        CHECK(a[1] < 1e-12);
    }
    CHECK(shape_of_ideal_triangle(tri).raw() == doctest::Approx(0.7 * 2.0 * 0.4).epsilon(1e-12));
}

TEST_CASE("shape parameter from edge coordinates") {
    const TriangleDomain q = TriangleDomain::quadrant();
    const Vec3 v0 = q.vertex(0), v1 = q.vertex(1), v2 = q.vertex(2);
    auto w = [](const Vec3& a, double k, const Vec3& b) { return ProjPoint(Vec3(a + k * b)); };
    CHECK(shape_parameter(q, w(v0, 1, v1), w(v1, 1, v2), w(v2, 1, v0)).raw() ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(shape_parameter(q, w(v0, 2, v1), w(v1, 3, v2), w(v2, 4, v0)).raw() ==
          doctest::Approx(24.0).epsilon(1e-15));

    // Reversal: basis (v1, v0, v2) with vertices (w0, w2, w1).
    Mat3 rev;
    rev << v1, v0, v2;
    const ShapeParam r = shape_parameter(rev, w(v0, 2, v1), w(v2, 4, v0), w(v1, 3, v2));
    CHECK(r.raw() == doctest::Approx(1.0 / 24.0).epsilon(1e-15));
    CHECK(r.canonical() == doctest::Approx(24.0).epsilon(1e-15));
    CHECK(r.tau() == doctest::Approx(-std::log(24.0)).epsilon(1e-15));

    // Cyclic rotation.
    Mat3 rot;
    rot << v1, v2, v0;
    CHECK(shape_parameter(rot, w(v1, 3, v2), w(v2, 4, v0), w(v0, 2, v1)).raw() ==
          doctest::Approx(24.0).epsilon(1e-15));

    CHECK(error_code_of([&] { shape_parameter(q, ProjPoint(v0), w(v1, 1, v2), w(v2, 1, v0)); }) ==
          ErrorCode::VertexOnEdgeEndpoint);
    CHECK(error_code_of([&] { shape_parameter(q, w(v1, 1, v2), w(v1, 1, v2), w(v2, 1, v0)); }) ==
          ErrorCode::EdgeMismatch);
    CHECK(error_code_of([&] { shape_parameter(q, w(v0, -1, v1), w(v1, 1, v2), w(v2, 1, v0)); }) ==
          ErrorCode::EdgeMismatch);
}

TEST_CASE("canonical embedding") {
    for (double t : {0.5, 1.0, 5.0}) {
        const IdealTriangle tri = embed_canonical(t);
        const TriangleDomain& q = dynamic_cast<const TriangleDomain&>(tri.domain());
        CHECK(q.is_standard_quadrant());
        for (const ProjPoint& v : tri.vertices()) {
            CHECK(q.on_boundary(v));
        }
        const auto& v = tri.vertices();
        CHECK(shape_parameter(q, v[0], v[1], v[2]).raw() == doctest::Approx(t).epsilon(1e-14));
        CHECK(shape_of_ideal_triangle(tri).raw() == doctest::Approx(t).epsilon(1e-14));
    }
    const IdealTriangle regular = embed_canonical(1.0);
    const auto& v = regular.vertices();
    CHECK(v[0] == ProjPoint(1, 1, 0));
    CHECK(v[1] == ProjPoint(0, 1, 1));
    CHECK(v[2] == ProjPoint(1, 0, 1));
}

TEST_CASE("every ideal triangle of a conic is regular") {
    std::mt19937_64 rng(51);
    Mat2 s;
    s << 1.5, 0.4, -0.2, 0.8;
    const auto ellipse = std::make_shared<const EllipseDomain>(Vec2(0.5, 0.2), s);
    for (int i = 0; i < 100; ++i) {
        std::array<double, 3> th{uniform(rng, 0, 2 * kPi), uniform(rng, 0, 2 * kPi),
                                 uniform(rng, 0, 2 * kPi)};
        std::sort(th.begin(), th.end());
        if (th[1] - th[0] < 0.05 || th[2] - th[1] < 0.05 || 2 * kPi - (th[2] - th[0]) < 0.05) {
            continue;
        }
        const IdealTriangle a(disc(), on_circle(th[0]), on_circle(th[1]), on_circle(th[2]));
        CHECK(shape_of_ideal_triangle(a).raw() == doctest::Approx(1.0).epsilon(1e-9));
        const IdealTriangle b(ellipse, ProjPoint::from_affine(ellipse->boundary_point(th[0])),
                              ProjPoint::from_affine(ellipse->boundary_point(th[1])),
                              ProjPoint::from_affine(ellipse->boundary_point(th[2])));
        CHECK(shape_of_ideal_triangle(b).raw() == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("shape in a polygon") {
    const ProjPoint p(1.2, 0, 1), q(1.75, 2.0, 1), r(-0.25, 0.6, 1);
    const IdealTriangle tri(pentagon(), p, q, r);
    const ShapeParam s = shape_of_ideal_triangle(tri);
    CHECK(s.canonical() > 1.0 + 1e-6);
    // Relabeling changes the raw value by t <-> 1/t at most.
    const std::array<std::array<ProjPoint, 3>, 6> orders = {{{p, q, r}, {q, r, p}, {r, p, q},
                                                              {p, r, q}, {r, q, p}, {q, p, r}}};
    for (std::size_t k = 0; k < orders.size(); ++k) {
        const auto& o = orders[k];
        const ShapeParam sk = shape_of_ideal_triangle(IdealTriangle(pentagon(), o[0], o[1], o[2]));
        CHECK(sk.canonical() == doctest::Approx(s.canonical()).epsilon(1e-12));
        CHECK(sk.raw() == doctest::Approx(k < 3 ? s.raw() : 1.0 / s.raw()).epsilon(1e-12));
    }
    // A vertex at a polygon corner has no unique tangent.
    CHECK(error_code_of([] {
              shape_of_ideal_triangle(IdealTriangle(pentagon(), ProjPoint(2, 0, 1),
                                                    ProjPoint(1.75, 2.0, 1), ProjPoint(-0.25, 0.6, 1)));
          }) == ErrorCode::NoUniqueTangent);
}

TEST_CASE("leaf lengths") {
    CHECK(leaf_length(3.0, 1.0) == doctest::Approx(std::log(4.0)).epsilon(1e-15));
    CHECK(error_code_of([] { leaf_length(1.0, 1.0); }) == ErrorCode::DomainError);
    CHECK(error_code_of([] { leaf_length(2.0, 0.0); }) == ErrorCode::DomainError);
    CHECK(leaf_length(1.0 + 1e-9, 1.0) > 40.0);

    const TriangleDomain q = TriangleDomain::quadrant();
    for (double t : {0.01, 0.3, 1.0, 2.0, 10.0, 100.0}) {
        for (double s : {1.001, 1.1, 1.5, 2.0, 3.0, 10.0, 1e3}) {
            CHECK(leaf_length(s, t) == doctest::Approx(leaf_oracle(s, t)).epsilon(1e-10));
            const auto [alpha, beta] = leaf_endpoints(s, t);
            CHECK(alpha.x() + alpha.y() == doctest::Approx(s).epsilon(1e-15));
            CHECK(alpha.y() - 1.0 == doctest::Approx(t * alpha.x()).epsilon(1e-12));
            CHECK(beta.y() == doctest::Approx(t * (beta.x() - 1.0)).epsilon(1e-12));
            if (s < 100.0) {
                CHECK(hilbert_distance(q, alpha, beta) ==
                      doctest::Approx(leaf_length(s, t)).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("leaves are ds/s apart") {
    const TriangleDomain q = TriangleDomain::quadrant();
    const double delta = 1e-6;
    for (double s : {1.5, 2.0, 7.0}) {
        for (double x : {0.2, 0.5, 0.9}) {
            const Vec2 p(x, 1.0 - x);
            const double d = hilbert_distance(q, s * p, (s + delta) * p);
            CHECK(d == doctest::Approx(std::log1p(delta / s)).epsilon(1e-8));
            CHECK(d / delta == doctest::Approx(1.0 / s).epsilon(1e-5));
        }
    }
}

TEST_CASE("triangle area") {
    const double pi2 = kPi * kPi;
    CHECK(std::abs(triangle_area_numeric(1.0, 1e-9) - pi2 / 2.0) < 1e-9);
    CHECK(std::abs(triangle_area_numeric(std::numbers::e, 1e-9) - (pi2 + 1.0) / 2.0) < 1e-9);
    for (double t : {1.0, 2.0, 10.0, 100.0, 0.05}) {
        const QuadratureResult r = triangle_area_quadrature(t, 1e-8);
        CHECK(std::abs(r.value - triangle_area_closed(t)) < 1e-6);
        CHECK(std::abs(triangle_area_numeric(1.0 / t, 1e-8) - r.value) < 2e-8);
    }
    CHECK(triangle_area_closed(1.0) == doctest::Approx(pi2 / 2.0).epsilon(1e-15));
    CHECK(triangle_area_closed(1.0, Normalization::Announced) ==
          doctest::Approx(1.2337005501361697).epsilon(1e-15));
    const double l100 = std::log(100.0);
    CHECK(triangle_area_closed(100.0) == doctest::Approx((pi2 + l100 * l100) / 2.0).epsilon(1e-15));
    CHECK(error_code_of([] { triangle_area_closed(0.0); }) == ErrorCode::DomainError);
}

TEST_CASE("area derivative") {
    const DerivativeCheck a = dB_dt_check(1.0, 1e-3);
    CHECK(a.analytic == 0.0);
    CHECK(std::abs(a.finite_difference) < 1e-4);
    const DerivativeCheck b = dB_dt_check(std::numbers::e, 1e-3);
    CHECK(b.analytic == doctest::Approx(0.36787944117144233).epsilon(1e-15));
    CHECK(std::abs(b.finite_difference - b.analytic) < 1e-4);
    const DerivativeCheck c = dB_dt_check(4.0, 1e-3);
    CHECK(c.analytic == doctest::Approx(0.34657359027997264).epsilon(1e-15));
    CHECK(std::abs(c.finite_difference - c.analytic) < 1e-4);
    CHECK(error_code_of([] { dB_dt_check(1.0, 0.5); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("equality in triangle domains") {
    const TriangleDomain q = TriangleDomain::quadrant();
    for (double t : {1.0, 2.0, 10.0}) {
        const IdealTriangle tri = embed_canonical(t);
        const double area = hilbert_area(q, tri.region(), Normalization::Full, 1e-4).value;
        CHECK(std::abs(area - triangle_area_numeric(t, 1e-8)) < 1e-3);
        CHECK(triangle_area_lower_bound(tri) == doctest::Approx(triangle_area_closed(t)).epsilon(1e-12));
    }
    const Vec3 v0(0, 0, 1), v1(4, 0, 1), v2(1, 3, 1);
    const auto dom = std::make_shared<const TriangleDomain>(v0, v1, v2);
    const IdealTriangle tri(dom, ProjPoint(Vec3(v0 + 0.7 * v1)), ProjPoint(Vec3(v1 + 2.0 * v2)),
                            ProjPoint(Vec3(v2 + 0.4 * v0)));
    const double area = hilbert_area(*dom, tri.region(), Normalization::Full, 1e-4).value;
    CHECK(std::abs(area - triangle_area_lower_bound(tri)) < 1e-3);
}

TEST_CASE("strict inequality in a polygon") {
    const IdealTriangle tri(pentagon(), ProjPoint(1.2, 0, 1), ProjPoint(1.75, 2.0, 1),
                            ProjPoint(-0.25, 0.6, 1));
    const double area = hilbert_area(tri.domain(), tri.region(), Normalization::Full, 1e-4).value;
    CHECK(area > triangle_area_lower_bound(tri) + 1e-2);
}

TEST_CASE("shape is a projective invariant") {
    std::mt19937_64 rng(52);
    const IdealTriangle base(pentagon(), ProjPoint(1.2, 0, 1), ProjPoint(1.75, 2.0, 1),
                             ProjPoint(-0.25, 0.6, 1));
    const double t0 = shape_of_ideal_triangle(base).raw();
    int done = 0;
    while (done < 50) {
        const ProjMap g(Mat3::Identity() + testing::random_matrix(rng, 0.4));
        try {
            const IdealTriangle image = base.transformed(g);
            CHECK(shape_of_ideal_triangle(image).raw() == doctest::Approx(t0).epsilon(1e-9));
            ++done;
        } catch (const Error& e) {
            REQUIRE(e.code() == ErrorCode::InvalidDomain);
        }
    }
}

}

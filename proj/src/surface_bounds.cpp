#include "hilbertgeo/surface_bounds.hpp"

#include "hilbertgeo/errors.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>

namespace hilbertgeo {

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

std::int64_t parse_int(std::string_view text) {
    std::int64_t v = 0;
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        fail(ErrorCode::InvalidArgument, "not an integer: '" + std::string(text) + "'");
    }
    return v;
}

}  // namespace

void SurfaceSpec::validate() const {
    const int count = ideal_triangle_count(genus);
    if (tau.size() != static_cast<std::size_t>(count)) {
        fail(ErrorCode::TauLengthMismatch, "tau has " + std::to_string(tau.size()) +
                                               " entries, genus " + std::to_string(genus) +
                                               " needs " + std::to_string(count));
    }
    for (double x : tau) {
        if (!std::isfinite(x)) {
            fail(ErrorCode::InvalidArgument, "tau entries must be finite");
        }
    }
}

double SurfaceSpec::tau_norm_squared() const {
    double s = 0.0;
    for (double x : tau) {
        s += x * x;
    }
    return s;
}

Rational::Rational(std::int64_t p, std::int64_t q) {
    if (q == 0) {
        fail(ErrorCode::InvalidArgument, "rational with zero denominator");
    }
    if (q < 0) {
        p = -p;
        q = -q;
    }
    const std::int64_t g = std::gcd(p, q);
    num = p / (g == 0 ? 1 : g);
    den = q / (g == 0 ? 1 : g);
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Rational(parse_int(text), 1);
    }
    const std::string_view sv(text);
    return Rational(parse_int(sv.substr(0, slash)), parse_int(sv.substr(slash + 1)));
}

std::string Rational::str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

int euler_characteristic(int genus) {
    if (genus < 2) {
        fail(ErrorCode::GenusTooSmall, "genus must be at least 2");
    }
    return 2 - 2 * genus;
}

int ideal_triangle_count(int genus) { return -2 * euler_characteristic(genus); }

double alpha_bound(const SurfaceSpec& spec, Normalization norm) {
    spec.validate();
    const double announced = (spec.genus - 1) * kPi2 / 2.0 + spec.tau_norm_squared() / 8.0;
    return 4.0 * area_scale(norm) * announced;
}

double coarse_bound(int chi, Normalization norm) {
    if (chi >= 0) {
        fail(ErrorCode::NonNegativeChi, "Euler characteristic must be negative");
    }
    return 4.0 * area_scale(norm) * kPi2 / 4.0 * static_cast<double>(-chi);
}

double orbifold_bound(const OrbifoldSpec& spec, Normalization norm) {
    if (spec.chi_orb.num >= 0) {
        fail(ErrorCode::NonNegativeChi, "orbifold Euler characteristic must be negative");
    }
    const double announced = kPi2 * static_cast<double>(-spec.chi_orb.num) /
                             (4.0 * static_cast<double>(spec.chi_orb.den));
    return 4.0 * area_scale(norm) * announced;
}

}  // namespace hilbertgeo

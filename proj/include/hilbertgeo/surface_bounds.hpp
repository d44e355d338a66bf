#pragma once

#include "hilbertgeo/hilbert_metric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hilbertgeo {

/// Closed surface of genus g with one triangle invariant per ideal triangle.
struct SurfaceSpec {
    int genus = 2;
    std::vector<double> tau;

    /// Throws GenusTooSmall or TauLengthMismatch.
    void validate() const;
    double tau_norm_squared() const;
};

/// p/q in lowest terms with q > 0.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t p, std::int64_t q);

    /// Accepts "p/q" or an integer "p".
    static Rational parse(const std::string& text);

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
};

struct OrbifoldSpec {
    Rational chi_orb;
};

int euler_characteristic(int genus);
int ideal_triangle_count(int genus);

/// (g - 1) pi^2 / 2 + |tau|^2 / 8 under Announced, four times that under Full.
double alpha_bound(const SurfaceSpec& spec, Normalization norm = Normalization::Announced);

/// (pi^2 / 4) |chi| under Announced.
double coarse_bound(int chi, Normalization norm = Normalization::Announced);

/// (pi^2 / 4) |chi_orb| under Announced.
double orbifold_bound(const OrbifoldSpec& spec, Normalization norm = Normalization::Announced);

}  // namespace hilbertgeo

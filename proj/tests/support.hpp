#pragma once

#include "hilbertgeo/errors.hpp"
#include "hilbertgeo/projective.hpp"

#include "doctest.h"

#include <cmath>
#include <random>

namespace testing {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

inline hilbertgeo::Mat3 random_matrix(std::mt19937_64& rng, double spread = 1.0) {
    hilbertgeo::Mat3 m;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            m(i, j) = uniform(rng, -spread, spread);
        }
    }
    return m;
}

template <class F>
hilbertgeo::ErrorCode error_code_of(F&& f) {
    try {
        f();
    } catch (const hilbertgeo::Error& e) {
        return e.code();
    }
    FAIL("expected a hilbertgeo::Error");
    return hilbertgeo::ErrorCode::InvalidArgument;
}

}  // namespace testing

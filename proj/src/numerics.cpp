#include "hilbertgeo/numerics.hpp"

#include "hilbertgeo/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <queue>
#include <random>
#include <string>
#include <thread>

namespace hilbertgeo {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kKronrodWeights[7];
    double gauss = fc * kGaussWeights[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kKronrodNodes[j];
        const double sum = f(center - dx) + f(center + dx);
        kronrod += kKronrodWeights[j] * sum;
        if (j % 2 == 1) {
            gauss += kGaussWeights[j / 2] * sum;
        }
    }
    kronrod *= half;
    gauss *= half;
    const double value = kronrod;
    double error = std::abs(kronrod - gauss);
    if (!std::isfinite(value)) {
        error = std::numeric_limits<double>::infinity();
    }
    return Segment{a, b, value, error};
}

constexpr int kEvalsPerSegment = 15;

bool splittable(double a, double b) {
    const double mid = 0.5 * (a + b);
    return mid > a && mid < b;
}

/// Geometric cells toward `end` over the interval between `end` and `other`.
void grade_toward(const std::function<double(double)>& f, double end, double other, double tol,
                  std::vector<Segment>& cells, std::int64_t& evaluations) {
    double near = 0.5 * (end + other);
    double far = other;
    for (int depth = 0; depth < 200; ++depth) {
        const Segment cell = gauss_kronrod(f, std::min(near, far), std::max(near, far));
        evaluations += kEvalsPerSegment;
        cells.push_back(cell);
        far = near;
        near = 0.5 * (end + near);
        if (depth >= 3 && std::abs(cell.value) < tol / 10.0) {
            break;
        }
        if (near == end || near == far) {
            break;
        }
    }
    cells.push_back(gauss_kronrod(f, std::min(end, far), std::max(end, far)));
    evaluations += kEvalsPerSegment;
}

QuadratureResult integrate_finite(const std::function<double(double)>& f, double lo, double hi,
                                  double tol, EndpointFlags flags, std::int64_t budget) {
    std::vector<Segment> initial;
    std::int64_t evaluations = 0;
    if (flags.singular_lo && flags.singular_hi) {
        const double mid = 0.5 * (lo + hi);
        grade_toward(f, lo, mid, tol, initial, evaluations);
        grade_toward(f, hi, mid, tol, initial, evaluations);
    } else if (flags.singular_lo) {
        grade_toward(f, lo, hi, tol, initial, evaluations);
    } else if (flags.singular_hi) {
        grade_toward(f, hi, lo, tol, initial, evaluations);
    } else {
        initial.push_back(gauss_kronrod(f, lo, hi));
        evaluations += kEvalsPerSegment;
    }

    std::priority_queue<Segment> queue(initial.begin(), initial.end());
    double total_error = 0.0;
    for (const Segment& s : initial) {
        total_error += s.error;
    }

    auto sum_value = [&queue]() {
        auto copy = queue;
        double v = 0.0;
        while (!copy.empty()) {
            v += copy.top().value;
            copy.pop();
        }
        return v;
    };

    auto exact_error = [&queue]() {
        auto copy = queue;
        double e = 0.0;
        while (!copy.empty()) {
            e += copy.top().error;
            copy.pop();
        }
        return e;
    };

    for (std::int64_t step = 1;; ++step) {
        if (total_error <= tol) {
            // The running total can drift; confirm before stopping.
            total_error = exact_error();
            if (total_error <= tol) {
                break;
            }
        }
        const Segment worst = queue.top();
        if (evaluations + 2 * kEvalsPerSegment > budget || !splittable(worst.a, worst.b)) {
            throw NonConvergenceError("integrate_1d: tolerance " + std::to_string(tol) +
                                          " not reached within the evaluation budget",
                                      sum_value(), exact_error());
        }
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Segment left = gauss_kronrod(f, worst.a, mid);
        const Segment right = gauss_kronrod(f, mid, worst.b);
        evaluations += 2 * kEvalsPerSegment;
        queue.push(left);
        queue.push(right);
        total_error += left.error + right.error - worst.error;
        if (step % 1024 == 0) {
            total_error = exact_error();
        }
    }
    return QuadratureResult{sum_value(), total_error, evaluations};
}

// Seven-point degree-5 rule on the triangle (Radon / Dunavant).
struct TriangleRule {
    std::array<std::array<double, 3>, 7> barycentric;
    std::array<double, 7> weights;
};

TriangleRule make_triangle_rule() {
    const double r15 = std::sqrt(15.0);
    const double a1 = (6.0 - r15) / 21.0;
    const double b1 = (9.0 + 2.0 * r15) / 21.0;
    const double a2 = (6.0 + r15) / 21.0;
    const double b2 = (9.0 - 2.0 * r15) / 21.0;
    const double w1 = (155.0 - r15) / 1200.0;
    const double w2 = (155.0 + r15) / 1200.0;
    TriangleRule rule;
    rule.barycentric = {{{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0},
                         {b1, a1, a1},
                         {a1, b1, a1},
                         {a1, a1, b1},
                         {b2, a2, a2},
                         {a2, b2, a2},
                         {a2, a2, b2}}};
    rule.weights = {9.0 / 40.0, w1, w1, w1, w2, w2, w2};
    return rule;
}

const TriangleRule& triangle_rule() {
    static const TriangleRule rule = make_triangle_rule();
    return rule;
}

constexpr int kEvalsPerTriangle = 7;

double triangle_area(const Triangle2& t) {
    const Vec2 e1 = t[1] - t[0];
    const Vec2 e2 = t[2] - t[0];
    return 0.5 * std::abs(e1.x() * e2.y() - e1.y() * e2.x());
}

double apply_rule(const std::function<double(const Vec2&)>& f, const Triangle2& t) {
    const TriangleRule& rule = triangle_rule();
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.weights.size(); ++i) {
        const auto& b = rule.barycentric[i];
        sum += rule.weights[i] * f(b[0] * t[0] + b[1] * t[1] + b[2] * t[2]);
    }
    return sum * triangle_area(t);
}

std::array<Triangle2, 4> split(const Triangle2& t) {
    const Vec2 ab = 0.5 * (t[0] + t[1]);
    const Vec2 bc = 0.5 * (t[1] + t[2]);
    const Vec2 ca = 0.5 * (t[2] + t[0]);
    return {{{t[0], ab, ca}, {ab, t[1], bc}, {ca, bc, t[2]}, {bc, ca, ab}}};
}

struct Cell {
    Triangle2 tri;
    double coarse;
    std::array<double, 4> child_values;
    double value;
    double error;
    bool operator<(const Cell& other) const { return error < other.error; }
};

Cell refine_cell(const std::function<double(const Vec2&)>& f, const Triangle2& tri, double coarse) {
    Cell cell{tri, coarse, {}, 0.0, 0.0};
    const auto children = split(tri);
    for (int i = 0; i < 4; ++i) {
        cell.child_values[i] = apply_rule(f, children[i]);
        cell.value += cell.child_values[i];
    }
    cell.error = std::abs(cell.value - coarse);
    if (!std::isfinite(cell.value)) {
        cell.error = std::numeric_limits<double>::infinity();
    }
    return cell;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double unit_uniform(std::mt19937_64& rng) {
    // Open interval (0, 1): avoids mapping samples onto singular corners.
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace

QuadratureResult integrate_1d(const std::function<double(double)>& f, double lo, double hi,
                              double tol, EndpointFlags flags, std::int64_t budget) {
    if (!(tol > 0.0)) {
        fail(ErrorCode::InvalidArgument, "integrate_1d: tolerance must be positive");
    }
    if (std::isnan(lo) || std::isnan(hi) || std::isinf(lo) || !(hi > lo)) {
        fail(ErrorCode::InvalidArgument, "integrate_1d: need finite lo < hi (hi may be +inf)");
    }
    if (!std::isinf(hi)) {
        return integrate_finite(f, lo, hi, tol, flags, budget);
    }
    if (lo > 0.0) {
        // s = 1/u maps [lo, inf) onto (0, 1/lo]; an O(s^-2) tail becomes bounded.
        auto g = [&f](double u) { return f(1.0 / u) / (u * u); };
        EndpointFlags mapped{false, flags.singular_lo};
        return integrate_finite(g, 0.0, 1.0 / lo, tol, mapped, budget);
    }
    const QuadratureResult head = integrate_finite(f, lo, 1.0, 0.5 * tol, flags, budget);
    auto g = [&f](double u) { return f(1.0 / u) / (u * u); };
    const QuadratureResult tail =
        integrate_finite(g, 0.0, 1.0, 0.5 * tol, {}, budget - head.evaluations);
    return QuadratureResult{head.value + tail.value, head.error_estimate + tail.error_estimate,
                            head.evaluations + tail.evaluations};
}

QuadratureResult integrate_2d(const std::function<double(const Vec2&)>& density,
                              std::span<const Triangle2> region, double tol, std::int64_t budget) {
    if (!(tol > 0.0)) {
        fail(ErrorCode::InvalidArgument, "integrate_2d: tolerance must be positive");
    }
    if (region.empty()) {
        return QuadratureResult{0.0, 0.0, 0};
    }

    std::vector<Cell> initial(region.size());
    parallel_for(region.size(), [&](std::size_t i) {
        initial[i] = refine_cell(density, region[i], apply_rule(density, region[i]));
    });
    std::int64_t evaluations =
        static_cast<std::int64_t>(region.size()) * 5 * kEvalsPerTriangle;

    std::priority_queue<Cell> queue(initial.begin(), initial.end());
    auto totals = [&queue]() {
        auto copy = queue;
        double value = 0.0;
        double error = 0.0;
        while (!copy.empty()) {
            value += copy.top().value;
            error += copy.top().error;
            copy.pop();
        }
        return std::pair<double, double>{value, error};
    };

    // A fixed batch size keeps results independent of the worker count.
    constexpr std::size_t kBatch = 16;
    auto [value, error] = totals();
    for (std::int64_t step = 1;; ++step) {
        if (error <= tol) {
            std::tie(value, error) = totals();
            if (error <= tol) {
                break;
            }
        }
        std::vector<Cell> batch;
        double remaining = error;
        while (!queue.empty() && batch.size() < kBatch && remaining > tol) {
            remaining -= queue.top().error;
            batch.push_back(queue.top());
            queue.pop();
        }
        const std::int64_t cost = static_cast<std::int64_t>(batch.size()) * 16 * kEvalsPerTriangle;
        if (evaluations + cost > budget) {
            for (const Cell& c : batch) {
                queue.push(c);
            }
            const auto partial = totals();
            throw NonConvergenceError("integrate_2d: tolerance " + std::to_string(tol) +
                                          " not reached within the evaluation budget",
                                      partial.first, partial.second);
        }
        std::vector<Cell> refined(batch.size() * 4);
        parallel_for(refined.size(), [&](std::size_t k) {
            const Cell& parent = batch[k / 4];
            const auto children = split(parent.tri);
            refined[k] = refine_cell(density, children[k % 4], parent.child_values[k % 4]);
        });
        evaluations += cost;
        for (const Cell& c : batch) {
            value -= c.value;
            error -= c.error;
        }
        for (const Cell& c : refined) {
            value += c.value;
            error += c.error;
            queue.push(c);
        }
        if (step % 256 == 0) {
            std::tie(value, error) = totals();
        }
    }
    return QuadratureResult{value, error, evaluations};
}

RegionSampler RegionSampler::unit_square() {
    return rectangle(Vec2(0.0, 0.0), Vec2(1.0, 1.0));
}

RegionSampler RegionSampler::rectangle(const Vec2& lo, const Vec2& hi) {
    RegionSampler s;
    const Vec2 size = hi - lo;
    s.strata.push_back([lo, size](const Vec2& u) {
        return WeightedPoint{lo + u.cwiseProduct(size), size.x() * size.y()};
    });
    return s;
}

RegionSampler RegionSampler::triangle(const Triangle2& tri) {
    RegionSampler s;
    const double area = triangle_area(tri);
    s.strata.push_back([tri, area](const Vec2& u) {
        // Fold the square onto the triangle.
        double a = u.x();
        double b = u.y();
        if (a + b > 1.0) {
            a = 1.0 - a;
            b = 1.0 - b;
        }
        return WeightedPoint{tri[0] + a * (tri[1] - tri[0]) + b * (tri[2] - tri[0]), area};
    });
    return s;
}

RegionSampler RegionSampler::graded_triangle(const Triangle2& tri) {
    RegionSampler s;
    const Vec2 centroid = (tri[0] + tri[1] + tri[2]) / 3.0;
    for (int i = 0; i < 3; ++i) {
        const Vec2 apex = tri[i];
        const Vec2 next_mid = 0.5 * (tri[i] + tri[(i + 1) % 3]);
        const Vec2 prev_mid = 0.5 * (tri[i] + tri[(i + 2) % 3]);
        for (const auto& [b, c] : {std::pair{next_mid, centroid}, std::pair{centroid, prev_mid}}) {
            const Vec2 eb = b - apex;
            const Vec2 ec = c - b;
            const double det = std::abs(eb.x() * ec.y() - eb.y() * ec.x());
            // x = apex + xi^2 (eb + eta ec), Jacobian 2 xi^3 |det|.
            s.strata.push_back([apex, eb, ec, det](const Vec2& u) {
                const double xi = u.x();
                const double xi2 = xi * xi;
                return WeightedPoint{apex + xi2 * (eb + u.y() * ec), 2.0 * xi2 * xi * det};
            });
        }
    }
    return s;
}

QuadratureResult monte_carlo_2d(const std::function<double(const Vec2&)>& density,
                                const RegionSampler& sampler, std::int64_t n,
                                std::uint64_t seed) {
    if (n < 100) {
        fail(ErrorCode::InvalidArgument, "monte_carlo_2d: need at least 100 samples");
    }
    if (sampler.strata.empty()) {
        fail(ErrorCode::InvalidArgument, "monte_carlo_2d: sampler has no strata");
    }
    constexpr std::int64_t kBlock = 4096;
    const std::int64_t strata = static_cast<std::int64_t>(sampler.strata.size());
    const std::int64_t per_stratum = (n + strata - 1) / strata;
    const std::int64_t blocks_per_stratum = (per_stratum + kBlock - 1) / kBlock;

    struct BlockSums {
        double sum = 0.0;
        double sum_sq = 0.0;
    };
    std::vector<BlockSums> sums(static_cast<std::size_t>(strata * blocks_per_stratum));
    parallel_for(sums.size(), [&](std::size_t idx) {
        const std::int64_t stratum = static_cast<std::int64_t>(idx) / blocks_per_stratum;
        const std::int64_t block = static_cast<std::int64_t>(idx) % blocks_per_stratum;
        const std::int64_t count = std::min(kBlock, per_stratum - block * kBlock);
        std::mt19937_64 rng(splitmix64(seed ^ splitmix64((static_cast<std::uint64_t>(stratum) << 32) ^
                                                          static_cast<std::uint64_t>(block))));
        const auto& map = sampler.strata[static_cast<std::size_t>(stratum)];
        BlockSums s;
        for (std::int64_t k = 0; k < count; ++k) {
            const double u = unit_uniform(rng);
            const double v = unit_uniform(rng);
            const WeightedPoint wp = map(Vec2(u, v));
            const double y = wp.weight == 0.0 ? 0.0 : density(wp.point) * wp.weight;
            s.sum += y;
            s.sum_sq += y * y;
        }
        sums[idx] = s;
    });

    double value = 0.0;
    double variance = 0.0;
    for (std::int64_t stratum = 0; stratum < strata; ++stratum) {
        double sum = 0.0;
        double sum_sq = 0.0;
        for (std::int64_t block = 0; block < blocks_per_stratum; ++block) {
            sum += sums[static_cast<std::size_t>(stratum * blocks_per_stratum + block)].sum;
            sum_sq += sums[static_cast<std::size_t>(stratum * blocks_per_stratum + block)].sum_sq;
        }
        const double m = static_cast<double>(per_stratum);
        const double mean = sum / m;
        const double sample_var = std::max(0.0, (sum_sq - m * mean * mean) / (m - 1.0));
        value += mean;
        variance += sample_var / m;
    }
    return QuadratureResult{value, std::sqrt(variance), per_stratum * strata};
}

double central_difference(const std::function<double(double)>& f, double x, double h) {
    if (!(h > 0.0)) {
        fail(ErrorCode::InvalidArgument, "central_difference: step must be positive");
    }
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

Minimum golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        if (c >= d) {
            break;
        }
    }
    const double x = 0.5 * (a + b);
    return Minimum{x, f(x)};
}

int configured_threads() {
    int requested = 0;
    if (const char* env = std::getenv("HILBERTGEO_THREADS")) {
        requested = std::atoi(env);
    }
    if (requested <= 0) {
        requested = static_cast<int>(std::thread::hardware_concurrency());
    }
    return std::max(1, requested);
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    const std::size_t workers =
        std::min(count, static_cast<std::size_t>(configured_threads()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = count;
            }
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(workers - 1);
    for (std::size_t t = 1; t < workers; ++t) {
        threads.emplace_back(worker);
    }
    worker();
    for (auto& th : threads) {
        th.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace hilbertgeo

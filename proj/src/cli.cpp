#include "hilbertgeo/cli.hpp"

#include "hilbertgeo/hex_plane.hpp"
#include "hilbertgeo/hilbert_metric.hpp"
#include "hilbertgeo/ideal_triangle.hpp"
#include "hilbertgeo/io.hpp"
#include "hilbertgeo/projective.hpp"
#include "hilbertgeo/surface_bounds.hpp"
#include "hilbertgeo/svg.hpp"
#include "hilbertgeo/verify.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace hilbertgeo::cli {

namespace {

using io::Json;

struct Options {
    std::string format;
    std::string norm;

    std::string points;
    std::string domain;
    std::string a;
    std::string b;
    std::string at;
    std::string region;
    std::string method = "adaptive";
    std::string vertices;
    std::string tau;
    std::string chi_orb;
    std::string out_path;
    std::string only;

    double tol = 0.0;
    double t = 0.0;
    double r = 0.0;
    int samples = kDefaultDensitySamples;
    int circle_samples = 600;
    std::int64_t mc_samples = 1'000'000;
    std::int64_t budget = kDefaultEvaluationBudget;
    std::uint64_t seed = 1;
    int genus = 0;
    bool numeric = false;
};

Normalization norm_or(const Options& o, Normalization fallback) {
    return o.norm.empty() ? fallback : parse_normalization(o.norm);
}

void print(std::ostream& out, const Options& o, const Json& j) {
    if (o.format == "csv") {
        out << io::to_csv({j});
    } else {
        out << io::dump(j) << '\n';
    }
}

Json cmd_cr(const Options& o) {
    const std::vector<ProjPoint> p = io::parse_points(io::parse_json(o.points));
    if (p.size() != 4) {
        fail(ErrorCode::InvalidArgument, "cr needs exactly four points");
    }
    const ProjectiveRatio r = cross_ratio_proj(p[0], p[1], p[2], p[3]);
    Json j;
    j["num"] = r.num;
    j["den"] = r.den;
    j["infinite"] = r.is_infinite();
    j["value"] = r.is_infinite() ? Json(nullptr) : Json(r.value());
    return j;
}

Json cmd_dist(const Options& o) {
    const auto dom = io::parse_domain_text(o.domain);
    const Normalization n = norm_or(o, Normalization::Full);
    Json j;
    j["distance"] = hilbert_distance(*dom, io::parse_vec2(o.a), io::parse_vec2(o.b), n);
    j["normalization"] = to_string(n);
    return j;
}

Json cmd_density(const Options& o) {
    const auto dom = io::parse_domain_text(o.domain);
    const Normalization n = norm_or(o, Normalization::Full);
    Json j;
    j["density"] = p_area_density(*dom, io::parse_vec2(o.at), o.samples, n);
    j["normalization"] = to_string(n);
    j["samples"] = o.samples;
    return j;
}

Json cmd_area(const Options& o) {
    const auto dom = io::parse_domain_text(o.domain);
    const Normalization n = norm_or(o, Normalization::Full);
    AreaOptions opt;
    opt.density_samples = o.samples;
    opt.mc_samples = o.mc_samples;
    opt.budget = o.budget;
    opt.seed = o.seed;
    if (o.method == "monte-carlo" || o.method == "mc") {
        opt.method = AreaMethod::MonteCarlo;
    } else if (o.method != "adaptive") {
        fail(ErrorCode::InvalidArgument, "method must be adaptive or monte-carlo");
    }
    const QuadratureResult r =
        hilbert_area(*dom, io::parse_region(io::parse_json(o.region), *dom), n,
                     o.tol > 0.0 ? o.tol : 1e-6, opt);
    Json j;
    j["area"] = r.value;
    j["error_estimate"] = r.error_estimate;
    j["evaluations"] = r.evaluations;
    j["normalization"] = to_string(n);
    return j;
}

Json cmd_hex_norm(const Options& o) {
    const Vec2 v = io::parse_vec2(o.a);
    Json j;
    j["norm"] = hex_norm(HexVector::from(v));
    return j;
}

Json cmd_hex_distance(const Options& o) {
    Json j;
    j["distance"] = hex_distance(HexVector::from(io::parse_vec2(o.a)),
                                 HexVector::from(io::parse_vec2(o.b)));
    return j;
}

Json cmd_hex_circle(const Options& o) {
    const HexCircleStats s = hex_circle_stats(o.r, o.circle_samples);
    Json j;
    j["radius"] = o.r;
    j["circumference"] = s.circumference;
    j["area"] = s.area;
    return j;
}

Json cmd_shape(const Options& o) {
    const auto dom = io::parse_domain_text(o.domain);
    const std::vector<ProjPoint> v = io::parse_points(io::parse_json(o.vertices));
    if (v.size() != 3) {
        fail(ErrorCode::InvalidArgument, "shape needs exactly three vertices");
    }
    const ShapeParam s = shape_of_ideal_triangle(IdealTriangle(dom, v[0], v[1], v[2]));
    Json j;
    j["t"] = s.canonical();
    j["t_raw"] = s.raw();
    j["tau"] = s.tau();
    return j;
}

Json cmd_triangle_area(const Options& o) {
    const Normalization n = norm_or(o, Normalization::Full);
    Json j;
    j["t"] = o.t;
    if (o.numeric) {
        const QuadratureResult r = triangle_area_quadrature(o.t, o.tol > 0.0 ? o.tol : 1e-8);
        j["area"] = r.value * area_scale(n);
        j["error_estimate"] = r.error_estimate * area_scale(n);
        j["evaluations"] = r.evaluations;
        j["closed_form"] = triangle_area_closed(o.t, n);
    } else {
        j["area"] = triangle_area_closed(o.t, n);
    }
    j["normalization"] = to_string(n);
    return j;
}

Json cmd_surface_bound(const Options& o) {
    const Normalization n = norm_or(o, Normalization::Announced);
    const SurfaceSpec spec{o.genus, io::parse_real_list(o.tau)};
    Json j;
    j["alpha"] = alpha_bound(spec, n);
    j["coarse"] = coarse_bound(euler_characteristic(o.genus), n);
    j["normalization"] = to_string(n);
    j["triangle_count"] = ideal_triangle_count(o.genus);
    return j;
}

Json cmd_orbifold_bound(const Options& o) {
    const Normalization n = norm_or(o, Normalization::Announced);
    const OrbifoldSpec spec{Rational::parse(o.chi_orb)};
    Json j;
    j["bound"] = orbifold_bound(spec, n);
    j["chi_orb"] = spec.chi_orb.str();
    j["normalization"] = to_string(n);
    return j;
}

Json cmd_plot(const Options& o) {
    emit_foliation_svg(o.t, o.out_path);
    Json j;
    j["t"] = o.t;
    j["path"] = o.out_path;
    return j;
}

int cmd_verify(const Options& o, std::ostream& out) {
    std::vector<int> ids = criterion_ids();
    if (!o.only.empty()) {
        ids.clear();
        for (double x : io::parse_real_list(o.only)) {
            ids.push_back(static_cast<int>(x));
        }
    }
    const std::vector<CriterionResult> results = run_criteria(ids);
    const bool all = std::all_of(results.begin(), results.end(),
                                 [](const CriterionResult& r) { return r.passed; });
    std::vector<Json> rows;
    for (const CriterionResult& r : results) {
        Json j;
        j["id"] = r.id;
        j["name"] = r.name;
        j["passed"] = r.passed;
        j["seconds"] = r.seconds;
        j["detail"] = r.detail;
        rows.push_back(j);
    }
    if (o.format == "json") {
        Json j;
        j["passed"] = all;
        j["criteria"] = rows;
        out << io::dump(j) << '\n';
    } else if (o.format == "csv") {
        out << io::to_csv(rows);
    } else {
        for (const CriterionResult& r : results) {
            char line[160];
            std::snprintf(line, sizeof line, "%-4s %2d  %-32s %7.2fs  ", r.passed ? "PASS" : "FAIL",
                          r.id, r.name.c_str(), r.seconds);
            out << line << r.detail << '\n';
        }
        out << (all ? "all criteria passed" : "some criteria FAILED") << '\n';
    }
    return all ? kOk : 1;
}

}  // namespace

int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::NonConvergence:
        return kNonConvergence;
    case ErrorCode::InvalidArgument:
    case ErrorCode::DomainError:
    case ErrorCode::GenusTooSmall:
    case ErrorCode::TauLengthMismatch:
    case ErrorCode::NonNegativeChi:
        return kUsage;
    default:
        return kGeometry;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hilbert geometry of convex projective domains", "hilbertgeo"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    const auto norm_check = CLI::IsMember({"full", "announced"});

    auto* cr = app.add_subcommand("cr", "Cross-ratio of four collinear points");
    cr->add_option("--points", o.points, "JSON array of four [x,y] or [x,y,z] points")->required();

    auto* dist = app.add_subcommand("dist", "Hilbert distance between two interior points");
    dist->add_option("--domain", o.domain, "Domain JSON")->required();
    dist->add_option("--a", o.a, "x,y")->required();
    dist->add_option("--b", o.b, "x,y")->required();
    dist->add_option("--norm", o.norm)->check(norm_check);

    auto* density = app.add_subcommand("density", "p-area density at an interior point");
    density->add_option("--domain", o.domain, "Domain JSON")->required();
    density->add_option("--at", o.at, "x,y")->required();
    density->add_option("--samples", o.samples, "Unit-sphere samples")->check(CLI::Range(8, 1 << 22));
    density->add_option("--norm", o.norm)->check(norm_check);

    auto* area = app.add_subcommand("area", "Hilbert area of a region");
    area->add_option("--domain", o.domain, "Domain JSON")->required();
    area->add_option("--region", o.region, "Region JSON")->required();
    area->add_option("--method", o.method)->check(CLI::IsMember({"adaptive", "monte-carlo", "mc"}));
    area->add_option("--tol", o.tol, "Absolute tolerance (adaptive)");
    area->add_option("--samples", o.samples, "Unit-sphere samples")->check(CLI::Range(8, 1 << 22));
    area->add_option("--mc-samples", o.mc_samples)->check(CLI::Range(std::int64_t{100}, std::int64_t{1} << 40));
    area->add_option("--seed", o.seed);
    area->add_option("--budget", o.budget, "Density evaluations before giving up")
        ->check(CLI::PositiveNumber);
    area->add_option("--norm", o.norm)->check(norm_check);

    auto* hex = app.add_subcommand("hex", "Hex plane norm, distance and circles");
    hex->require_subcommand(1, 1);
    auto* hex_norm_cmd = hex->add_subcommand("norm", "Hex norm of a vector");
    hex_norm_cmd->add_option("--v", o.a, "u,v")->required();
    auto* hex_dist_cmd = hex->add_subcommand("distance", "Hex distance");
    hex_dist_cmd->add_option("--a", o.a, "u,v")->required();
    hex_dist_cmd->add_option("--b", o.b, "u,v")->required();
    auto* hex_circle_cmd = hex->add_subcommand("circle", "Circumference and area of a Hex circle");
    hex_circle_cmd->add_option("--r", o.r)->required();
    hex_circle_cmd->add_option("--samples", o.circle_samples)->check(CLI::Range(6, 1 << 24));

    auto* shape = app.add_subcommand("shape", "Shape parameter of an ideal triangle");
    shape->add_option("--domain", o.domain, "Domain JSON")->required();
    shape->add_option("--vertices", o.vertices, "JSON array of three boundary points")->required();

    auto* tri = app.add_subcommand("triangle-area", "Area B(t) of the ideal triangle with shape t");
    tri->add_option("--t", o.t)->required();
    tri->add_flag("--numeric", o.numeric, "Integrate instead of using the closed form");
    tri->add_option("--tol", o.tol, "Quadrature tolerance");
    tri->add_option("--norm", o.norm)->check(norm_check);

    auto* surf = app.add_subcommand("surface-bound", "Area lower bound of a closed surface");
    surf->add_option("--genus", o.genus)->required();
    surf->add_option("--tau", o.tau, "Comma list or @file.json")->required();
    surf->add_option("--norm", o.norm)->check(norm_check);

    auto* orb = app.add_subcommand("orbifold-bound", "Area lower bound of an orbifold");
    orb->add_option("--chi-orb", o.chi_orb, "p/q")->required();
    orb->add_option("--norm", o.norm)->check(norm_check);

    auto* plot = app.add_subcommand("plot-foliation", "SVG of the canonical triangle and its leaves");
    plot->add_option("--t", o.t)->required();
    plot->add_option("--out", o.out_path, "SVG path")->required();

    auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
    verify->add_option("--only", o.only, "Comma list of criterion ids");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    try {
        if (verify->parsed()) {
            return cmd_verify(o, out);
        }
        if (o.format == "table") {
            o.format = "json";
        }
        Json result;
        if (cr->parsed()) {
            result = cmd_cr(o);
        } else if (dist->parsed()) {
            result = cmd_dist(o);
        } else if (density->parsed()) {
            result = cmd_density(o);
        } else if (area->parsed()) {
            result = cmd_area(o);
        } else if (hex_norm_cmd->parsed()) {
            result = cmd_hex_norm(o);
        } else if (hex_dist_cmd->parsed()) {
            result = cmd_hex_distance(o);
        } else if (hex_circle_cmd->parsed()) {
            result = cmd_hex_circle(o);
        } else if (shape->parsed()) {
            result = cmd_shape(o);
        } else if (tri->parsed()) {
            result = cmd_triangle_area(o);
        } else if (surf->parsed()) {
            result = cmd_surface_bound(o);
        } else if (orb->parsed()) {
            result = cmd_orbifold_bound(o);
        } else if (plot->parsed()) {
            result = cmd_plot(o);
        }
        print(out, o, result);
        return kOk;
    } catch (const NonConvergenceError& e) {
        err << "hilbertgeo: " << e.what() << " (partial value " << e.partial_value()
            << ", error estimate " << e.error_estimate() << ")\n";
        return kNonConvergence;
    } catch (const Error& e) {
        err << "hilbertgeo: " << to_string(e.code()) << ": " << e.what() << '\n';
        return exit_code_for(e.code());
    }
}

}  // namespace hilbertgeo::cli

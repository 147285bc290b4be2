#include <chrono>
#include <fstream>
#include <iostream>
#include <numbers>

#include <CLI11.hpp>
#include <json.hpp>

#include "dyneval/bench.hpp"
#include "dyneval/gallery.hpp"
#include "dyneval/oracle.hpp"
#include "dyneval/scene.hpp"

namespace {

using namespace dyneval;

constexpr int kExitInputError = 2;
constexpr int kExitNumericError = 3;

void write_stream(const StreamResult& result, const std::string& path, const std::string& format,
                  bool lifted) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!path.empty() && path != "-") {
        file.open(path);
        if (!file) throw SceneError(path + ": cannot open output file");
        os = &file;
    }
    if (format == "json")
        write_json(result, *os, lifted);
    else
        write_csv(result, *os, lifted);
}

int cmd_eval(const std::string& scene_path, const std::string& output, const std::string& format,
             bool lifted) {
    const Scene scene = load_scene_file(scene_path);
    const StreamResult result = run_scene(scene);
    write_stream(result, output, format, lifted);
    return 0;
}

nlohmann::json report_json(const gallery::DeviationReport& r) {
    nlohmann::json j;
    j["max_deviation"] = r.max_deviation;
    j["endpoint_deviation"] = r.endpoint_deviation;
    j["runtime_ms"] = r.runtime_ms;
    j["points"] = r.points;
    j["method"] = r.method;
    return j;
}

StreamResult curve_stream(const LiftedCurve& curve, const std::vector<CurveSample>& samples) {
    StreamResult out;
    out.param_names = {"t"};
    out.point_dim = curve.geometric_dim();
    for (const auto& s : samples)
        out.records.push_back({s.index, {s.t}, curve.project(s.lifted), s.lifted});
    return out;
}

StreamResult surface_stream(const LiftedSurface& surface,
                            const std::vector<SurfaceSample>& samples) {
    StreamResult out;
    out.param_names = {"u", "v"};
    out.point_dim = surface.homogeneous() ? surface.geometric_dim() - 1 : surface.geometric_dim();
    for (const auto& s : samples) {
        DenseVector projected = project_surface_point(surface, s.lifted);
        out.records.push_back({s.index, {s.u, s.v}, std::move(projected), s.lifted});
    }
    return out;
}

int cmd_example(const std::string& name, long points, const std::string& method,
                std::uint64_t seed, const std::string& output, const std::string& format,
                bool lifted) {
    constexpr double pi = std::numbers::pi;
    nlohmann::json report;
    const auto t_begin = std::chrono::steady_clock::now();

    if (name == "ex1") {
        std::vector<CurveSample> samples;
        const auto r = gallery::run_intrinsic_curve(points, method, 6, &samples);
        report = report_json(r);
        if (!output.empty()) write_stream(curve_stream(gallery::intrinsic_curve(), samples), output, format, lifted);
    } else if (name == "ex2") {
        const CurveSpec spec = gallery::bezier_demo_curve(seed);
        const LiftedCurve curve = lift(spec);
        double max_dev = 0.0;
        StreamResult all;
        all.param_names = {"t"};
        all.point_dim = 2;
        for (const auto& cfg : gallery::bezier_demo_configs()) {
            const auto samples = run_linear(curve, cfg.t0, cfg.a, cfg.b, points);
            for (const auto& s : samples) {
                const DenseVector truth = de_casteljau(spec.coefficients, s.t);
                // scale-aware: the increasing-step regime leaves [0,1]
                max_dev = std::max(max_dev, dist_euclid(curve.project(s.lifted), truth) /
                                                std::max(1.0, norm_inf(truth)));
                all.records.push_back({s.index, {s.t}, curve.project(s.lifted), s.lifted});
            }
        }
        report["max_deviation"] = max_dev;
        report["points"] = points;
        report["method"] = "basis";
        report["configs"] = 4;
        if (!output.empty()) write_stream(all, output, format, lifted);
    } else if (name == "ex3") {
        const DenseMatrix net = gallery::bezier_patch_net(seed);
        const LiftedSurface patch = gallery::bezier_demo_patch(seed);
        const auto schedule = gallery::patch_schedule();
        const auto samples = run_schedule(patch, 0.0, 0.0, schedule);
        const DenseVector center = de_casteljau_surface(net, 5, 7, 0.5, 0.5);
        // worst deviation against the per-point oracle across the traversal
        double max_dev = 0.0;
        for (const auto& s : samples)
            max_dev = std::max(max_dev,
                               dist_euclid(project_surface_point(patch, s.lifted),
                                           de_casteljau_surface(net, 5, 7, s.u, s.v)));
        report["final_deviation"] =
            dist_euclid(project_surface_point(patch, samples.back().lifted), center);
        report["max_deviation"] = max_dev;
        report["points"] = static_cast<long>(samples.size()) - 1;
        report["method"] = "basis";
        if (!output.empty()) write_stream(surface_stream(patch, samples), output, format, lifted);
    } else if (name == "ex4") {
        const LiftedSurface heli = gallery::helicoid_surface();
        const double h = 4.0 * pi / 200.0;
        double max_dev = 0.0;
        StreamResult all;
        all.param_names = {"u", "v"};
        all.point_dim = 3;
        for (int k = 0; k <= 10; ++k) {
            const double u = 0.2 * k;
            const auto samples = run_iso(heli, u, 0.0, Axis::V, h, 200);
            for (const auto& s : samples) {
                DenseVector projected = project_surface_point(heli, s.lifted);
                max_dev = std::max(max_dev,
                                   dist_euclid(projected, gallery::helicoid_point(s.u, s.v)));
                all.records.push_back({s.index, {s.u, s.v}, std::move(projected), s.lifted});
            }
        }
        report["max_deviation"] = max_dev;
        report["curves"] = 11;
        report["points"] = static_cast<long>(all.records.size());
        report["method"] = "basis";
        if (!output.empty()) write_stream(all, output, format, lifted);
    } else if (name == "ex5") {
        const LiftedSurface cyc = gallery::cyclide_surface();
        const auto schedule = gallery::cyclide_schedule();
        const auto samples = run_schedule(cyc, 0.0, pi, schedule);
        double max_dev = 0.0;
        for (const auto& s : samples)
            max_dev = std::max(max_dev, dist_euclid(project_surface_point(cyc, s.lifted),
                                                    gallery::cyclide_point(s.u, s.v)));
        const double closure = dist_euclid(project_surface_point(cyc, samples.front().lifted),
                                           project_surface_point(cyc, samples.back().lifted));
        report["closure_distance"] = closure;
        report["max_deviation"] = max_dev;
        report["points"] = static_cast<long>(samples.size()) - 1;
        report["method"] = "basis";
        std::cerr << "closure distance: " << format_double(closure) << '\n';
        if (!output.empty()) write_stream(surface_stream(cyc, samples), output, format, lifted);
    } else {
        throw SceneError("unknown example '" + name + "'");
    }

    if (!report.contains("runtime_ms"))
        report["runtime_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t_begin)
                .count();
    std::cout << report.dump(2) << '\n';
    return 0;
}

int cmd_table2(bool csv, const std::string& output) {
    static const long kCounts[] = {10, 20, 100, 200, 1000, 2000, 10000, 20000};
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!output.empty() && output != "-") {
        file.open(output);
        if (!file) throw SceneError(output + ": cannot open output file");
        os = &file;
    }
    if (csv) {
        *os << "points,basis_transformation,taylor_s6\n";
        for (long m : kCounts) {
            const auto basis = gallery::run_intrinsic_curve(m, "basis");
            const auto taylor = gallery::run_intrinsic_curve(m, "taylor");
            *os << m << ',' << format_double(basis.endpoint_deviation) << ','
                << format_double(taylor.endpoint_deviation) << '\n';
        }
    } else {
        *os << "endpoint deviation vs direct evaluation\n";
        *os << "  points   basis transformation   Taylor (order 6)\n";
        char line[96];
        for (long m : kCounts) {
            const auto basis = gallery::run_intrinsic_curve(m, "basis");
            const auto taylor = gallery::run_intrinsic_curve(m, "taylor");
            std::snprintf(line, sizeof line, "%8ld   %20.3e   %16.3e\n", m,
                          basis.endpoint_deviation, taylor.endpoint_deviation);
            *os << line;
        }
    }
    return 0;
}

int cmd_bench(const std::string& scene_path, int repetitions) {
    const Scene scene = load_scene_file(scene_path);
    const BenchReport report = bench_scene(scene, repetitions);
    std::cout << bench_report_json(report) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dynamic evaluation of exponential polynomial curves and surfaces"};
    app.require_subcommand(1);

    std::string scene_path, output, format = "csv", method = "basis", example_name;
    bool lifted = false, csv = false;
    long points = 2000;
    int repetitions = 5;
    std::uint64_t seed = dyneval::gallery::kDefaultSeed;

    auto* eval = app.add_subcommand("eval", "Evaluate a scene file into a point stream");
    eval->add_option("scene", scene_path, "scene JSON file")->required();
    eval->add_option("--output,-o", output, "output path ('-' for stdout)");
    eval->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    eval->add_flag("--lifted", lifted, "include lifted coordinates");

    auto* example = app.add_subcommand("example", "Run a built-in example with an error report");
    example->add_option("name", example_name, "ex1..ex5")->required();
    example->add_option("--points", points, "points for ex1/ex2 (default 2000/200)");
    example->add_option("--method", method, "ex1 evaluation method")
        ->check(CLI::IsMember({"basis", "taylor"}));
    example->add_option("--seed", seed, "control-net seed for ex2/ex3");
    example->add_option("--output,-o", output, "write the point stream here");
    example->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    example->add_flag("--lifted", lifted, "include lifted coordinates");

    auto* table2 = app.add_subcommand("table2", "Accuracy table for the intrinsic curve");
    table2->add_flag("--csv", csv, "machine-readable CSV");
    table2->add_option("--output,-o", output, "output path ('-' for stdout)");

    auto* bench = app.add_subcommand("bench", "Throughput of dynamic vs per-point evaluation");
    bench->add_option("scene", scene_path, "scene JSON file")->required();
    bench->add_option("--reps", repetitions, "repetitions (median reported)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval->parsed()) return cmd_eval(scene_path, output.empty() ? "-" : output, format, lifted);
        if (example->parsed()) {
            if (example_name == "ex2" && example->count("--points") == 0) points = 200;
            return cmd_example(example_name, points, method, seed, output, format, lifted);
        }
        if (table2->parsed()) return cmd_table2(csv, output);
        if (bench->parsed()) return cmd_bench(scene_path, repetitions);
    } catch (const dyneval::LiftingError& e) {
        std::cerr << "LiftingError: " << e.what() << '\n';
        return kExitNumericError;
    } catch (const dyneval::SingularMatrixError& e) {
        std::cerr << "SingularMatrixError: " << e.what() << '\n';
        return kExitNumericError;
    } catch (const dyneval::ZeroWeightError& e) {
        std::cerr << "ZeroWeightError: " << e.what() << '\n';
        return kExitNumericError;
    } catch (const dyneval::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return 0;
}

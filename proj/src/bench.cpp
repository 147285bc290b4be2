#include "dyneval/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include <json.hpp>

#include "dyneval/oracle.hpp"

namespace dyneval {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// Keep the optimizer honest without storing the streams.
volatile double g_sink;

bool pure_bernstein(const Basis& b) {
    return b.kind() == Basis::Kind::Bernstein;
}

}  // namespace

BenchReport bench_scene(const Scene& scene, int repetitions) {
    if (repetitions < 1) throw PreconditionError("repetitions must be >= 1");
    BenchReport report;
    report.repetitions = repetitions;

    std::vector<double> dyn_ms, ora_ms;

    if (scene.is_curve()) {
        const CurveScene& cs = scene.curve();

        const auto t_build = Clock::now();
        LiftedCurve curve = lift(CurveSpec{cs.basis, cs.coefficients});
        const DenseMatrix step = iteration_matrix(curve, cs.step);
        report.matrix_build_ms = ms_since(t_build);

        const long m = cs.count;
        report.points = m;

        // parameter sequence shared by both paths
        std::vector<double> params(m + 1);
        const bool translate = cs.step.kind == StepSpec::Kind::Translate;
        const double r = cs.step.b - cs.step.a;
        for (long i = 0; i <= m; ++i) {
            const double di = static_cast<double>(i);
            if (translate)
                params[i] = cs.start_param + di * cs.step.h;
            else if (std::fabs(r - 1.0) < 1e-14)
                params[i] = cs.start_param + di * cs.step.a;
            else
                params[i] = cs.step.a * (1.0 - std::pow(r, di)) / (1.0 - r) +
                            cs.start_param * std::pow(r, di);
        }

        const DenseVector x0 = cs.start_point ? *cs.start_point : curve.start_point(cs.start_param);
        for (int rep = 0; rep < repetitions; ++rep) {
            DenseVector x = x0, next;
            double sink = 0.0;
            const auto t0 = Clock::now();
            for (long i = 0; i < m; ++i) {
                mat_vec_into(step, x, next);
                x.swap(next);
                sink += x[0];
            }
            dyn_ms.push_back(ms_since(t0));
            g_sink = sink;
        }

        const bool bezier = pure_bernstein(cs.basis);
        report.oracle = bezier ? "de_casteljau" : "direct_eval";
        for (int rep = 0; rep < repetitions; ++rep) {
            double sink = 0.0;
            const auto t0 = Clock::now();
            if (bezier) {
                for (long i = 1; i <= m; ++i) sink += de_casteljau(cs.coefficients, params[i])[0];
            } else {
                for (long i = 1; i <= m; ++i) sink += direct_eval(curve, params[i])[0];
            }
            ora_ms.push_back(ms_since(t0));
            g_sink = sink;
        }
    } else {
        const SurfaceScene& ss = scene.surface();

        const auto t_build = Clock::now();
        LiftedSurface surface =
            lift_surface(ss.coefficients, ss.basis, ss.coefficients.rows(), ss.homogeneous);
        std::vector<DenseMatrix> step_matrices;
        for (const auto& seg : ss.schedule) {
            auto [cu, cv] = surface_translation_matrices(ss.basis, seg.du, seg.dv);
            step_matrices.push_back(
                mat_mul(mat_mul(surface.matrix(), mat_mul(cu, cv)), surface.inverse()));
        }
        report.matrix_build_ms = ms_since(t_build);

        long m = 0;
        for (const auto& seg : ss.schedule) m += seg.steps;
        report.points = m;

        const DenseVector x0 = ss.start_point ? *ss.start_point : surface.start_point(ss.u0, ss.v0);
        for (int rep = 0; rep < repetitions; ++rep) {
            DenseVector x = x0, next;
            double sink = 0.0;
            const auto t0 = Clock::now();
            for (size_t si = 0; si < ss.schedule.size(); ++si) {
                const DenseMatrix& mstep = step_matrices[si];
                for (long j = 0; j < ss.schedule[si].steps; ++j) {
                    mat_vec_into(mstep, x, next);
                    x.swap(next);
                    sink += x[0];
                }
            }
            dyn_ms.push_back(ms_since(t0));
            g_sink = sink;
        }

        report.oracle = "direct_eval";
        for (int rep = 0; rep < repetitions; ++rep) {
            double sink = 0.0;
            const auto t0 = Clock::now();
            double u = ss.u0, v = ss.v0;
            for (const auto& seg : ss.schedule)
                for (long j = 0; j < seg.steps; ++j) {
                    u += seg.du;
                    v += seg.dv;
                    sink += direct_eval(surface, u, v)[0];
                }
            ora_ms.push_back(ms_since(t0));
            g_sink = sink;
        }
    }

    report.dynamic_ms = median(dyn_ms);
    report.oracle_ms = median(ora_ms);
    const double pts = static_cast<double>(report.points);
    report.dynamic_points_per_second =
        report.dynamic_ms > 0.0 ? pts / (report.dynamic_ms / 1e3) : 0.0;
    report.oracle_points_per_second = report.oracle_ms > 0.0 ? pts / (report.oracle_ms / 1e3) : 0.0;
    report.speedup = report.oracle_points_per_second > 0.0
                         ? report.dynamic_points_per_second / report.oracle_points_per_second
                         : 0.0;
    return report;
}

std::string bench_report_json(const BenchReport& r) {
    nlohmann::json j;
    j["points"] = r.points;
    j["repetitions"] = r.repetitions;
    j["oracle"] = r.oracle;
    j["matrix_build_ms"] = r.matrix_build_ms;
    j["dynamic_ms"] = r.dynamic_ms;
    j["oracle_ms"] = r.oracle_ms;
    j["dynamic_points_per_second"] = r.dynamic_points_per_second;
    j["oracle_points_per_second"] = r.oracle_points_per_second;
    j["speedup"] = r.speedup;
    return j.dump(2);
}

}  // namespace dyneval

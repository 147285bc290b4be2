#include "dyneval/gallery.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include "dyneval/oracle.hpp"

namespace dyneval::gallery {

namespace {
constexpr double kPi = std::numbers::pi;
}

LiftedCurve intrinsic_curve() {
    Basis basis = Basis::union_of(
        {Basis::poly(0), Basis::product_of({Basis::poly(3), Basis::trig(1.0)})});
    // Cartesian coefficients of the curve against
    // (1, cos, sin, t cos, t sin, t^2 cos, t^2 sin, t^3 cos, t^3 sin).
    DenseMatrix coeffs = DenseMatrix::from_rows(
        {{-1.494, 1.494, 0.52, -0.12, 1.494, 0.003, -0.06, 0.0, 0.001},
         {0.52, -0.52, 1.494, -1.494, -0.12, 0.06, 0.003, -0.001, 0.0}});
    return lift(CurveSpec{std::move(basis), std::move(coeffs)});
}

double intrinsic_curve_span() { return 8.0 * kPi; }

DeviationReport run_intrinsic_curve(long m, const std::string& method, int taylor_order,
                                    std::vector<CurveSample>* samples_out) {
    if (m < 1) throw PreconditionError("point count must be >= 1");
    if (method != "basis" && method != "taylor")
        throw PreconditionError("method must be 'basis' or 'taylor'");

    const LiftedCurve curve = intrinsic_curve();
    const double h = intrinsic_curve_span() / static_cast<double>(m);

    const auto t_start = std::chrono::steady_clock::now();
    DenseMatrix step = method == "basis"
                           ? iteration_matrix(curve, StepSpec::translate(h))
                           : taylor_ode_step_matrix(curve.derivative_operator(), h, taylor_order);

    std::vector<CurveSample> samples;
    samples.reserve(m + 1);
    DenseVector x = curve.start_point(0.0);
    samples.push_back({0, 0.0, x});
    DenseVector next;
    for (long i = 1; i <= m; ++i) {
        mat_vec_into(step, x, next);
        x.swap(next);
        samples.push_back({i, static_cast<double>(i) * h, x});
    }
    const auto t_end = std::chrono::steady_clock::now();

    DeviationReport report;
    report.points = m;
    report.method = method;
    report.runtime_ms = std::chrono::duration<double, std::milli>(t_end - t_start).count();
    for (const auto& s : samples) {
        const DenseVector truth = curve.project(direct_eval(curve, s.t));
        const double dev = dist_euclid(curve.project(s.lifted), truth);
        report.max_deviation = std::max(report.max_deviation, dev);
        if (s.index == m) report.endpoint_deviation = dev;
    }
    if (samples_out) *samples_out = std::move(samples);
    return report;
}

CurveSpec bezier_demo_curve(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    DenseMatrix coeffs(2, 9);
    for (int j = 0; j < 9; ++j) {
        coeffs(0, j) = unit(rng);
        coeffs(1, j) = unit(rng);
    }
    return CurveSpec{Basis::bernstein(8), std::move(coeffs)};
}

std::vector<LinearRunConfig> bezier_demo_configs() {
    return {{0.01, 1.01, 0.0, "fixed"},
            {0.01, 1.005, 0.0, "decreasing"},
            {0.01, 1.015, 0.0, "increasing"},
            {-0.005, 0.99, 1.0, "reverse"}};
}

DenseMatrix bezier_patch_net(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(-1.0, 1.0);
    DenseMatrix net(3, 48);
    for (int i = 0; i <= 5; ++i)
        for (int j = 0; j <= 7; ++j) {
            const int col = i * 8 + j;
            net(0, col) = static_cast<double>(i) / 5.0 + 0.15 * jitter(rng);
            net(1, col) = static_cast<double>(j) / 7.0 + 0.15 * jitter(rng);
            net(2, col) = 0.3 * jitter(rng);
        }
    // normalize the corner-to-corner distance to 1
    double s = 0.0;
    for (int r = 0; r < 3; ++r) {
        const double d = net(r, 0) - net(r, 47);
        s += d * d;
    }
    const double scale = 1.0 / std::sqrt(s);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 48; ++c) net(r, c) *= scale;
    return net;
}

LiftedSurface bezier_demo_patch(std::uint64_t seed) {
    return lift_surface(bezier_patch_net(seed),
                        SurfaceBasis::tensor(Basis::bernstein(5), Basis::bernstein(7)), 3);
}

std::vector<ScheduleSegment> patch_schedule() {
    const double h = 1.0 / 80.0;
    std::vector<ScheduleSegment> segments;
    segments.reserve(33);
    for (int j = 0; j <= 32; ++j) {
        const long steps = j == 0 ? 80 : 80 - 5 * ((j - 1) / 2);
        switch (j % 4) {
            case 0: segments.push_back({h, 0.0, steps}); break;
            case 1: segments.push_back({0.0, h, steps}); break;
            case 2: segments.push_back({-h, 0.0, steps}); break;
            default: segments.push_back({0.0, -h, steps}); break;
        }
    }
    return segments;
}

LiftedSurface helicoid_surface() {
    SurfaceBasis basis = SurfaceBasis::mixed(
        {SurfaceTerm{std::nullopt, Basis::poly(1)},
         SurfaceTerm{Basis::poly(1), Basis::trig(1.0)}});
    // x, y, z rows followed by the three lifted coordinates; det = -4.
    DenseMatrix m = DenseMatrix::from_rows({{0, 0, 2, 0, 1, 0},
                                            {0, 0, 0, 2, 0, 1},
                                            {0, 1, 0, 0, 0, 0},
                                            {1, 0, 0, 0, 0, 0},
                                            {0, 0, 0, 0, 1, 0},
                                            {0, 0, 0, 0, 0, 1}});
    return lift_surface(m, std::move(basis), 3);
}

DenseVector helicoid_point(double u, double v) {
    return {(2.0 + u) * std::cos(v), (2.0 + u) * std::sin(v), v};
}

namespace {

// Basis order per (1 u cos u u sin u) x (1 v cos v v sin v):
// (1, cos v, sin v, cos u, cos u cos v, cos u sin v, sin u, sin u cos v,
//  sin u sin v).
DenseMatrix cyclide_coefficients() {
    const double a = 6.0;
    const double b = 4.0 * std::sqrt(2.0);
    const double c = 2.0;
    const double mu = 3.0;
    DenseMatrix m(4, 9);
    // x1 = mu*c + b^2*cos u - mu*a*cos u cos v
    m(0, 0) = mu * c;
    m(0, 3) = b * b;
    m(0, 4) = -mu * a;
    // x2 = a*b*sin u - mu*b*sin u cos v
    m(1, 6) = a * b;
    m(1, 7) = -mu * b;
    // x3 = -mu*b*sin v + b*c*cos u sin v
    m(2, 2) = -mu * b;
    m(2, 5) = b * c;
    // x4 = a - c*cos u cos v
    m(3, 0) = a;
    m(3, 4) = -c;
    return m;
}

}  // namespace

LiftedSurface cyclide_surface() {
    Basis factor = Basis::union_of({Basis::poly(0), Basis::trig(1.0)});
    return lift_surface(cyclide_coefficients(), SurfaceBasis::tensor(factor, factor), 4,
                        /*homogeneous=*/true);
}

DenseVector cyclide_point(double u, double v) {
    const double a = 6.0;
    const double b = 4.0 * std::sqrt(2.0);
    const double c = 2.0;
    const double mu = 3.0;
    const double cu = std::cos(u), su = std::sin(u);
    const double cv = std::cos(v), sv = std::sin(v);
    const double x1 = mu * (c - a * cu * cv) + b * b * cu;
    const double x2 = b * su * (a - mu * cv);
    const double x3 = b * sv * (c * cu - mu);
    const double x4 = a - c * cu * cv;
    return {x1 / x4, x2 / x4, x3 / x4};
}

std::vector<ScheduleSegment> cyclide_schedule(int pieces, long steps_per_piece) {
    const double h1 = 0.18 * kPi / static_cast<double>(steps_per_piece);
    const double h2 = kPi / static_cast<double>(steps_per_piece);
    std::vector<ScheduleSegment> segments;
    segments.reserve(pieces);
    for (int p = 0; p < pieces; ++p)
        segments.push_back({h1, p % 2 == 0 ? h2 : -h2, steps_per_piece});
    return segments;
}

}  // namespace dyneval::gallery

#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "dyneval/curve.hpp"
#include "dyneval/surface.hpp"

namespace dyneval::gallery {

inline constexpr std::uint64_t kDefaultSeed = 20250810;

// ex1: intrinsically defined planar curve with cubic curvature radius
// rho(t) = 0.001 t^3 - 0.06 t^2 + 1.5 t + 0.4 over [0, 8*pi], written in
// the basis (1) u (U_3 x V).
LiftedCurve intrinsic_curve();
double intrinsic_curve_span();  // 8*pi

struct DeviationReport {
    double max_deviation = 0.0;
    double endpoint_deviation = 0.0;
    double runtime_ms = 0.0;
    long points = 0;
    std::string method;
};

// Evaluate the intrinsic curve with m equal steps and report the Euclidean
// deviation against direct evaluation. method: "basis" uses the closed-form
// step matrix, "taylor" the truncated-series comparator of the given order.
DeviationReport run_intrinsic_curve(long m, const std::string& method, int taylor_order = 6,
                                    std::vector<CurveSample>* samples_out = nullptr);

// ex2: planar degree-8 Bezier curve with seeded-random control points.
CurveSpec bezier_demo_curve(std::uint64_t seed = kDefaultSeed);

// The four sampling regimes demonstrated on it: fixed forward step,
// decreasing, increasing, and decreasing from the right end point.
struct LinearRunConfig {
    double a;
    double b;
    double t0;
    const char* label;
};
std::vector<LinearRunConfig> bezier_demo_configs();

// ex3: 5x7-degree Bezier patch with a seeded control net, scaled so the
// corner-to-corner distance |P00 - P57| is 1. Columns are v-fastest.
DenseMatrix bezier_patch_net(std::uint64_t seed = kDefaultSeed);
LiftedSurface bezier_demo_patch(std::uint64_t seed = kDefaultSeed);

// The 33-piece boustrophedon traversal (+u, +v, -u, -v alternating,
// piece j has 80 - 5*floor((j-1)/2) steps of size 1/80) ending at the
// patch center.
std::vector<ScheduleSegment> patch_schedule();

// ex4: helicoid ((2+u)cos v, (2+u)sin v, v) on [0,2] x [0,4*pi], carried by
// the basis (1, v, cos v, sin v, u cos v, u sin v) with the square lifted
// coefficient matrix accepted as-is.
LiftedSurface helicoid_surface();
DenseVector helicoid_point(double u, double v);  // closed form, the oracle path

// ex5: Dupin cyclide (a=6, b=4*sqrt(2), c=2, mu=3) in homogeneous
// coordinates over a 9-dimensional trigonometric tensor basis.
LiftedSurface cyclide_surface();
DenseVector cyclide_point(double u, double v);  // Cartesian closed form

// 100 skew pieces of 100 steps each, h1 = 0.18*pi/100 and h2 = +-pi/100
// with the v direction alternating per piece; closes onto the start point.
std::vector<ScheduleSegment> cyclide_schedule(int pieces = 100, long steps_per_piece = 100);

}  // namespace dyneval::gallery

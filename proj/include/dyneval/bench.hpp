#pragma once
#include <string>

#include "dyneval/scene.hpp"

namespace dyneval {

// Throughput of the dynamic iteration against the classical per-point
// oracle for the same parameter sequence. The oracle is de Casteljau for
// pure Bernstein bases and direct evaluation (host transcendentals)
// otherwise. Times are medians over the requested repetitions; matrix
// construction (lift + step matrices) is reported separately.
struct BenchReport {
    long points = 0;
    int repetitions = 0;
    std::string oracle;
    double matrix_build_ms = 0.0;
    double dynamic_ms = 0.0;
    double oracle_ms = 0.0;
    double dynamic_points_per_second = 0.0;
    double oracle_points_per_second = 0.0;
    double speedup = 0.0;  // dynamic throughput / oracle throughput
};

BenchReport bench_scene(const Scene& scene, int repetitions);

std::string bench_report_json(const BenchReport& r);

}  // namespace dyneval

#pragma once
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dyneval/curve.hpp"
#include "dyneval/surface.hpp"

namespace dyneval {

// Parsed scene file. Curve scenes carry a single step policy; surface
// scenes carry a schedule (a single step spec becomes a one-segment
// schedule).
struct CurveScene {
    Basis basis;
    DenseMatrix coefficients;
    double start_param = 0.0;
    StepSpec step;
    long count = 0;
    std::optional<DenseVector> start_point;
};

struct SurfaceScene {
    SurfaceBasis basis;
    DenseMatrix coefficients;
    bool homogeneous = false;
    double u0 = 0.0;
    double v0 = 0.0;
    std::vector<ScheduleSegment> schedule;
    std::optional<DenseVector> start_point;
};

struct Scene {
    std::variant<CurveScene, SurfaceScene> body;
    bool is_curve() const { return std::holds_alternative<CurveScene>(body); }
    const CurveScene& curve() const { return std::get<CurveScene>(body); }
    const SurfaceScene& surface() const { return std::get<SurfaceScene>(body); }
};

// Throws SceneError with a line-anchored message on parse failure and a
// field-anchored message on validation failure.
Scene load_scene_file(const std::string& path);
Scene parse_scene_text(const std::string& text, const std::string& name = "<scene>");

// One emitted point. params is (t) for curves, (u, v) for surfaces; point
// is the projected geometric point (homogeneous division applied).
struct StreamRecord {
    long index = 0;
    std::vector<double> params;
    std::vector<double> point;
    std::vector<double> lifted;
};

struct StreamResult {
    std::vector<std::string> param_names;  // {"t"} or {"u","v"}
    int point_dim = 0;
    std::vector<StreamRecord> records;
};

// Numeric failures (LiftingError, SingularMatrixError, ZeroWeightError)
// propagate to the caller.
StreamResult run_scene(const Scene& scene);

// CSV with header i,t,x,y[,z...] or i,u,v,x,y,z; numbers at 17 significant
// digits so parsing the file reproduces the stream bit-exactly.
void write_csv(const StreamResult& r, std::ostream& os, bool include_lifted = false);
void write_json(const StreamResult& r, std::ostream& os, bool include_lifted = false);

std::string format_double(double x);  // %.17g

}  // namespace dyneval

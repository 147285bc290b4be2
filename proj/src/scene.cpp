#include "dyneval/scene.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace dyneval {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw SceneError(where + ": " + what);
}

double require_number(const json& j, const std::string& where) {
    if (!j.is_number()) fail(where, "expected a number");
    return j.get<double>();
}

int require_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    return j.get<int>();
}

Basis parse_basis(const json& j, const std::string& where) {
    if (!j.is_object() || j.size() != 1) fail(where, "expected a single-key basis node");
    const std::string key = j.begin().key();
    const json& value = j.begin().value();
    try {
        if (key == "poly") return Basis::poly(require_int(value, where + ".poly"));
        if (key == "bernstein") return Basis::bernstein(require_int(value, where + ".bernstein"));
        if (key == "trig") return Basis::trig(require_number(value, where + ".trig"));
        if (key == "hyper") return Basis::hyper(require_number(value, where + ".hyper"));
        if (key == "union" || key == "product") {
            if (!value.is_array() || value.empty()) fail(where, key + " expects a non-empty array");
            std::vector<Basis> children;
            children.reserve(value.size());
            for (size_t i = 0; i < value.size(); ++i)
                children.push_back(
                    parse_basis(value[i], where + "." + key + "[" + std::to_string(i) + "]"));
            return key == "union" ? Basis::union_of(std::move(children))
                                  : Basis::product_of(std::move(children));
        }
    } catch (const PreconditionError& e) {
        fail(where, e.what());
    }
    fail(where, "unknown basis node '" + key + "'");
}

SurfaceTerm parse_surface_term(const json& j, const std::string& where) {
    if (!j.is_object() || j.size() != 1) fail(where, "expected a single-key surface term");
    const std::string key = j.begin().key();
    const json& value = j.begin().value();
    if (key == "u") return SurfaceTerm{parse_basis(value, where + ".u"), std::nullopt};
    if (key == "v") return SurfaceTerm{std::nullopt, parse_basis(value, where + ".v")};
    if (key == "tensor") {
        if (!value.is_object() || !value.contains("u") || !value.contains("v"))
            fail(where, "tensor expects {\"u\": ..., \"v\": ...}");
        return SurfaceTerm{parse_basis(value["u"], where + ".tensor.u"),
                           parse_basis(value["v"], where + ".tensor.v")};
    }
    fail(where, "unknown surface term '" + key + "'");
}

SurfaceBasis parse_surface_basis(const json& j, const std::string& where) {
    if (!j.is_object() || j.size() != 1) fail(where, "expected {\"tensor\": ...} or {\"mixed\": ...}");
    const std::string key = j.begin().key();
    const json& value = j.begin().value();
    if (key == "tensor") {
        if (!value.is_object() || !value.contains("u") || !value.contains("v"))
            fail(where, "tensor expects {\"u\": ..., \"v\": ...}");
        return SurfaceBasis::tensor(parse_basis(value["u"], where + ".tensor.u"),
                                    parse_basis(value["v"], where + ".tensor.v"));
    }
    if (key == "mixed") {
        if (!value.is_array() || value.empty()) fail(where, "mixed expects a non-empty array");
        std::vector<SurfaceTerm> terms;
        for (size_t i = 0; i < value.size(); ++i)
            terms.push_back(
                parse_surface_term(value[i], where + ".mixed[" + std::to_string(i) + "]"));
        return SurfaceBasis::mixed(std::move(terms));
    }
    fail(where, "unknown surface basis '" + key + "'");
}

DenseMatrix parse_coefficients(const json& j, int expected_cols, const std::string& where) {
    if (!j.is_array() || j.empty()) fail(where, "expected a non-empty array of points");
    if (static_cast<int>(j.size()) != expected_cols)
        fail(where, "expected " + std::to_string(expected_cols) + " coefficient points, got " +
                        std::to_string(j.size()));
    const auto& first = j[0];
    if (!first.is_array() || first.empty() || first.size() > 4)
        fail(where + "[0]", "each point must be an array of 2..4 coordinates");
    const int d = static_cast<int>(first.size());
    DenseMatrix m(d, expected_cols);
    for (int c = 0; c < expected_cols; ++c) {
        const auto& pt = j[c];
        const std::string at = where + "[" + std::to_string(c) + "]";
        if (!pt.is_array() || static_cast<int>(pt.size()) != d)
            fail(at, "inconsistent coordinate count");
        for (int r = 0; r < d; ++r) m(r, c) = require_number(pt[r], at);
    }
    if (!m.all_finite()) fail(where, "coefficients must be finite");
    return m;
}

StepSpec parse_curve_step(const json& j, const std::string& where) {
    if (!j.is_object() || j.size() != 1)
        fail(where, "expected {\"translate\": h} or {\"linear\": {\"a\":..,\"b\":..}}");
    const std::string key = j.begin().key();
    const json& value = j.begin().value();
    try {
        if (key == "translate") return StepSpec::translate(require_number(value, where));
        if (key == "linear") {
            if (!value.is_object() || !value.contains("a") || !value.contains("b"))
                fail(where, "linear expects {\"a\":..,\"b\":..}");
            return StepSpec::linear(require_number(value["a"], where + ".a"),
                                    require_number(value["b"], where + ".b"));
        }
    } catch (const PreconditionError& e) {
        fail(where, e.what());
    }
    fail(where, "unknown step kind '" + key + "'");
}

ScheduleSegment parse_surface_step(const json& j, long count, const std::string& where) {
    if (!j.is_object()) fail(where, "expected {\"du\":..,\"dv\":..}");
    ScheduleSegment seg;
    seg.du = j.contains("du") ? require_number(j["du"], where + ".du") : 0.0;
    seg.dv = j.contains("dv") ? require_number(j["dv"], where + ".dv") : 0.0;
    seg.steps = count;
    return seg;
}

long parse_count(const json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long>() < 0) fail(where, "count must be an integer >= 0");
    return j.get<long>();
}

std::optional<DenseVector> parse_start_point(const json& run, const std::string& where) {
    if (!run.contains("start_point")) return std::nullopt;
    const auto& sp = run["start_point"];
    if (!sp.is_array() || sp.empty()) fail(where + ".start_point", "expected an array of numbers");
    DenseVector v(sp.size());
    for (size_t i = 0; i < sp.size(); ++i) v[i] = require_number(sp[i], where + ".start_point");
    return v;
}

Scene parse_scene_json(const json& root, const std::string& name) {
    if (!root.is_object()) fail(name, "top level must be an object");
    if (!root.contains("kind")) fail(name, "missing \"kind\"");
    const std::string kind = root["kind"].is_string() ? root["kind"].get<std::string>() : "";
    if (kind != "curve" && kind != "surface") fail(name + ".kind", "must be \"curve\" or \"surface\"");
    for (const char* field : {"basis", "coefficients", "run"})
        if (!root.contains(field)) fail(name, std::string("missing \"") + field + "\"");
    const json& run = root["run"];
    if (!run.is_object()) fail(name + ".run", "expected an object");

    if (kind == "curve") {
        CurveScene cs{.basis = parse_basis(root["basis"], name + ".basis"),
                      .coefficients = DenseMatrix(1, 1),
                      .start_param = 0.0,
                      .step = StepSpec::translate(0.0),
                      .count = 0,
                      .start_point = std::nullopt};
        cs.coefficients =
            parse_coefficients(root["coefficients"], cs.basis.dim(), name + ".coefficients");
        if (!run.contains("start")) fail(name + ".run", "missing \"start\"");
        cs.start_param = require_number(run["start"], name + ".run.start");
        if (!run.contains("step")) fail(name + ".run", "missing \"step\"");
        cs.step = parse_curve_step(run["step"], name + ".run.step");
        if (!run.contains("count")) fail(name + ".run", "missing \"count\"");
        cs.count = parse_count(run["count"], name + ".run.count");
        cs.start_point = parse_start_point(run, name + ".run");
        if (cs.start_point && static_cast<int>(cs.start_point->size()) != cs.basis.dim())
            fail(name + ".run.start_point", "length must equal the basis dimension");
        return Scene{std::move(cs)};
    }

    SurfaceScene ss{.basis = parse_surface_basis(root["basis"], name + ".basis"),
                    .coefficients = DenseMatrix(1, 1),
                    .homogeneous = false,
                    .u0 = 0.0,
                    .v0 = 0.0,
                    .schedule = {},
                    .start_point = std::nullopt};
    ss.coefficients =
        parse_coefficients(root["coefficients"], ss.basis.dim(), name + ".coefficients");
    if (root.contains("homogeneous")) {
        if (!root["homogeneous"].is_boolean()) fail(name + ".homogeneous", "expected a boolean");
        ss.homogeneous = root["homogeneous"].get<bool>();
    }
    if (ss.homogeneous && ss.coefficients.rows() < 3)
        fail(name, "homogeneous surfaces need 3- or 4-coordinate coefficients");
    if (!run.contains("start") || !run["start"].is_array() || run["start"].size() != 2)
        fail(name + ".run.start", "expected [u0, v0]");
    ss.u0 = require_number(run["start"][0], name + ".run.start[0]");
    ss.v0 = require_number(run["start"][1], name + ".run.start[1]");

    if (run.contains("schedule")) {
        if (!run.contains("steps") || !run["steps"].is_object())
            fail(name + ".run", "\"schedule\" requires a \"steps\" object of named step specs");
        const json& steps = run["steps"];
        if (!run["schedule"].is_array() || run["schedule"].empty())
            fail(name + ".run.schedule", "expected a non-empty array");
        for (size_t i = 0; i < run["schedule"].size(); ++i) {
            const auto& seg = run["schedule"][i];
            const std::string at = name + ".run.schedule[" + std::to_string(i) + "]";
            if (!seg.is_object() || !seg.contains("step") || !seg.contains("count"))
                fail(at, "expected {\"step\": name, \"count\": n}");
            const std::string ref = seg["step"].is_string() ? seg["step"].get<std::string>() : "";
            if (!steps.contains(ref)) fail(at + ".step", "references undeclared step '" + ref + "'");
            ss.schedule.push_back(parse_surface_step(steps[ref], parse_count(seg["count"], at + ".count"),
                                                     name + ".run.steps." + ref));
        }
    } else {
        if (!run.contains("step") || !run.contains("count"))
            fail(name + ".run", "expected \"step\" and \"count\" (or a \"schedule\")");
        ss.schedule.push_back(parse_surface_step(run["step"], parse_count(run["count"], name + ".run.count"),
                                                 name + ".run.step"));
    }
    ss.start_point = parse_start_point(run, name + ".run");
    if (ss.start_point && static_cast<int>(ss.start_point->size()) != ss.basis.dim())
        fail(name + ".run.start_point", "length must equal the basis dimension");
    return Scene{std::move(ss)};
}

}  // namespace

Scene parse_scene_text(const std::string& text, const std::string& name) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        // nlohmann reports "parse error at line L, column C: ..."
        throw SceneError(name + ": " + e.what());
    }
    return parse_scene_json(root, name);
}

Scene load_scene_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SceneError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scene_text(buf.str(), path);
}

StreamResult run_scene(const Scene& scene) {
    StreamResult out;
    if (scene.is_curve()) {
        const CurveScene& cs = scene.curve();
        LiftedCurve curve = lift(CurveSpec{cs.basis, cs.coefficients});
        const DenseVector* start = cs.start_point ? &*cs.start_point : nullptr;
        std::vector<CurveSample> samples =
            cs.step.kind == StepSpec::Kind::Translate
                ? run_fixed(curve, cs.start_param, cs.step.h, cs.count, start)
                : run_linear(curve, cs.start_param, cs.step.a, cs.step.b, cs.count, start);
        out.param_names = {"t"};
        out.point_dim = curve.geometric_dim();
        out.records.reserve(samples.size());
        for (auto& s : samples)
            out.records.push_back({s.index, {s.t}, curve.project(s.lifted), std::move(s.lifted)});
        return out;
    }

    const SurfaceScene& ss = scene.surface();
    LiftedSurface surface =
        lift_surface(ss.coefficients, ss.basis, ss.coefficients.rows(), ss.homogeneous);
    const DenseVector* start = ss.start_point ? &*ss.start_point : nullptr;
    std::vector<SurfaceSample> samples = run_schedule(surface, ss.u0, ss.v0, ss.schedule, start);
    out.param_names = {"u", "v"};
    out.point_dim = surface.homogeneous() ? surface.geometric_dim() - 1 : surface.geometric_dim();
    out.records.reserve(samples.size());
    for (auto& s : samples) {
        DenseVector projected = project_surface_point(surface, s.lifted);
        out.records.push_back({s.index, {s.u, s.v}, std::move(projected), std::move(s.lifted)});
    }
    return out;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

const char* const kCoordNames[] = {"x", "y", "z", "w"};

}

void write_csv(const StreamResult& r, std::ostream& os, bool include_lifted) {
    os << "i";
    for (const auto& p : r.param_names) os << ',' << p;
    for (int c = 0; c < r.point_dim; ++c) os << ',' << kCoordNames[c];
    if (include_lifted && !r.records.empty())
        for (size_t c = 0; c < r.records.front().lifted.size(); ++c) os << ",X" << c;
    os << '\n';
    for (const auto& rec : r.records) {
        os << rec.index;
        for (double p : rec.params) os << ',' << format_double(p);
        for (double x : rec.point) os << ',' << format_double(x);
        if (include_lifted)
            for (double x : rec.lifted) os << ',' << format_double(x);
        os << '\n';
    }
}

void write_json(const StreamResult& r, std::ostream& os, bool include_lifted) {
    json arr = json::array();
    for (const auto& rec : r.records) {
        json item;
        item["i"] = rec.index;
        for (size_t p = 0; p < r.param_names.size(); ++p) item[r.param_names[p]] = rec.params[p];
        item["point"] = rec.point;
        if (include_lifted) item["lifted"] = rec.lifted;
        arr.push_back(std::move(item));
    }
    os << arr.dump(2) << '\n';
}

}  // namespace dyneval

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "dyneval/scene.hpp"
#include "test_support.hpp"

using namespace dyneval;

namespace {

constexpr double kPi = std::numbers::pi;

const char* kBezierScene = R"({
  "kind": "curve",
  "basis": {"bernstein": 2},
  "coefficients": [[0.0, 0.0], [0.5, 1.0], [1.0, 0.0]],
  "run": {"start": 0.0, "step": {"linear": {"a": 0.01, "b": 1.005}}, "count": 40}
})";

std::string helicoid_scene(long count) {
    std::ostringstream os;
    os << R"({
  "kind": "surface",
  "basis": {"mixed": [{"v": {"poly": 1}}, {"tensor": {"u": {"poly": 1}, "v": {"trig": 1.0}}}]},
  "coefficients": [[0,0,0],[0,0,1],[2,0,0],[0,2,0],[1,0,0],[0,1,0]],
  "run": {"start": [0.5, 0.0], "step": {"dv": )"
       << format_double(4.0 * kPi / 200.0) << R"(}, "count": )" << count << "}\n}";
    return os.str();
}

}  // namespace

TEST_CASE("curve scene parses and runs") {
    const Scene scene = parse_scene_text(kBezierScene);
    REQUIRE(scene.is_curve());
    CHECK(scene.curve().basis.dim() == 3);
    const StreamResult r = run_scene(scene);
    CHECK(r.records.size() == 41);
    CHECK(r.param_names == std::vector<std::string>{"t"});
    // strictly decreasing parameter gaps
    for (size_t i = 2; i < r.records.size(); ++i) {
        const double prev = r.records[i - 1].params[0] - r.records[i - 2].params[0];
        const double cur = r.records[i].params[0] - r.records[i - 1].params[0];
        CHECK(cur < prev);
    }
}

TEST_CASE("helicoid scene emits count+1 rows ending at v = 4*pi") {
    const Scene scene = parse_scene_text(helicoid_scene(200));
    REQUIRE(!scene.is_curve());
    const StreamResult r = run_scene(scene);
    REQUIRE(r.records.size() == 201);
    CHECK(r.records.back().params[1] == doctest::Approx(4.0 * kPi).epsilon(1e-12));
    // the (2+u)cos v / sin v / v closed form at u = 0.5
    const auto& last = r.records.back();
    CHECK(last.point[0] == doctest::Approx(2.5 * std::cos(last.params[1])).epsilon(1e-12));
}

TEST_CASE("count 0 emits a single start row") {
    const Scene scene = parse_scene_text(helicoid_scene(0));
    const StreamResult r = run_scene(scene);
    REQUIRE(r.records.size() == 1);
    CHECK(r.records[0].point[0] == doctest::Approx(2.5).epsilon(1e-15));
}

TEST_CASE("named steps and schedule segments") {
    const std::string text = R"({
      "kind": "surface",
      "basis": {"tensor": {"u": {"bernstein": 2}, "v": {"bernstein": 2}}},
      "coefficients": [[0,0],[0,1],[0,2],[1,0],[1,1],[1,2],[2,0],[2,1],[2,2]],
      "run": {
        "start": [0.0, 0.0],
        "steps": {"right": {"du": 0.125}, "up": {"dv": 0.125}},
        "schedule": [{"step": "right", "count": 8}, {"step": "up", "count": 8}]
      }
    })";
    const StreamResult r = run_scene(parse_scene_text(text));
    REQUIRE(r.records.size() == 17);
    CHECK(r.records.back().params[0] == doctest::Approx(1.0));
    CHECK(r.records.back().params[1] == doctest::Approx(1.0));
}

TEST_CASE("parse errors carry location context") {
    CHECK_THROWS_AS(parse_scene_text("{ not json"), SceneError);
    try {
        parse_scene_text("{\n  \"kind\": \"curve\",\n  oops\n}");
    } catch (const SceneError& e) {
        CHECK(std::string(e.what()).find("line") != std::string::npos);
    }
}

TEST_CASE("validation errors name the offending field") {
    const char* bad_count = R"({
      "kind": "curve",
      "basis": {"poly": 1},
      "coefficients": [[0, 0], [1, 1], [2, 2]],
      "run": {"start": 0.0, "step": {"translate": 0.1}, "count": 1}
    })";
    try {
        parse_scene_text(bad_count, "scene.json");
        FAIL("expected SceneError");
    } catch (const SceneError& e) {
        const std::string what = e.what();
        CHECK(what.find("coefficients") != std::string::npos);
        CHECK(what.find("2") != std::string::npos);  // expected count
    }

    CHECK_THROWS_AS(parse_scene_text(R"({"kind": "spline"})"), SceneError);
    CHECK_THROWS_AS(parse_scene_text(R"({
      "kind": "curve",
      "basis": {"poly": 1},
      "coefficients": [[0,0],[1,1]],
      "run": {"start": 0.0, "step": {"warp": 2}, "count": 1}
    })"),
                    SceneError);
}

TEST_CASE("linear step on a transcendental basis is rejected at run time") {
    const char* scene = R"({
      "kind": "curve",
      "basis": {"union": [{"poly": 0}, {"trig": 1.0}]},
      "coefficients": [[0,0],[1,0],[0,1]],
      "run": {"start": 0.0, "step": {"linear": {"a": 0.01, "b": 1.01}}, "count": 5}
    })";
    CHECK_THROWS_AS(run_scene(parse_scene_text(scene)), UnsupportedStepError);
}

TEST_CASE("CSV output round-trips bit-exactly at 17 significant digits") {
    const StreamResult r = run_scene(parse_scene_text(kBezierScene));
    std::ostringstream os;
    write_csv(r, os, /*include_lifted=*/true);

    std::istringstream is(os.str());
    std::string header;
    std::getline(is, header);
    CHECK(header == "i,t,x,y,X0,X1,X2");

    size_t row = 0;
    std::string line;
    while (std::getline(is, line)) {
        REQUIRE(row < r.records.size());
        std::istringstream fields(line);
        std::string field;
        std::getline(fields, field, ',');
        CHECK(std::stol(field) == r.records[row].index);
        std::vector<double> values;
        while (std::getline(fields, field, ',')) values.push_back(std::strtod(field.c_str(), nullptr));
        REQUIRE(values.size() == 1 + r.records[row].point.size() + r.records[row].lifted.size());
        CHECK(values[0] == r.records[row].params[0]);
        for (size_t c = 0; c < r.records[row].point.size(); ++c)
            CHECK(values[1 + c] == r.records[row].point[c]);
        for (size_t c = 0; c < r.records[row].lifted.size(); ++c)
            CHECK(values[3 + c] == r.records[row].lifted[c]);
        ++row;
    }
    CHECK(row == r.records.size());
}

TEST_CASE("JSON output carries index, parameters, and points") {
    const StreamResult r = run_scene(parse_scene_text(helicoid_scene(2)));
    std::ostringstream os;
    write_json(r, os);
    const std::string text = os.str();
    CHECK(text.find("\"u\"") != std::string::npos);
    CHECK(text.find("\"point\"") != std::string::npos);
}

TEST_CASE("homogeneous surface scenes divide by the weight on emit") {
    // x = 2 + sin v, y = 2 cos v, w = 1
    const char* scene = R"({
      "kind": "surface",
      "basis": {"tensor": {"u": {"poly": 0}, "v": {"union": [{"poly": 0}, {"trig": 1.0}]}}},
      "coefficients": [[2,0,1],[0,2,0],[1,0,0]],
      "homogeneous": true,
      "run": {"start": [0.0, 0.0], "step": {"dv": 0.1}, "count": 10}
    })";
    const StreamResult r = run_scene(parse_scene_text(scene));
    CHECK(r.point_dim == 2);
    CHECK(r.records[3].point[1] ==
          doctest::Approx(2.0 * std::cos(r.records[3].params[1])).epsilon(1e-13));

    // w = cos v crosses zero exactly at the last emitted point v = pi/2
    std::ostringstream degenerate;
    degenerate << R"({
      "kind": "surface",
      "basis": {"tensor": {"u": {"poly": 0}, "v": {"union": [{"poly": 0}, {"trig": 1.0}]}}},
      "coefficients": [[1,0,0],[0,0,1],[0,2,0]],
      "homogeneous": true,
      "run": {"start": [0.0, 0.0], "step": {"dv": )"
               << format_double(kPi / 20.0) << R"(}, "count": 10}
    })";
    CHECK_THROWS_AS(run_scene(parse_scene_text(degenerate.str())), ZeroWeightError);
}

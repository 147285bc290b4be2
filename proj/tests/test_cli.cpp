#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string q(const std::string& s) { return "'" + s + "'"; }

int run_cli(const std::string& args) {
    const std::string cmd = std::string(DYNEVAL_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string capture_cli(const std::string& args) {
    const std::string path = "/tmp/dyneval_cli_capture.txt";
    const std::string cmd =
        std::string(DYNEVAL_CLI_PATH) + " " + args + " >" + path + " 2>/dev/null";
    const int rc = std::system(cmd.c_str());
    (void)rc;
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = "/tmp/" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("eval on the shipped helicoid scene emits 201 rows ending at v = 4*pi") {
    const std::string scene = std::string(DYNEVAL_SCENE_DIR) + "/helicoid.json";
    const std::string out = capture_cli("eval " + q(scene));
    const auto lines = lines_of(out);
    REQUIRE(lines.size() == 202);  // header + 201 records
    CHECK(lines.front() == "i,u,v,x,y,z");
    std::istringstream last(lines.back());
    std::string field;
    std::getline(last, field, ',');
    CHECK(field == "200");
    std::getline(last, field, ',');  // u
    std::getline(last, field, ',');  // v
    CHECK(std::strtod(field.c_str(), nullptr) ==
          doctest::Approx(4.0 * std::numbers::pi).epsilon(1e-12));
}

TEST_CASE("exit code 0 on success") {
    const std::string scene = std::string(DYNEVAL_SCENE_DIR) + "/bezier8.json";
    CHECK(run_cli("eval " + q(scene) + " -o /tmp/dyneval_bezier_out.csv") == 0);
}

TEST_CASE("exit code 2 on parse and validation failures") {
    CHECK(run_cli("eval /tmp/definitely_missing_scene.json") == 2);
    const std::string bad = write_temp("dyneval_bad_scene.json", "{ broken");
    CHECK(run_cli("eval " + q(bad)) == 2);
    const std::string wrong = write_temp("dyneval_wrong_counts.json", R"({
      "kind": "curve",
      "basis": {"poly": 2},
      "coefficients": [[0, 0], [1, 1]],
      "run": {"start": 0.0, "step": {"translate": 0.1}, "count": 3}
    })");
    CHECK(run_cli("eval " + q(wrong)) == 2);
}

TEST_CASE("exit code 3 on numeric failure, naming the error") {
    const std::string singular = write_temp("dyneval_singular_scene.json", R"({
      "kind": "curve",
      "basis": {"poly": 1},
      "coefficients": [[0.0, 0.0], [0.0, 0.0]],
      "run": {"start": 0.0, "step": {"translate": 0.1}, "count": 3}
    })");
    CHECK(run_cli("eval " + q(singular)) == 3);

    const std::string path = "/tmp/dyneval_cli_err.txt";
    const std::string cmd = std::string(DYNEVAL_CLI_PATH) + " eval " + q(singular) + " 2>" + path +
                            " >/dev/null";
    const int rc = std::system(cmd.c_str());
    (void)rc;
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    CHECK(os.str().find("LiftingError") != std::string::npos);
}

TEST_CASE("bezier scene gives strictly decreasing parameter gaps") {
    const std::string scene = std::string(DYNEVAL_SCENE_DIR) + "/bezier8.json";
    const std::string out = capture_cli("eval " + q(scene));
    const auto lines = lines_of(out);
    REQUIRE(lines.size() > 4);
    std::vector<double> ts;
    for (size_t i = 1; i < lines.size(); ++i) {
        std::istringstream fields(lines[i]);
        std::string field;
        std::getline(fields, field, ',');
        std::getline(fields, field, ',');
        ts.push_back(std::strtod(field.c_str(), nullptr));
    }
    for (size_t i = 2; i < ts.size(); ++i)
        CHECK(ts[i] - ts[i - 1] < ts[i - 1] - ts[i - 2]);
}

TEST_CASE("example ex1 reports deviations for both methods") {
    const std::string basis_out = capture_cli("example ex1 --points 2000 --method basis");
    CHECK(basis_out.find("\"max_deviation\"") != std::string::npos);
    const auto pos = basis_out.find("\"max_deviation\": ");
    const double dev = std::strtod(basis_out.c_str() + pos + 17, nullptr);
    CHECK(dev <= 1.5e-11);

    const std::string taylor_out = capture_cli("example ex1 --points 10 --method taylor");
    const auto tpos = taylor_out.find("\"max_deviation\": ");
    const double tdev = std::strtod(taylor_out.c_str() + tpos + 17, nullptr);
    CHECK(tdev >= 1.0);
    CHECK(tdev <= 1e3);
}

TEST_CASE("example ex5 prints the closure distance") {
    const std::string out = capture_cli("example ex5");
    const auto pos = out.find("\"closure_distance\": ");
    REQUIRE(pos != std::string::npos);
    const double closure = std::strtod(out.c_str() + pos + 20, nullptr);
    CHECK(closure <= 1e-10);
}

TEST_CASE("table2 columns behave as published") {
    const std::string out = capture_cli("table2 --csv");
    const auto lines = lines_of(out);
    REQUIRE(lines.size() == 9);
    CHECK(lines[0] == "points,basis_transformation,taylor_s6");
    double taylor10 = 0.0, taylor100 = 0.0, taylor1000 = 0.0;
    for (size_t i = 1; i < lines.size(); ++i) {
        std::istringstream fields(lines[i]);
        std::string m, basis, taylor;
        std::getline(fields, m, ',');
        std::getline(fields, basis, ',');
        std::getline(fields, taylor, ',');
        CHECK(std::strtod(basis.c_str(), nullptr) <= 1e-10);
        if (m == "10") taylor10 = std::strtod(taylor.c_str(), nullptr);
        if (m == "100") taylor100 = std::strtod(taylor.c_str(), nullptr);
        if (m == "1000") taylor1000 = std::strtod(taylor.c_str(), nullptr);
    }
    CHECK(taylor100 >= 1e-6);
    CHECK(taylor100 <= 1e-4);
    CHECK(taylor10 > taylor100);
    CHECK(taylor100 > taylor1000);
}

TEST_CASE("bench reports both throughputs") {
    const std::string scene = std::string(DYNEVAL_SCENE_DIR) + "/bezier8.json";
    const std::string out = capture_cli("bench " + q(scene) + " --reps 1");
    CHECK(out.find("\"dynamic_points_per_second\"") != std::string::npos);
    CHECK(out.find("\"oracle_points_per_second\"") != std::string::npos);
    CHECK(out.find("\"matrix_build_ms\"") != std::string::npos);
    CHECK(out.find("\"repetitions\": 1") != std::string::npos);
}

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "delpezzo/cli.hpp"
#include "delpezzo/json_io.hpp"

using namespace delpezzo;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

/// A scratch file removed when the guard goes out of scope.
class TempFile {
public:
    TempFile(const std::string& name, const std::string& contents)
        : path_(std::filesystem::temp_directory_path() / ("delpezzo_test_" + name)) {
        std::ofstream(path_) << contents;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    std::string path() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

const char* kTwoOnFiber = R"({"n": 3, "points": [{"loc": "fresh"}, {"loc": "same_fiber", "ref": 1}]})";
const char* kTwoOnFiberBoundary = R"({"boundary": [
    {"coeff": "2/5", "curve": {"alpha": 1, "beta": -3, "mults": [0, 0]}},
    {"coeff": "1/5", "curve": {"alpha": 0, "beta": 1, "mults": [1, 1]}}]})";

}  // namespace

TEST_CASE("bound prints the value first") {
    auto r = run({"bound", "main", "--epsilon", "1/3"});
    CHECK(r.code == kExitOk);
    CHECK(first_line(r.out) == "32/3");
    r = run({"bound", "main", "--epsilon", "1/2"});
    CHECK(first_line(r.out) == "9");
    r = run({"bound", "rho3", "--epsilon", "1/3"});
    CHECK(first_line(r.out) == "29/3");
    r = run({"bound", "rho4", "--epsilon", "3/5"});
    CHECK(first_line(r.out) == "32/5");
}

TEST_CASE("json output parses and re-serializes identically") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"--json", "bound", "main", "--epsilon", "1/3"},
             {"bound", "rho4", "--epsilon", "1/10", "--json"},
             {"extremal", "--epsilon", "1/2", "--json"},
             {"verify", "thm71", "--n", "3", "--amax", "5", "--json"}}) {
        const auto r = run(args);
        REQUIRE(r.code == kExitOk);
        const Json j = Json::parse(r.out);
        CHECK(j.dump(2) + "\n" == r.out);
    }
    const Json b = Json::parse(run({"bound", "main", "--epsilon", "1/3", "--json"}).out);
    CHECK(b.at("value") == "32/3");
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"bound", "main", "--epsilon", "1/x"}).code == kExitUsage);
    const auto r = run({"bound", "main", "--epsilon", "1/x"});
    CHECK(r.err.find("malformed rational '1/x'") != std::string::npos);
    CHECK(run({"bound", "main", "--epsilon", "0"}).code == kExitUsage);
    CHECK(run({"bound", "main", "--epsilon", "3/2"}).code == kExitUsage);
    CHECK(run({"bound", "huge", "--epsilon", "1/2"}).code == kExitUsage);
    CHECK(run({"optimize", "--case", "Rho9", "--epsilon", "1/2"}).code == kExitUsage);
    CHECK(run({"volume", "--config", "/nonexistent/x.json", "--boundary", "/nonexistent/y.json"}).code ==
          kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("volume and lc-check read configuration files") {
    const TempFile cfg("cfg.json", kTwoOnFiber);
    const TempFile bnd("bnd.json", kTwoOnFiberBoundary);
    auto r = run({"volume", "--config", cfg.path(), "--boundary", bnd.path(), "--json"});
    REQUIRE(r.code == kExitOk);
    const Json j = Json::parse(r.out);
    CHECK(j.at("volume") == "32/5");
    CHECK(j.at("nef_and_big").at("status") == "CertifiedYes");

    r = run({"lc-check", "--config", cfg.path(), "--boundary", bnd.path(), "--epsilon", "3/5"});
    CHECK(r.code == kExitOk);
    r = run({"lc-check", "--config", cfg.path(), "--boundary", bnd.path(), "--epsilon", "4/5"});
    CHECK(r.code == kExitVerificationFailed);
    CHECK(run({"lc-check", "--config", cfg.path(), "--boundary", bnd.path(), "--epsilon", "1/2", "--depth", "9"})
              .code == kExitUsage);

    const TempFile bad("bad.json", "{not json");
    CHECK(run({"volume", "--config", bad.path(), "--boundary", bnd.path()}).code == kExitUsage);
}

TEST_CASE("optimize honors DELPEZZO_GRID_STEP") {
    ::setenv("DELPEZZO_GRID_STEP", "1/4", 1);
    auto r = run({"optimize", "--case", "Fn-Case2", "--epsilon", "1/3", "--n", "6", "--json"});
    REQUIRE(r.code == kExitOk);
    CHECK(Json::parse(r.out).at("step") == "1/4");
    r = run({"optimize", "--case", "Fn-Case2", "--epsilon", "1/3", "--n", "6", "--step", "1/8", "--json"});
    CHECK(Json::parse(r.out).at("step") == "1/8");
    ::setenv("DELPEZZO_GRID_STEP", "-1", 1);
    CHECK(run({"optimize", "--case", "Fn-Case2", "--epsilon", "1/3", "--n", "6"}).code == kExitUsage);
    ::unsetenv("DELPEZZO_GRID_STEP");
}

TEST_CASE("verify subcommands") {
    CHECK(run({"verify", "thm72", "--n", "3", "--k", "8", "--amax", "10", "--bmax", "10"}).code == kExitOk);
    CHECK(run({"verify", "ex74", "--n", "1", "--k", "7"}).code == kExitOk);
    CHECK(run({"verify", "thm71", "--n", "1"}).code == kExitUsage);
}

TEST_CASE("divisor classes round-trip through json") {
    const SurfaceModel s = SurfaceModel::hirzebruch(3, 2);
    const DivisorClass d = Rational(2, 3) * DivisorClass::h(s) - Rational(1, 5) * DivisorClass::e(s, 2);
    const Json j = to_json(d);
    CHECK(divisor_from_json(j) == d);
    CHECK(divisor_from_json(Json::parse(j.dump())) == d);
    const BlowupConfig cfg = config_from_json(Json::parse(kTwoOnFiber));
    CHECK(config_from_json(to_json(cfg)) == cfg);
    const auto terms = boundary_from_json(Json::parse(kTwoOnFiberBoundary));
    CHECK(boundary_to_json(boundary_from_json(boundary_to_json(terms))) == boundary_to_json(terms));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "sliclab/runner.hpp"

using namespace slic;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), {});
}

const char* kCrackConfig = R"(
[experiment]
kind = crack1d
seed = 7
[law]
label = saturating
lambda = 4.0
alpha = 2.0
[kernel]
label = bump
[scales]
n = 8,16,32,64
[tolerances]
residual = 5e-3
)";

} // namespace

TEST_CASE("config parser") {
    auto cfg = Config::parse_string("[a]\nx = 1.5\nlist = 8, 16,32\n# comment\ny=hello\n");
    CHECK(cfg.get_number("a.x") == doctest::Approx(1.5));
    CHECK(cfg.get("a.y") == "hello");
    CHECK(cfg.get_int_list("a.list") == std::vector<int>{8, 16, 32});
    CHECK(cfg.get_or("a.missing", "d") == "d");
    CHECK(cfg.get_number_or("a.missing", 2.5) == 2.5);
    CHECK_THROWS(cfg.get("a.missing"));
    CHECK_THROWS(Config::parse_string("novalue\n"));
    CHECK_THROWS(Config::parse_string("[bad\nx=1\n"));
    CHECK_THROWS(cfg.get_number("a.y"));
}

TEST_CASE("crack experiment produces a complete, passing manifest") {
    const fs::path dir = fs::temp_directory_path() / "sliclab_test_crack";
    fs::remove_all(dir);
    auto manifest = run_experiment(Config::parse_string(kCrackConfig), dir.string());
    CHECK(manifest.all_ok());
    CHECK(manifest.kind == "crack1d");
    for (const auto& name : required_checks("crack1d")) {
        bool found = false;
        int count = 0;
        for (const auto& c : manifest.checks)
            if (c.name == name) {
                found = true;
                ++count;
            }
        CHECK(found);
        CHECK(count == 1);
    }
    for (const auto& a : {"fan_profile.csv", "audit_table.csv", "residual.csv",
                          "residual.json", "verdict.json", "manifest.json"})
        CHECK(fs::exists(dir / a));

    // determinism: identical config gives byte-identical artifacts
    const fs::path dir2 = fs::temp_directory_path() / "sliclab_test_crack2";
    fs::remove_all(dir2);
    run_experiment(Config::parse_string(kCrackConfig), dir2.string());
    for (const auto& a : manifest.artifacts)
        CHECK(slurp(dir / a) == slurp(dir2 / a));

    // plotdata
    auto files = emit_plot_data((dir / "manifest.json").string());
    CHECK(!files.empty());
    for (const auto& f : files) CHECK(fs::exists(dir / f));
    CHECK(fs::exists(dir / "plot_fan_displacement.csv"));
    CHECK(fs::exists(dir / "plot_energy_vs_t.csv"));
}

TEST_CASE("vacuum experiment manifest") {
    const char* cfg = R"(
[experiment]
kind = vacuum
[fan]
u_bar = 1.0
v_bar = 4.0
gamma = 2.0
[kernel]
label = bump
[scales]
n = 8,16,32,64,128
[tolerances]
bound_samples = 400
residual = 1e-4
energy_rel = 1e-4
)";
    const fs::path dir = fs::temp_directory_path() / "sliclab_test_vacuum";
    fs::remove_all(dir);
    auto manifest = run_experiment(Config::parse_string(cfg), dir.string());
    CHECK(manifest.all_ok());
    for (const auto& name : required_checks("vacuum")) {
        bool found = false;
        for (const auto& c : manifest.checks) found = found || c.name == name;
        CHECK(found);
    }
    CHECK(fs::exists(dir / "fan.csv"));
    CHECK(fs::exists(dir / "energy.json"));
}

TEST_CASE("unknown kind and missing manifest are errors") {
    CHECK_THROWS(run_experiment(Config::parse_string("[experiment]\nkind = foo\n"), "/tmp/x"));
    CHECK_THROWS(emit_plot_data("/nonexistent/manifest.json"));
    CHECK_THROWS(required_checks("foo"));
}

TEST_CASE("manifest round-trip and empty-artifact error") {
    RunManifest m;
    m.kind = "crack1d";
    m.seed = 3;
    m.config_echo["experiment.kind"] = "crack1d";
    m.checks.push_back({"x", "pass", 1.0, 1.0, ""});
    const fs::path dir = fs::temp_directory_path() / "sliclab_test_manifest";
    fs::create_directories(dir);
    {
        std::ofstream out(dir / "manifest.json", std::ios::binary);
        out << m.to_json();
    }
    auto back = RunManifest::from_json_file((dir / "manifest.json").string());
    CHECK(back.kind == m.kind);
    CHECK(back.checks.size() == 1);
    CHECK(back.artifacts.empty());
    CHECK_THROWS(emit_plot_data((dir / "manifest.json").string()));
}

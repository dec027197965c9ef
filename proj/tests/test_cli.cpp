#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "renorm/cli/config.hpp"
#include "renorm/cli/dispatch.hpp"
#include "renorm/errors.hpp"

using namespace renorm;
namespace fs = std::filesystem;

namespace {

std::string tmpPath(const std::string& name) {
    return (fs::temp_directory_path() / name).string();
}

void writeFile(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::trunc);
    os << content;
}

std::string readFile(const std::string& path) {
    std::ifstream is(path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

const char* kEnergyConfig = R"({
  "domain": {"type": "disk", "radius": 1.0},
  "target": "circle",
  "boundary_data": {"degree": 1},
  "singularities": [{"x": 0.0, "y": 0.0, "degree": 1}],
  "rho_schedule": [0.2, 0.13],
  "h": 0.041666666666666664,
  "mode": "geom",
  "restarts": 1
})";

} // namespace

TEST_CASE("table command emits the expected csv") {
    const std::string out = tmpPath("renorm_table.csv");
    CHECK(cli::dispatch({"table", "--manifold", "tetrahedral", "--format", "csv", "--out",
                         out}) == 0);
    const std::string csv = readFile(out);
    CHECK(csv.rfind("name,description,conjugates,lambda_over_pi,decompositions,esg_over_pi",
                    0) == 0);
    // 7 classes plus the header line.
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 8);
    CHECK(csv.find("γ_w,360° rotation,1,2,γ_+ γ_+ γ_+ / γ_- γ_- γ_-,") != std::string::npos);
    fs::remove(out);
}

TEST_CASE("resolve command reports compatibility") {
    const std::string out = tmpPath("renorm_resolve.txt");
    CHECK(cli::dispatch({"resolve", "--manifold", "circle", "--outer", "2", "--sing", "1",
                         "--sing", "1", "--out", out}) == 0);
    CHECK(readFile(out).rfind("compatible", 0) == 0);
    CHECK(cli::dispatch({"resolve", "--manifold", "octahedral", "--outer", "w", "--sing", "v",
                         "--out", out}) == 0);
    CHECK(readFile(out).rfind("incompatible", 0) == 0);
    fs::remove(out);
}

TEST_CASE("energy command is deterministic byte for byte") {
    const std::string cfg = tmpPath("renorm_energy.json");
    const std::string out1 = tmpPath("renorm_energy1.csv");
    const std::string out2 = tmpPath("renorm_energy2.csv");
    writeFile(cfg, kEnergyConfig);
    CHECK(cli::dispatch({"energy", "--config", cfg, "--out", out1, "--threads", "1"}) == 0);
    CHECK(cli::dispatch({"energy", "--config", cfg, "--out", out2, "--threads", "1"}) == 0);
    const std::string a = readFile(out1);
    CHECK(a == readFile(out2));
    CHECK(a.rfind("rho,energy", 0) == 0);
    CHECK(a.find("A,W,residual,expected_slope,slope_warning") != std::string::npos);
    fs::remove(cfg);
    fs::remove(out1);
    fs::remove(out2);
}

TEST_CASE("energy sweep emits one row per position") {
    const std::string cfg = tmpPath("renorm_sweep.json");
    const std::string out = tmpPath("renorm_sweep.csv");
    writeFile(cfg, R"({
      "domain": {"type": "disk"},
      "target": "circle",
      "boundary_data": {"degree": 1},
      "singularities": [{"x": 0.0, "y": 0.0, "degree": 1}],
      "rho_schedule": [0.2, 0.13],
      "h": 0.041666666666666664,
      "restarts": 1,
      "sweep": {"axis": [1, 0], "range": [-0.2, 0.2], "steps": 3}
    })");
    CHECK(cli::dispatch({"energy", "--config", cfg, "--out", out}) == 0);
    const std::string csv = readFile(out);
    CHECK(csv.rfind("a_x,a_y,W", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
    fs::remove(cfg);
    fs::remove(out);
}

TEST_CASE("invalid configurations exit with code 1") {
    const std::string cfg = tmpPath("renorm_bad.json");
    writeFile(cfg, R"({"domain": {"type": "disk"}, "target": "circle",
                       "boundary_data": {"degree": 1}, "h": 0.03,
                       "singularities": [{"x": 0, "y": 0, "degree": 1}],
                       "unexpected_field": 1})");
    CHECK(cli::dispatch({"energy", "--config", cfg}) == 1);
    CHECK(cli::dispatch({"nonsense"}) == 1);
    CHECK(cli::dispatch({"table", "--manifold", "not_a_manifold"}) == 1);
    fs::remove(cfg);
}

TEST_CASE("incompatible topology exits with code 2") {
    const std::string cfg = tmpPath("renorm_incompat.json");
    writeFile(cfg, R"({
      "domain": {"type": "disk"},
      "target": "circle",
      "boundary_data": {"degree": 1},
      "singularities": [{"x": 0.0, "y": 0.0, "degree": 2}],
      "rho_schedule": [0.2, 0.13],
      "h": 0.041666666666666664
    })");
    CHECK(cli::dispatch({"energy", "--config", cfg}) == 2);
    fs::remove(cfg);
}

TEST_CASE("balls command samples the growth trace") {
    const std::string cfg = tmpPath("renorm_balls.json");
    const std::string out = tmpPath("renorm_balls.csv");
    writeFile(cfg, R"({"balls": [{"cx": 0, "cy": 0, "r": 1}, {"cx": 4, "cy": 0, "r": 1}],
                       "t_max": 1.5, "samples_per_interval": 4})");
    CHECK(cli::dispatch({"balls", "--config", cfg, "--out", out}) == 0);
    const std::string csv = readFile(out);
    CHECK(csv.rfind("t,ball_index,cx,cy,r", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') >= 8);
    fs::remove(cfg);
    fs::remove(out);
}

TEST_CASE("balls command accepts a bare list of balls") {
    const std::string cfg = tmpPath("renorm_balls_bare.json");
    const std::string out = tmpPath("renorm_balls_bare.csv");
    writeFile(cfg, R"([{"cx": 0, "cy": 0, "r": 0.5}, {"cx": 0.6, "cy": 0, "r": 0.5}])");
    CHECK(cli::dispatch({"balls", "--config", cfg, "--out", out}) == 0);
    CHECK(readFile(out).rfind("t,ball_index,cx,cy,r", 0) == 0);
    fs::remove(cfg);
    fs::remove(out);
}

TEST_CASE("table json format is well-formed") {
    const std::string out = tmpPath("renorm_table.json");
    CHECK(cli::dispatch({"table", "--manifold", "rp2", "--format", "json", "--out", out}) == 0);
    const std::string text = readFile(out);
    CHECK(text.find("\"manifold\": \"rp2\"") != std::string::npos);
    CHECK(text.find("\"esg_over_pi\": 0.25") != std::string::npos);
    fs::remove(out);
}

TEST_CASE("synharmony command prints the per-T table") {
    const std::string cfg = tmpPath("renorm_syn.json");
    const std::string out = tmpPath("renorm_syn.csv");
    writeFile(cfg, R"({"target": "circle", "gamma": {"degree": 1},
                       "beta": {"degree": 1, "phase": 0.3},
                       "t_list": [0.5, 1.0], "n_theta": 48})");
    CHECK(cli::dispatch({"synharmony", "--config", cfg, "--out", out}) == 0);
    const std::string csv = readFile(out);
    CHECK(csv.rfind("T,excess", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
    fs::remove(cfg);
    fs::remove(out);
}

TEST_CASE("strict parsers reject malformed loop fields") {
    CHECK_THROWS_AS(cli::parseEnergyConfig(R"({"domain": {"type": "disk"},
        "target": "circle", "boundary_data": {"degree": 1, "degree2": 1},
        "singularities": [{"x": 0, "y": 0, "degree": 1}], "h": 0.05})"),
                    ConfigInvalid);
    CHECK_THROWS_AS(cli::parseBallsConfig(R"({"balls": [{"cx": 0, "cy": 0, "r": -1}]})"),
                    ConfigInvalid);
    CHECK_THROWS_AS(cli::parseSynharmonyConfig(R"({"target": "circle",
        "gamma": {"degree": 1}})"),
                    ConfigInvalid);
}

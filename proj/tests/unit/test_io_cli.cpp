#include <doctest.h>

#include <algorithm>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "ncg/cli.hpp"
#include "ncg/random.hpp"

using namespace ncg;
namespace fs = std::filesystem;

namespace {

int run(std::vector<std::string> args, std::string* err_text = nullptr) {
  args.insert(args.begin(), "ncg-ymh");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int rc = run_cli(int(argv.size()), argv.data(), out, err);
  if (err_text) *err_text = err.str();
  return rc;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("matrix json round trip is bit exact") {
    Rng rng(5);
    Mat m = rng.ginibre(3, 4);
    m(0, 0) = cplx(-0.0, std::numeric_limits<double>::denorm_min());
    m(0, 1) = cplx(std::numeric_limits<double>::max(), 1.0 / 3.0);
    m(2, 3) = cplx(0.1, -1e-300);
    const Mat back = matrix_from_json(json::parse(matrix_to_json(m).dump()));
    REQUIRE(back.rows() == 3);
    REQUIRE(back.cols() == 4);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) {
        CHECK(std::memcmp(&back(i, j), &m(i, j), sizeof(cplx)) == 0);
      }
    CHECK(matrix_to_json(m)["data"][1][0].get<double>() == m(0, 1).real());  // row-major
  }

  TEST_CASE("malformed matrices are config errors") {
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"rows":2,"cols":2,"data":[[1,0]]})")),
                    ConfigError);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"rows":1,"cols":1,"data":[[1]]})")),
                    ConfigError);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"cols":1})")), ConfigError);
  }

  TEST_CASE("config parsing") {
    const RunConfig c = parse_config(json::parse(
        R"({"seed": 9, "signatures": "all", "geometry": {"p": 2, "q": 2, "N": 3, "n": 1},
            "poly": [0, 2, 0, 1], "sampler": {"steps": 10, "step_sizes": {"L": 0.3}}})"));
    CHECK(c.seed == 9);
    CHECK(c.all_signatures);
    CHECK(c.p == 2);
    CHECK(c.N == 3);
    CHECK(c.poly.a(2) == 2.0);
    CHECK(c.sampler.steps == 10);
    CHECK(c.sampler.step.L == 0.3);
    CHECK(c.steps_given);
    CHECK_THROWS_AS(parse_config(json::parse(R"({"geometry": {"p": 1, "q": 4}})")), NonFourDimensional);
    CHECK_THROWS_AS(parse_config(json::parse(R"({"geometry": {"N": "two"}})")), ConfigError);
    CHECK_THROWS_AS(parse_config(json::parse(R"({"fields": {"source": "file", "path": "/nonexistent"}})")),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(json::parse(R"({"signatures": "some"})")), ConfigError);
  }

  TEST_CASE("fields written to a file load back") {
    RunConfig c = parse_config(json::object());
    const Inputs in = build_inputs(c, build_signature(0, 4));
    const fs::path p = fs::temp_directory_path() / "ncg_fields_roundtrip.json";
    write_text_file(p.string(), fields_to_json(in.triple.fuzzy, in.triple.finite, in.fluct).dump());
    c.fields_source = "file";
    c.fields_path = p.string();
    c.df_source = "zero";
    const Inputs back = build_inputs(c, build_signature(0, 4));
    CHECK(max_abs(back.triple.finite.D_F - in.triple.finite.D_F) == 0.0);
    CHECK(max_abs(back.fluct.phi - in.fluct.phi) == 0.0);
    for (int mu = 0; mu < 4; ++mu) CHECK(max_abs(back.triple.fuzzy.K[mu] - in.triple.fuzzy.K[mu]) == 0.0);
    fs::remove(p);
  }
}

TEST_SUITE("cli") {
  TEST_CASE("exit codes") {
    const fs::path dir = fs::temp_directory_path() / "ncg_cli_unit";
    fs::remove_all(dir);
    fs::create_directories(dir);
    CHECK(run({"verify", "--out", (dir / "v").string()}) == 0);
    const json rep = read_json_file((dir / "v" / "report.json").string());
    CHECK(rep["pass"].get<bool>());
    CHECK(rep["sections"].size() == 1);

    std::string err;
    write_text_file((dir / "bad.json").string(), R"({"geometry": {"p": 3, "q": 3}})");
    CHECK(run({"verify", "--config", (dir / "bad.json").string()}, &err) == 2);
    CHECK(err.find("NonFourDimensional") != std::string::npos);
    CHECK(run({"verify", "--signatures", "many"}) == 2);
    CHECK(run({"frobnicate"}) == 2);
    CHECK(run({"--help"}) == 0);

    write_text_file((dir / "lor.json").string(), R"({"geometry": {"p": 1, "q": 3}})");
    CHECK(run({"action", "--config", (dir / "lor.json").string(), "--out", (dir / "a").string()}) == 1);
    CHECK(run({"sample", "--config", (dir / "lor.json").string(), "--out", (dir / "s").string()}) == 2);
    fs::remove_all(dir);
  }

  TEST_CASE("spectrum, action and sample outputs") {
    const fs::path dir = fs::temp_directory_path() / "ncg_cli_outputs";
    fs::remove_all(dir);
    fs::create_directories(dir);
    write_text_file((dir / "zero.json").string(),
                    R"({"fields": {"source": "zero"}, "geometry": {"D_F": {"source": "zero"}}})");
    CHECK(run({"spectrum", "--config", (dir / "zero.json").string(), "--out", (dir / "z").string()}) == 0);
    const std::string csv = slurp(dir / "z" / "spectrum.csv");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 65);
    CHECK(run({"action", "--config", (dir / "zero.json").string(), "--out", (dir / "za").string()}) == 0);
    const json za = read_json_file((dir / "za" / "action.json").string());
    for (const char* k : {"s_ym", "s_h", "s_gh", "s_theta", "total_closed", "total_direct"})
      CHECK(za[k].get<double>() == 0.0);

    CHECK(run({"action", "--seed", "4", "--out", (dir / "ra").string()}) == 0);
    const json ra = read_json_file((dir / "ra" / "action.json").string());
    CHECK(ra["closed_matches_direct"].get<bool>());
    write_text_file((dir / "neg.json").string(), R"({"poly": [0, 1, 0, -1]})");
    CHECK(run({"action", "--config", (dir / "neg.json").string(), "--out", (dir / "na").string()}) == 0);
    CHECK(read_json_file((dir / "na" / "action.json").string())["positivity"].is_null());

    write_text_file((dir / "empty.json").string(), R"({"sampler": {"steps": 20, "burn_in": 20}})");
    CHECK(run({"sample", "--config", (dir / "empty.json").string(), "--out", (dir / "e").string()}) == 0);
    CHECK(slurp(dir / "e" / "samples.csv") == "step,S_total,S_ym,S_h,S_gh,S_theta,acceptance\n");

    write_text_file((dir / "short.json").string(), R"({"sampler": {"steps": 150, "burn_in": 50}})");
    for (const char* o : {"s1", "s2"})
      CHECK(run({"sample", "--config", (dir / "short.json").string(), "--seed", "5", "--out",
                 (dir / o).string()}) == 0);
    CHECK(slurp(dir / "s1" / "samples.csv") == slurp(dir / "s2" / "samples.csv"));
    CHECK(slurp(dir / "s1" / "summary.json") == slurp(dir / "s2" / "summary.json"));
    fs::remove_all(dir);
  }

  TEST_CASE("worker limit reads the environment") {
    setenv("NCG_YMH_THREADS", "3", 1);
    CHECK(worker_limit() == 3);
    setenv("NCG_YMH_THREADS", "zero", 1);
    CHECK(worker_limit() >= 1);
    unsetenv("NCG_YMH_THREADS");
  }
}

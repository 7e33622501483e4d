#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "config.hpp"
#include "frechet/error.hpp"
#include "helpers.hpp"

using namespace frechet;
using namespace frechet::cli;

namespace {

json minimal_converge_config() {
  return json::parse(R"({
    "command": "mean-converge",
    "space": {"kind": "euclidean", "dimension": 1},
    "loss": {"kind": "squared-norm"},
    "sampler": {"kind": "uniform-scalar", "lo": 0.0, "hi": 1.0, "seed": 7},
    "n_grid": [8, 16],
    "seeds": [1, 2],
    "mc_m": 500
  })");
}

void expect_config_error(const json& j, const std::string& fragment) {
  try {
    config_from_json(j);
    FAIL("expected config error for " << fragment);
  } catch (const Error& e) {
    CHECK(e.code() == errc::config_error);
    CHECK(std::string(e.what()).find(fragment) != std::string::npos);
  }
}

}  // namespace

TEST_SUITE_BEGIN("config");

TEST_CASE("a complete config parses into the expected fields") {
  ExperimentConfig config = config_from_json(minimal_converge_config());
  CHECK(config.command == "mean-converge");
  REQUIRE(config.space.has_value());
  REQUIRE(config.sampler.has_value());
  CHECK(config.n_grid == std::vector<std::size_t>{8, 16});
  CHECK(config.seeds == std::vector<std::uint64_t>{1, 2});
  CHECK(config.mc_m == 500);
  CHECK(config.jobs == 1);
  CHECK_FALSE(config.timings);
}

TEST_CASE("configs round-trip through serialization") {
  json original = minimal_converge_config();
  original["out"] = "/tmp/frechet_test_roundtrip.csv";
  original["jobs"] = 2;
  original["timings"] = true;

  ExperimentConfig config = config_from_json(original);
  json serialized = to_json(config);
  ExperimentConfig reparsed = config_from_json(serialized);
  CHECK(to_json(reparsed) == serialized);
  CHECK(serialized["sampler"] == original["sampler"]);  // raw subobjects survive intact
  CHECK(serialized["out"] == "/tmp/frechet_test_roundtrip.csv");
  CHECK(serialized["jobs"] == 2);
  CHECK(serialized["timings"] == true);
}

TEST_CASE("unknown keys are rejected wherever they appear") {
  json top = minimal_converge_config();
  top["surprise"] = 1;
  expect_config_error(top, "surprise");

  json in_space = minimal_converge_config();
  in_space["space"]["extra"] = true;
  expect_config_error(in_space, "extra");

  json in_loss = minimal_converge_config();
  in_loss["loss"]["fudge"] = 2.0;
  expect_config_error(in_loss, "fudge");

  json in_sampler = minimal_converge_config();
  in_sampler["sampler"]["scale"] = 2.0;
  expect_config_error(in_sampler, "scale");
}

TEST_CASE("command field is mandatory and must be known") {
  json no_command = minimal_converge_config();
  no_command.erase("command");
  expect_config_error(no_command, "command");

  json bad_command = minimal_converge_config();
  bad_command["command"] = "make-coffee";
  expect_config_error(bad_command, "make-coffee");
}

TEST_CASE("every data-bearing command needs exactly one source") {
  json both = minimal_converge_config();
  both["input_file"] = "/tmp/some.jsonl";
  expect_config_error(both, "exactly one");

  json neither = minimal_converge_config();
  neither.erase("sampler");
  expect_config_error(neither, "exactly one");

  // predict reads everything from files and is exempt.
  json predict = json::parse(R"({
    "command": "predict",
    "estimator_file": "/tmp/est.json",
    "input_file": "/tmp/xs.jsonl"
  })");
  CHECK_NOTHROW(config_from_json(predict));
  predict.erase("input_file");
  CHECK_NOTHROW(config_from_json(predict));
}

TEST_CASE("space builder covers every kind and rejects the rest") {
  CHECK(build_space(json::parse(R"({"kind": "euclidean", "dimension": 3})")) ==
        SpaceDescriptor::euclidean(3));
  CHECK(build_space(json::parse(R"({"kind": "density-grid", "bins": 4, "width": 0.25})")) ==
        SpaceDescriptor::density_grid(4, 0.25));
  CHECK(build_space(json::parse(
            R"({"kind": "density-grid", "bins": 4, "width": 0.25, "metric": "total-variation"})")) ==
        SpaceDescriptor::density_grid(4, 0.25, MetricId::total_variation));
  CHECK(build_space(json::parse(R"({"kind": "spd-matrix", "dimension": 2})")) ==
        SpaceDescriptor::spd_matrix(2));

  CHECK_THROWS_AS(build_space(json::parse(R"({"kind": "hilbert"})")), Error);
  CHECK_THROWS_AS(build_space(json::parse(R"({"kind": "euclidean"})")), Error);
  CHECK_THROWS_AS(
      build_space(json::parse(R"({"kind": "density-grid", "bins": 4, "width": 0.25,
                                  "metric": "chebyshev"})")),
      Error);
}

TEST_CASE("loss builder handles flags and nesting") {
  SpaceDescriptor space = SpaceDescriptor::euclidean(1);
  LossSpec plain = build_loss(json::parse(R"({"kind": "squared-norm"})"), space);
  CHECK_FALSE(plain.satisfies_lr);
  LossSpec bounded =
      build_loss(json::parse(R"({"kind": "squared-norm", "bounded_space": true})"), space);
  CHECK(bounded.satisfies_lr);

  LossSpec trunc = build_loss(
      json::parse(R"({"kind": "truncated", "bound": 1.0, "inner": {"kind": "squared-norm"}})"),
      space);
  CHECK(trunc.kind == LossKind::truncated);
  CHECK(trunc.bound == 1.0);

  CHECK_THROWS_AS(build_loss(json::parse(R"({"kind": "truncated", "bound": 1.0})"), space),
                  Error);
  CHECK_THROWS_AS(build_loss(json::parse(R"({"kind": "hinge"})"), space), Error);
  // Pairing errors surface through the factories.
  CHECK_THROWS_AS(build_loss(json::parse(R"({"kind": "l1-density"})"), space), Error);
}

TEST_CASE("sampler builder covers every kind with defaults for pair links") {
  CHECK(build_sampler_spec(json::parse(R"({"kind": "uniform-scalar", "lo": 0, "hi": 1})")).kind ==
        SamplerKind::uniform_scalar);
  CHECK(build_sampler_spec(json::parse(R"({"kind": "gaussian-vector", "mean": [0, 0],
                                           "sigma": 1})"))
            .kind == SamplerKind::gaussian_vector);
  CHECK(build_sampler_spec(json::parse(R"({"kind": "er-graph-laplacian", "nodes": 4,
                                           "edge_prob": 0.5})"))
            .kind == SamplerKind::er_graph_laplacian);
  CHECK(build_sampler_spec(json::parse(R"({"kind": "finite-scalar", "atoms": [0, 1],
                                           "weights": [0.5, 0.5]})"))
            .kind == SamplerKind::finite_scalar);
  CHECK(build_sampler_spec(
            json::parse(R"({"kind": "point-mass",
                            "point": {"kind": "vector", "data": [1.0]}})"))
            .kind == SamplerKind::point_mass);

  json mixture = json::parse(R"({
    "kind": "histogram-mixture",
    "components": [
      {"kind": "histogram", "width": 0.5, "data": [2.0, 0.0]},
      {"kind": "histogram", "width": 0.5, "data": [0.0, 2.0]}
    ],
    "weights": [0.25, 0.75]
  })");
  CHECK(build_sampler_spec(mixture).kind == SamplerKind::histogram_mixture);

  // Pair sampler with the link and noise left implicit.
  SamplerSpec pair = build_sampler_spec(json::parse(R"({
    "kind": "regression-pair",
    "x": {"kind": "uniform-scalar", "lo": 0, "hi": 1}
  })"));
  CHECK(pair.is_pair());
  CHECK(pair.link.kind == LinkKind::identity);
  CHECK(pair.noise.kind == NoiseKind::none);

  SamplerSpec stepped = build_sampler_spec(json::parse(R"({
    "kind": "regression-pair",
    "x": {"kind": "uniform-scalar", "lo": 0, "hi": 10},
    "link": {"kind": "step", "threshold": 5.0,
             "below": {"kind": "vector", "data": [0.0]},
             "above": {"kind": "vector", "data": [1.0]}},
    "noise": {"kind": "uniform", "half_width": 0.1}
  })"));
  CHECK(stepped.link.kind == LinkKind::step);
  CHECK(stepped.noise.kind == NoiseKind::uniform);

  CHECK_THROWS_AS(build_sampler_spec(json::parse(R"({"kind": "bootstrap"})")), Error);
  CHECK_THROWS_AS(build_sampler_spec(json::parse(R"({"kind": "regression-pair"})")), Error);
}

TEST_CASE("k rule builder") {
  CHECK(build_k_rule(json::parse(R"({"kind": "schedule"})")).kind == KRule::Kind::schedule);
  KRule fixed = build_k_rule(json::parse(R"({"kind": "fixed", "k": 5})"));
  CHECK(fixed.kind == KRule::Kind::fixed);
  CHECK(fixed.value_for(1000) == 5);
  CHECK_THROWS_AS(build_k_rule(json::parse(R"({"kind": "adaptive"})")), Error);
  CHECK_THROWS_AS(build_k_rule(json::parse(R"({"kind": "fixed"})")), Error);
}

TEST_CASE("sampler seed precedence: override, then config, then zero") {
  ExperimentConfig config = config_from_json(minimal_converge_config());
  CHECK(build_sampler(config).seed() == 7);

  config.seed_override = 99;
  CHECK(build_sampler(config).seed() == 99);

  json unseeded = minimal_converge_config();
  unseeded["sampler"].erase("seed");
  CHECK(build_sampler(config_from_json(unseeded)).seed() == 0);
}

TEST_CASE("invalid nested objects fail at parse time, not at run time") {
  json bad_sampler = minimal_converge_config();
  bad_sampler["sampler"] = json::parse(R"({"kind": "uniform-scalar", "lo": 2.0, "hi": 1.0})");
  CHECK_THROWS_AS(config_from_json(bad_sampler), Error);

  json bad_grid = minimal_converge_config();
  bad_grid["n_grid"] = json::array({0, 8});
  expect_config_error(bad_grid, "n_grid");

  json bad_jobs = minimal_converge_config();
  bad_jobs["jobs"] = 0;
  expect_config_error(bad_jobs, "jobs");

  json bad_seeds = minimal_converge_config();
  bad_seeds["seeds"] = json::array({-1});
  expect_config_error(bad_seeds, "seeds");
}

TEST_CASE("loading reports parse position and missing files") {
  std::string path = test::tmp_path("config.json");
  {
    std::ofstream out(path, std::ios::trunc);
    out << "{\n  \"command\": \"mean\",\n  \"oops\n}\n";
  }
  try {
    load_config(path);
    FAIL("expected parse error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::parse_error);
    CHECK(std::string(e.what()).find("line") != std::string::npos);
  }
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_config("/nonexistent/config.json"), Error);

  {
    std::ofstream out(path, std::ios::trunc);
    out << minimal_converge_config().dump(2) << "\n";
  }
  ExperimentConfig config = load_config(path);
  CHECK(config.command == "mean-converge");
  std::remove(path.c_str());
}

TEST_SUITE_END();

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bke/bench.hpp"
#include "bke/fixtures.hpp"

using namespace bke;
using namespace bke::bench;

TEST_CASE("summarize: constant samples") {
  Config cfg;
  SampleSet samples;
  samples[CellKey{1, 80, Scheme::Rsa}] = {5, 5, 5, 5};
  Report report = summarize(samples, cfg);
  const CellStats* c = report.cell(1, 80, Scheme::Rsa);
  REQUIRE(c != nullptr);
  CHECK(c->mean_us == doctest::Approx(5.0));
  CHECK(c->stddev_us == doctest::Approx(0.0));
  CHECK(c->n == 4);
}

TEST_CASE("summarize: ratio arithmetic and sample stddev") {
  Config cfg;
  SampleSet samples;
  samples[CellKey{2, 128, Scheme::Ecc}] = {1000, 1000};
  samples[CellKey{2, 128, Scheme::Rsa}] = {10, 10};
  samples[CellKey{3, 80, Scheme::Rsa}] = {1, 2, 3, 4};
  Report report = summarize(samples, cfg);
  CHECK(report.ratio(2, 128) == doctest::Approx(100.0));
  // sample (n-1) standard deviation of {1,2,3,4}
  CHECK(report.cell(3, 80, Scheme::Rsa)->stddev_us ==
        doctest::Approx(std::sqrt(5.0 / 3.0)));
  // missing counterpart -> NaN ratio, explicit gap markers downstream
  CHECK(std::isnan(report.ratio(3, 80)));
  CHECK(std::isnan(report.ratio(1, 80)));
}

TEST_CASE("renderers keep the full grid shape with gap markers") {
  Config cfg;
  SampleSet samples;
  samples[CellKey{1, 80, Scheme::Rsa}] = {2, 4};
  samples[CellKey{1, 80, Scheme::Ecc}] = {600, 800};
  Report report = summarize(samples, cfg);

  std::string md = report.to_markdown();
  for (const char* label :
       {"## Experiment 1", "## Experiment 2", "## Experiment 3",
        "## Experiment 4", "## Speedup ratio"})
    CHECK(md.find(label) != std::string::npos);
  for (const char* strength : {"| 80 |", "| 112 |", "| 128 |", "| 192 |",
                               "| 256 |"})
    CHECK(md.find(strength) != std::string::npos);
  CHECK(md.find("—") != std::string::npos);  // gap marker

  std::string csv = report.to_csv();
  CHECK(csv.rfind("experiment,strength,scheme,mean_us,stddev_us,n\n", 0) == 0);
  CHECK(csv.find("1,80,rsa,3.000,") != std::string::npos);
  CHECK(csv.find("1,80,ecc,700.000,") != std::string::npos);

  std::string json_text = report.to_json_text();
  CHECK(json_text.find("\"ratio\"") != std::string::npos);
  CHECK(json_text.find("null") != std::string::npos);
}

TEST_CASE("run_experiment returns the configured sample count") {
  Config cfg;
  cfg.iterations = 50;
  cfg.warmup = 2;
  cfg.seed = 3;
  auto rsa_samples = run_experiment(1, 80, Scheme::Rsa, cfg);
  CHECK(rsa_samples.size() == 50);
  for (double s : rsa_samples) CHECK(s >= 0.0);

  auto ecc_samples = run_experiment(2, 80, Scheme::Ecc, cfg);
  CHECK(ecc_samples.size() == 50);

  CHECK_THROWS_AS(run_experiment(5, 80, Scheme::Rsa, cfg),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_experiment(1, 99, Scheme::Rsa, cfg),
                  std::invalid_argument);
  Config bad = cfg;
  bad.iterations = 0;
  CHECK_THROWS_AS(run_experiment(1, 80, Scheme::Rsa, bad),
                  std::invalid_argument);
}

TEST_CASE("single-key and batched expansions cost about the same (RSA)") {
  Config cfg;
  cfg.iterations = 300;
  cfg.warmup = 32;
  cfg.seed = 5;
  auto exp1 = run_experiment(1, 80, Scheme::Rsa, cfg);
  auto exp3 = run_experiment(3, 80, Scheme::Rsa, cfg);
  auto mean = [](const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
  };
  // loose noise bound: per-key time within 20x either way
  double m1 = mean(exp1), m3 = mean(exp3);
  CHECK(m1 < 20 * m3);
  CHECK(m3 < 20 * m1);
}

TEST_CASE("cached caterpillars are valid and sized correctly") {
  for (unsigned bits : {7680u, 15360u}) {
    REQUIRE(fixtures::has_cached_caterpillar(bits));
    const auto& cat = fixtures::cached_caterpillar(bits);
    CHECK(cat.modulus_bits == bits);
    CHECK(bit_length(cat.N) == bits);
    CHECK(cat.N == cat.rho * cat.zeta);
    CHECK((cat.s * cat.S) % cat.phi == 1);
  }
  CHECK_FALSE(fixtures::has_cached_caterpillar(1024));
  CHECK_THROWS_AS(fixtures::cached_caterpillar(1024), std::invalid_argument);
}

TEST_CASE("config json round trip") {
  Config cfg;
  cfg.experiments = {1, 3};
  cfg.strengths = {112};
  cfg.iterations = 17;
  cfg.include_ecies_in_exp2 = true;
  Config back = Config::from_json(cfg.to_json());
  CHECK(back.experiments == cfg.experiments);
  CHECK(back.strengths == cfg.strengths);
  CHECK(back.iterations == 17);
  CHECK(back.include_ecies_in_exp2);
  CHECK(back.batch == 20);
}

TEST_CASE("clock resolution is measurable") {
  double res = clock_resolution_us();
  CHECK(res > 0.0);
  CHECK(res < 1e6);
}

#include "bke/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "bke/curve.hpp"
#include "bke/ecc_bke.hpp"
#include "bke/fixtures.hpp"
#include "bke/rng.hpp"
#include "bke/rsa_bke.hpp"

namespace bke::bench {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_us(Clock::time_point t0, Clock::time_point t1) {
  return std::chrono::duration<double, std::micro>(t1 - t0).count();
}

constexpr int kAllStrengths[] = {80, 112, 128, 192, 256};
constexpr int kAllExperiments[] = {1, 2, 3, 4};

std::string format_fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

rsa::Caterpillar rsa_material(int strength, const Config& config, Rng& rng) {
  unsigned bits = strength_params(strength).rsa_bits;
  if (config.use_cached_keys && fixtures::has_cached_caterpillar(bits))
    return fixtures::cached_caterpillar(bits);
  return rsa::gen_caterpillar(bits, rng);
}

std::vector<double> run_rsa_experiment(int experiment, int strength,
                                       const Config& config) {
  Rng rng(config.seed);
  rsa::Caterpillar cat = rsa_material(strength, config, rng);
  rsa::ExpansionValues ev =
      rsa::gen_expansion_values(cat, config.expansion_prime_bits, rng);
  const Bigint r_bound = Bigint(1) << 64;

  bool butterfly_stage = experiment == 2 || experiment == 4;
  bool batched = experiment == 3 || experiment == 4;
  unsigned per_iter = batched ? config.batch : 1;

  // Butterfly experiments start from prepared cocoon keys.
  std::vector<Bigint> base_J;
  if (butterfly_stage) {
    for (unsigned i = 0; i < per_iter; ++i)
      base_J.push_back(
          rsa::expand_cocoon(cat.S, ev.alpha, rng.range(1, r_bound), i).J);
  }

  std::vector<double> samples;
  samples.reserve(config.iterations);
  Bigint sink = 0;
  for (unsigned iter = 0; iter < config.warmup + config.iterations; ++iter) {
    auto t0 = Clock::now();
    if (butterfly_stage) {
      for (unsigned i = 0; i < per_iter; ++i) {
        auto key =
            rsa::expand_butterfly(base_J[i], ev.beta, rng.range(1, r_bound), i);
        sink += key.H;
      }
    } else {
      for (unsigned i = 0; i < per_iter; ++i) {
        auto key =
            rsa::expand_cocoon(cat.S, ev.alpha, rng.range(1, r_bound), i);
        sink += key.J;
      }
    }
    auto t1 = Clock::now();
    if (iter >= config.warmup)
      samples.push_back(elapsed_us(t0, t1) / per_iter);
  }
  if (sink == 0) throw std::logic_error("bench: impossible zero sink");
  return samples;
}

std::vector<double> run_ecc_experiment(int experiment, int strength,
                                       const Config& config) {
  Rng rng(config.seed);
  const ecc::Curve& curve = ecc::Curve::for_strength(strength);
  ecc::CaterpillarSet set = ecc::gen_caterpillar(curve, rng);

  bool butterfly_stage = experiment == 2 || experiment == 4;
  bool batched = experiment == 3 || experiment == 4;
  unsigned per_iter = batched ? config.batch : 1;

  std::vector<ecc::CocoonPair> base_cocoons;
  if (butterfly_stage) {
    for (unsigned i = 0; i < per_iter; ++i)
      base_cocoons.push_back(
          ecc::expand_cocoon(set.A, set.P, set.ck, set.ek, i, curve));
  }

  std::vector<double> samples;
  samples.reserve(config.iterations);
  uint64_t index = 0;
  Bigint sink = 0;
  for (unsigned iter = 0; iter < config.warmup + config.iterations; ++iter) {
    auto t0 = Clock::now();
    if (butterfly_stage) {
      for (unsigned i = 0; i < per_iter; ++i) {
        Bigint c = rng.range(1, curve.order());
        ecc::Point C = curve.mul_base(c);
        ecc::Point butterfly = curve.add(base_cocoons[i].B, C);
        sink += butterfly.x;
        if (config.include_ecies_in_exp2) {
          auto c_bytes = to_bytes_be(c, curve.coord_bytes());
          auto ct =
              ecc::ecies_encrypt(curve, base_cocoons[i].Q, c_bytes, rng);
          sink += ct.size();
        }
      }
    } else {
      for (unsigned i = 0; i < per_iter; ++i) {
        auto pair =
            ecc::expand_cocoon(set.A, set.P, set.ck, set.ek, index++, curve);
        sink += pair.B.x;
      }
    }
    auto t1 = Clock::now();
    if (iter >= config.warmup)
      samples.push_back(elapsed_us(t0, t1) / per_iter);
  }
  if (sink == 0) throw std::logic_error("bench: impossible zero sink");
  return samples;
}

}  // namespace

double clock_resolution_us() {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 64; ++i) {
    auto t0 = Clock::now();
    auto t1 = t0;
    while (t1 == t0) t1 = Clock::now();
    best = std::min(best, elapsed_us(t0, t1));
  }
  return best;
}

std::vector<double> run_experiment(int experiment, int strength, Scheme scheme,
                                   const Config& config) {
  if (experiment < 1 || experiment > 4)
    throw std::invalid_argument("run_experiment: experiment must be 1..4");
  if (!is_valid_strength(strength))
    throw std::invalid_argument("run_experiment: bad strength");
  if (config.iterations < 1)
    throw std::invalid_argument("run_experiment: iterations must be >= 1");
  return scheme == Scheme::Rsa
             ? run_rsa_experiment(experiment, strength, config)
             : run_ecc_experiment(experiment, strength, config);
}

Report summarize(const SampleSet& samples, const Config& config) {
  Report report;
  report.config = config;
  for (const auto& [key, values] : samples) {
    if (values.empty()) continue;
    double sum = 0;
    for (double v : values) sum += v;
    double mean = sum / static_cast<double>(values.size());
    double var = 0;
    for (double v : values) var += (v - mean) * (v - mean);
    double stddev = values.size() > 1
                        ? std::sqrt(var / static_cast<double>(values.size() - 1))
                        : 0.0;
    report.cells[key.experiment][key.strength][key.scheme] =
        CellStats{mean, stddev, values.size(), true};
  }
  return report;
}

Report run(const Config& config) {
  SampleSet samples;
  for (int experiment : config.experiments) {
    for (int strength : config.strengths) {
      for (Scheme scheme : {Scheme::Rsa, Scheme::Ecc}) {
        samples[CellKey{experiment, strength, scheme}] =
            run_experiment(experiment, strength, scheme, config);
      }
    }
  }
  Report report = summarize(samples, config);
  double res = clock_resolution_us();
  if (res >= 1.0) {
    report.warnings.push_back(
        "timing clock resolution is " + format_fixed(res, 3) +
        " us (coarser than 1 us); single-key samples may be quantized");
  }
  return report;
}

const CellStats* Report::cell(int experiment, int strength,
                              Scheme scheme) const {
  auto e = cells.find(experiment);
  if (e == cells.end()) return nullptr;
  auto s = e->second.find(strength);
  if (s == e->second.end()) return nullptr;
  auto m = s->second.find(scheme);
  if (m == s->second.end() || !m->second.present) return nullptr;
  return &m->second;
}

double Report::ratio(int experiment, int strength) const {
  const CellStats* ecc = cell(experiment, strength, Scheme::Ecc);
  const CellStats* rsa = cell(experiment, strength, Scheme::Rsa);
  if (!ecc || !rsa || rsa->mean_us <= 0.0)
    return std::numeric_limits<double>::quiet_NaN();
  return ecc->mean_us / rsa->mean_us;
}

std::string Report::to_csv() const {
  std::ostringstream out;
  out << "experiment,strength,scheme,mean_us,stddev_us,n\n";
  for (int experiment : kAllExperiments) {
    for (int strength : kAllStrengths) {
      for (Scheme scheme : {Scheme::Rsa, Scheme::Ecc}) {
        const CellStats* c = cell(experiment, strength, scheme);
        if (!c) continue;
        out << experiment << ',' << strength << ',' << scheme_name(scheme)
            << ',' << format_fixed(c->mean_us, 3) << ','
            << format_fixed(c->stddev_us, 3) << ',' << c->n << '\n';
      }
    }
  }
  return out.str();
}

std::string Report::to_json_text() const {
  ordered_json j;
  j["config"] = config.to_json();
  j["warnings"] = warnings;
  ordered_json experiments;
  for (int experiment : kAllExperiments) {
    ordered_json per_strength;
    for (int strength : kAllStrengths) {
      ordered_json cell_json;
      for (Scheme scheme : {Scheme::Rsa, Scheme::Ecc}) {
        const CellStats* c = cell(experiment, strength, scheme);
        if (c) {
          cell_json[scheme_name(scheme)] =
              ordered_json{{"mean_us", c->mean_us},
                           {"stddev_us", c->stddev_us},
                           {"n", c->n}};
        } else {
          cell_json[scheme_name(scheme)] = nullptr;
        }
      }
      double r = ratio(experiment, strength);
      if (std::isnan(r))
        cell_json["ratio"] = nullptr;
      else
        cell_json["ratio"] = r;
      per_strength[std::to_string(strength)] = std::move(cell_json);
    }
    experiments[std::to_string(experiment)] = std::move(per_strength);
  }
  j["experiments"] = std::move(experiments);
  return j.dump(2) + "\n";
}

namespace {

const char* experiment_label(int experiment) {
  switch (experiment) {
    case 1:
      return "caterpillar key to cocoon key, single key";
    case 2:
      return "cocoon key to butterfly key, single key";
    case 3:
      return "caterpillar key to cocoon keys, batch (per-key time)";
    default:
      return "cocoon keys to butterfly keys, batch (per-key time)";
  }
}

}  // namespace

std::string Report::to_markdown() const {
  std::ostringstream out;
  out << "# Key expansion timings\n";
  for (const auto& w : warnings) out << "\n> warning: " << w << "\n";
  for (int experiment : kAllExperiments) {
    out << "\n## Experiment " << experiment << ": "
        << experiment_label(experiment) << "\n\n";
    out << "Mean (stddev) in microseconds.\n\n";
    out << "| Security strength | RSA scheme | ECC scheme (IEEE 1609.2.1) "
           "|\n";
    out << "|---|---|---|\n";
    for (int strength : kAllStrengths) {
      out << "| " << strength << " |";
      for (Scheme scheme : {Scheme::Rsa, Scheme::Ecc}) {
        const CellStats* c = cell(experiment, strength, scheme);
        if (c)
          out << ' ' << format_fixed(c->mean_us, 3) << " ("
              << format_fixed(c->stddev_us, 3) << ") |";
        else
          out << " — |";
      }
      out << '\n';
    }
  }
  out << "\n## Speedup ratio T_E/T_R (ECC mean / RSA mean)\n\n";
  out << "| Security strength | Experiment 1 | Experiment 2 | Experiment 3 "
         "| Experiment 4 |\n";
  out << "|---|---|---|---|---|\n";
  for (int strength : kAllStrengths) {
    out << "| " << strength << " |";
    for (int experiment : kAllExperiments) {
      double r = ratio(experiment, strength);
      if (std::isnan(r))
        out << " — |";
      else
        out << ' ' << format_fixed(r, 1) << " |";
    }
    out << '\n';
  }
  return out.str();
}

std::string Report::ratio_summary() const {
  std::ostringstream out;
  out << "speedup ratio T_E/T_R (ECC mean / RSA mean)\n";
  out << "strength   exp 1        exp 2        exp 3        exp 4\n";
  for (int strength : kAllStrengths) {
    bool any = false;
    for (int experiment : kAllExperiments)
      any = any || !std::isnan(ratio(experiment, strength));
    if (!any) continue;
    char line[160];
    std::string cols;
    for (int experiment : kAllExperiments) {
      double r = ratio(experiment, strength);
      char cbuf[32];
      if (std::isnan(r))
        std::snprintf(cbuf, sizeof(cbuf), "%-13s", "—");
      else
        std::snprintf(cbuf, sizeof(cbuf), "%-13.1f", r);
      cols += cbuf;
    }
    std::snprintf(line, sizeof(line), "%-11d%s", strength, cols.c_str());
    out << line << '\n';
  }
  return out.str();
}

Config Config::from_json(const ordered_json& j) {
  Config c;
  if (j.contains("experiments")) c.experiments = j.at("experiments").get<std::vector<int>>();
  if (j.contains("strengths")) c.strengths = j.at("strengths").get<std::vector<int>>();
  if (j.contains("iterations")) c.iterations = j.at("iterations").get<unsigned>();
  if (j.contains("batch")) c.batch = j.at("batch").get<unsigned>();
  if (j.contains("warmup")) c.warmup = j.at("warmup").get<unsigned>();
  if (j.contains("seed")) c.seed = j.at("seed").get<uint64_t>();
  if (j.contains("include_ecies_in_exp2"))
    c.include_ecies_in_exp2 = j.at("include_ecies_in_exp2").get<bool>();
  if (j.contains("use_cached_keys"))
    c.use_cached_keys = j.at("use_cached_keys").get<bool>();
  if (j.contains("expansion_prime_bits"))
    c.expansion_prime_bits = j.at("expansion_prime_bits").get<unsigned>();
  return c;
}

ordered_json Config::to_json() const {
  return ordered_json{{"experiments", experiments},
                      {"strengths", strengths},
                      {"iterations", iterations},
                      {"batch", batch},
                      {"warmup", warmup},
                      {"seed", seed},
                      {"include_ecies_in_exp2", include_ecies_in_exp2},
                      {"use_cached_keys", use_cached_keys},
                      {"expansion_prime_bits", expansion_prime_bits}};
}

}  // namespace bke::bench

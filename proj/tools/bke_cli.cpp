// Command-line front end: key generation, expansion, flow simulation,
// the small-integer worked-example check, and the benchmark harness.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "bke/bench.hpp"
#include "bke/curve.hpp"
#include "bke/ecc_bke.hpp"
#include "bke/fixtures.hpp"
#include "bke/flow.hpp"
#include "bke/rsa_bke.hpp"
#include "bke/strength.hpp"

namespace {

using bke::Bigint;
using bke::Rng;
using bke::Scheme;
using ordered_json = nlohmann::ordered_json;
namespace fs = std::filesystem;

// Exit classes: 0 success, 1 runtime error, 2 usage error,
// 3 verification failure, 4 privacy violation.
constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerify = 3;
constexpr int kExitPrivacy = 4;

std::string hex_encode(std::span<const uint8_t> bytes) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (uint8_t b : bytes) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 0xf]);
  }
  return s;
}

std::vector<uint8_t> hex_decode(const std::string& hexstr) {
  if (hexstr.size() % 2 != 0)
    throw std::invalid_argument("hex string with odd length");
  std::vector<uint8_t> out(hexstr.size() / 2);
  for (size_t i = 0; i < out.size(); ++i)
    out[i] =
        static_cast<uint8_t>(std::stoi(hexstr.substr(2 * i, 2), nullptr, 16));
  return out;
}

struct CommonOpts {
  std::string out_dir = ".";
  uint64_t seed = 0;
  bool seeded = false;
};

Rng make_rng(const CommonOpts& common) {
  return common.seeded ? Rng(common.seed) : Rng();
}

fs::path resolve_out(const std::string& explicit_path,
                     const CommonOpts& common,
                     const std::string& default_name) {
  if (!explicit_path.empty()) return explicit_path;
  return fs::path(common.out_dir) / default_name;
}

void write_file(const fs::path& path, const std::string& contents) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << contents;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

ordered_json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  ordered_json j;
  in >> j;
  return j;
}

std::string require_str(const ordered_json& j, const char* key) {
  if (!j.contains(key))
    throw std::runtime_error(std::string("key file lacks field '") + key +
                             "' required by this stage");
  return j.at(key).get<std::string>();
}

// ---------------------------------------------------------------- keygen

int cmd_keygen(const CommonOpts& common, const std::string& scheme_str,
               int strength, unsigned prime_bits, bool include_secrets,
               const std::string& out_path) {
  Scheme scheme = bke::scheme_from_name(scheme_str);
  const auto& params = bke::strength_params(strength);
  Rng rng = make_rng(common);

  ordered_json j;
  j["scheme"] = bke::scheme_name(scheme);
  j["strength"] = strength;
  if (scheme == Scheme::Rsa) {
    auto cat = bke::rsa::gen_caterpillar(params.rsa_bits, rng);
    auto ev = bke::rsa::gen_expansion_values(cat, prime_bits, rng);
    j["modulus_bits"] = params.rsa_bits;
    j["N"] = bke::to_hex(cat.N);
    j["S"] = bke::to_hex(cat.S);
    j["expansion_prime_bits"] = prime_bits;
    j["alpha"] = bke::to_hex(ev.alpha);
    j["beta"] = bke::to_hex(ev.beta);
    if (include_secrets) {
      j["secret"] = ordered_json{
          {"rho", bke::to_hex(cat.rho)},   {"zeta", bke::to_hex(cat.zeta)},
          {"phi", bke::to_hex(cat.phi)},   {"s", bke::to_hex(cat.s)},
          {"g", bke::to_hex(ev.g)},        {"h", bke::to_hex(ev.h)},
          {"v", bke::to_hex(ev.v)}};
    }
  } else {
    const auto& curve = bke::ecc::Curve::by_name(params.curve_name);
    auto set = bke::ecc::gen_caterpillar(curve, rng);
    j["curve"] = curve.name();
    j["A"] = curve.point_hex(set.A);
    j["P"] = curve.point_hex(set.P);
    j["ck"] = hex_encode(set.ck);
    j["ek"] = hex_encode(set.ek);
    if (include_secrets) {
      j["secret"] = ordered_json{{"a", bke::to_hex(set.a)},
                                 {"p", bke::to_hex(set.p)}};
    }
  }

  fs::path path = resolve_out(out_path, common,
                              std::string("caterpillar_") +
                                  bke::scheme_name(scheme) + ".json");
  write_file(path, j.dump(2) + "\n");
  std::cout << "wrote " << path.string() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- expand

std::vector<Bigint> parse_randomness(const std::string& csv, unsigned count) {
  std::vector<Bigint> out;
  std::string token;
  std::istringstream in(csv);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    out.emplace_back(token, 10);
    if (out.back() < 1)
      throw std::runtime_error("randomness values must be >= 1");
  }
  if (out.size() != count)
    throw std::runtime_error("--randomness must list exactly --count values");
  return out;
}

int cmd_expand(const CommonOpts& common, const std::string& key_path,
               const std::string& stage, unsigned count,
               const std::string& randomness, const std::string& out_path) {
  ordered_json key = load_json(key_path);
  Scheme scheme = bke::scheme_from_name(require_str(key, "scheme"));
  Rng rng = make_rng(common);

  ordered_json j;
  j["scheme"] = bke::scheme_name(scheme);
  j["stage"] = stage;
  ordered_json keys = ordered_json::array();

  if (scheme == Scheme::Rsa) {
    const Bigint r_bound = Bigint(1) << 64;
    std::vector<Bigint> rand_values;
    if (!randomness.empty()) {
      rand_values = parse_randomness(randomness, count);
    } else {
      for (unsigned i = 0; i < count; ++i)
        rand_values.push_back(rng.range(1, r_bound));
    }
    if (stage == "cocoon") {
      Bigint S = bke::from_hex(require_str(key, "S"));
      Bigint alpha = bke::from_hex(require_str(key, "alpha"));
      for (unsigned i = 0; i < count; ++i) {
        auto cocoon = bke::rsa::expand_cocoon(S, alpha, rand_values[i], i);
        keys.push_back(ordered_json{{"i", i},
                                    {"r", bke::to_hex(cocoon.r)},
                                    {"J", bke::to_hex(cocoon.J)}});
      }
      j["N"] = require_str(key, "N");
      j["S"] = bke::to_hex(S);
      if (key.contains("beta")) j["beta"] = key.at("beta");
    } else {  // butterfly
      if (!key.contains("keys"))
        throw std::runtime_error(
            "butterfly stage needs a cocoon file (run --stage cocoon first)");
      Bigint beta = bke::from_hex(require_str(key, "beta"));
      const auto& cocoons = key.at("keys");
      if (cocoons.size() < count)
        throw std::runtime_error("cocoon file has fewer keys than --count");
      for (unsigned i = 0; i < count; ++i) {
        Bigint J = bke::from_hex(cocoons.at(i).at("J").get<std::string>());
        auto butterfly =
            bke::rsa::expand_butterfly(J, beta, rand_values[i], i);
        keys.push_back(ordered_json{{"i", i},
                                    {"o", bke::to_hex(butterfly.o)},
                                    {"H", bke::to_hex(butterfly.H)}});
      }
      j["N"] = require_str(key, "N");
    }
  } else {
    if (!randomness.empty())
      throw std::runtime_error("--randomness applies to the rsa scheme only");
    const auto& curve = bke::ecc::Curve::by_name(require_str(key, "curve"));
    j["curve"] = curve.name();
    if (stage == "cocoon") {
      auto A = curve.point_from_hex(require_str(key, "A"));
      auto P = curve.point_from_hex(require_str(key, "P"));
      bke::sym::Key128 ck{}, ek{};
      auto ck_bytes = hex_decode(require_str(key, "ck"));
      auto ek_bytes = hex_decode(require_str(key, "ek"));
      if (ck_bytes.size() != 16 || ek_bytes.size() != 16)
        throw std::runtime_error("ck/ek must be 16 bytes");
      std::copy(ck_bytes.begin(), ck_bytes.end(), ck.begin());
      std::copy(ek_bytes.begin(), ek_bytes.end(), ek.begin());
      for (unsigned i = 0; i < count; ++i) {
        auto cocoon = bke::ecc::expand_cocoon(A, P, ck, ek, i, curve);
        keys.push_back(ordered_json{{"i", i},
                                    {"B", curve.point_hex(cocoon.B)},
                                    {"Q", curve.point_hex(cocoon.Q)}});
      }
    } else {  // butterfly
      if (!key.contains("keys"))
        throw std::runtime_error(
            "butterfly stage needs a cocoon file (run --stage cocoon first)");
      const auto& cocoons = key.at("keys");
      if (cocoons.size() < count)
        throw std::runtime_error("cocoon file has fewer keys than --count");
      auto aca = bke::ecc::gen_ecdsa_keypair(curve, rng);
      j["aca_sign_pub"] = curve.point_hex(aca.pub);
      for (unsigned i = 0; i < count; ++i) {
        bke::ecc::CocoonPair cocoon{
            cocoons.at(i).at("i").get<uint64_t>(),
            curve.point_from_hex(cocoons.at(i).at("B").get<std::string>()),
            curve.point_from_hex(cocoons.at(i).at("Q").get<std::string>())};
        auto res = bke::ecc::aca_contribution(cocoon, curve, aca.priv, rng);
        keys.push_back(
            ordered_json{{"i", res.index},
                         {"butterfly_pub", curve.point_hex(res.butterfly_pub)},
                         {"c_ct", hex_encode(res.c_ct)},
                         {"sig", hex_encode(res.signature)}});
      }
    }
  }

  j["keys"] = std::move(keys);
  fs::path path =
      resolve_out(out_path, common, "expanded_" + stage + ".json");
  write_file(path, j.dump(2) + "\n");
  std::cout << "wrote " << path.string() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------- verify-example

struct ExampleVector {
  Bigint rho, zeta, N, phi, s, S, g, h, v, alpha, beta, gcd_alpha_beta;
  std::vector<Bigint> r, o, J, H;
  Bigint plaintext;
  Bigint misprinted_h2;
};

ExampleVector example_from_fixture(const bke::fixtures::RsaExample& ex) {
  return ExampleVector{ex.rho, ex.zeta, ex.N,     ex.phi,       ex.s,
                       ex.S,   ex.g,    ex.h,     ex.v,         ex.alpha,
                       ex.beta, ex.gcd_alpha_beta, ex.r,        ex.o,
                       ex.J,   ex.H,    ex.plaintext, ex.misprinted_h2};
}

ExampleVector example_from_json(const ordered_json& j) {
  auto num = [&](const char* key) { return bke::from_hex(require_str(j, key)); };
  auto list = [&](const char* key) {
    std::vector<Bigint> out;
    for (const auto& item : j.at(key)) out.push_back(bke::from_hex(item.get<std::string>()));
    return out;
  };
  return ExampleVector{num("rho"),  num("zeta"), num("N"),
                       num("phi"),  num("s"),    num("S"),
                       num("g"),    num("h"),    num("v"),
                       num("alpha"), num("beta"), num("gcd_alpha_beta"),
                       list("r"),   list("o"),   list("J"),
                       list("H"),   num("plaintext"), num("misprinted_h2")};
}

int cmd_verify_example(const std::string& fixture_path) {
  ExampleVector ex =
      fixture_path.empty()
          ? example_from_fixture(bke::fixtures::rsa_example_10bit())
          : example_from_json(load_json(fixture_path));

  int failures = 0;
  auto check = [&](const std::string& label, const Bigint& got,
                   const Bigint& expected, const std::string& note = "") {
    bool ok = got == expected;
    if (!ok) ++failures;
    std::cout << (ok ? "  ok   " : "  FAIL ") << label << " = "
              << got.get_str(10);
    if (!ok) std::cout << " (expected " << expected.get_str(10) << ")";
    if (!note.empty()) std::cout << "  [" << note << "]";
    std::cout << "\n";
  };

  std::cout << "recomputing the 10-bit worked example\n";
  auto cat = bke::rsa::caterpillar_from_primes(ex.rho, ex.zeta, ex.S);
  check("N", cat.N, ex.N);
  check("phi", cat.phi, ex.phi);
  check("s", cat.s, ex.s);
  check("s*S mod phi", (cat.s * cat.S) % cat.phi, 1);

  Bigint alpha = ex.g * ex.h * cat.phi;
  Bigint beta = ex.v * ex.h * cat.phi;
  check("alpha", alpha, ex.alpha);
  check("beta", beta, ex.beta);
  check("gcd(alpha, beta)", bke::gcd(alpha, beta), ex.gcd_alpha_beta);
  check("h*phi", ex.h * cat.phi, ex.gcd_alpha_beta);

  for (size_t i = 0; i < ex.r.size(); ++i) {
    auto cocoon = bke::rsa::expand_cocoon(ex.S, alpha, ex.r[i], i);
    check("J_" + std::to_string(i + 1), cocoon.J, ex.J.at(i));
  }
  for (size_t i = 0; i < ex.o.size(); ++i) {
    auto butterfly = bke::rsa::expand_butterfly(ex.J.at(i), beta, ex.o[i], i);
    std::string note;
    if (i == 1) {
      note = "recomputed as J_2 + o_2*beta; a circulated transcription of "
             "this example misprints H_2 as " +
             ex.misprinted_h2.get_str(10) + " (that value equals J_1)";
    }
    check("H_" + std::to_string(i + 1), butterfly.H, ex.H.at(i), note);
  }

  for (size_t i = 0; i < ex.H.size(); ++i) {
    Bigint ct = bke::rsa::encrypt(ex.plaintext, ex.H.at(i), cat.N);
    check("decrypt(encrypt(x, H_" + std::to_string(i + 1) + "))",
          bke::rsa::decrypt(ct, cat.s, cat.N), ex.plaintext);
  }
  for (size_t i = 0; i < ex.J.size(); ++i) {
    Bigint ct = bke::rsa::encrypt(ex.plaintext, ex.J.at(i), cat.N);
    check("decrypt(encrypt(x, J_" + std::to_string(i + 1) + "))",
          bke::rsa::decrypt(ct, cat.s, cat.N), ex.plaintext);
    check("s*J_" + std::to_string(i + 1) + " mod phi",
          (cat.s * ex.J.at(i)) % cat.phi, 1);
  }
  for (size_t i = 0; i < ex.H.size(); ++i)
    check("s*H_" + std::to_string(i + 1) + " mod phi",
          (cat.s * ex.H.at(i)) % cat.phi, 1);

  if (failures > 0) {
    std::cout << failures << " check(s) failed\n";
    return kExitVerify;
  }
  std::cout << "all checks passed\n";
  return kExitOk;
}

// ------------------------------------------------------------------ flow

int cmd_flow(const CommonOpts& common, const std::string& scheme_str,
             int strength, unsigned batch, const std::string& fault_str,
             const std::string& out_path) {
  bke::flow::FlowOptions opt;
  opt.scheme = bke::scheme_from_name(scheme_str);
  opt.strength = strength;
  opt.batch = batch;
  opt.seed = common.seeded ? common.seed : Rng().u64();
  if (fault_str == "alpha-plain")
    opt.fault = bke::flow::Fault::RsaAlphaPlaintextToAca;
  else if (fault_str == "c-plain")
    opt.fault = bke::flow::Fault::EccCPlaintextToRa;

  bke::flow::Transcript transcript = bke::flow::run_flow(opt);

  fs::path path = resolve_out(out_path, common,
                              std::string("transcript_") +
                                  bke::scheme_name(opt.scheme) + ".json");
  write_file(path, transcript.to_json_text());
  std::cout << "wrote " << path.string() << "\n";

  auto violations = bke::flow::assert_privacy(transcript);
  if (violations.empty()) {
    std::cout << "privacy: no violations\n";
  } else {
    for (const auto& violation : violations) {
      std::cout << "privacy violation: " << bke::flow::role_name(violation.role)
                << " observed '" << violation.name << "' at step "
                << violation.step << "\n";
    }
  }

  if (opt.scheme == Scheme::Rsa) {
    auto probe = bke::flow::collusion_probe(transcript);
    std::cout << "collusion probe: gcd(alpha, beta) "
              << (probe.equals_h_phi ? "== h*phi" : "!= h*phi");
    if (probe.degenerate_equal_gv) std::cout << " (degenerate: g == v)";
    std::cout << "\n";
  }

  return violations.empty() ? kExitOk : kExitPrivacy;
}

// ----------------------------------------------------------------- bench

int cmd_bench(const CommonOpts& common, bke::bench::Config config,
              const std::string& config_path) {
  if (!config_path.empty())
    config = bke::bench::Config::from_json(load_json(config_path));

  bke::bench::Report report = bke::bench::run(config);

  fs::path dir(common.out_dir);
  write_file(dir / "report.csv", report.to_csv());
  write_file(dir / "report.json", report.to_json_text());
  write_file(dir / "report.md", report.to_markdown());
  std::cout << "wrote " << (dir / "report.{csv,json,md}").string() << "\n\n";
  for (const auto& warning : report.warnings)
    std::cout << "warning: " << warning << "\n";
  std::cout << report.ratio_summary();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Butterfly key expansion toolkit: RSA-based and IEEE "
               "1609.2.1 ECC-based schemes, SCMS flow simulation, and the "
               "expansion benchmark"};
  app.require_subcommand(1);

  CommonOpts common;
  app.add_option("--out-dir", common.out_dir,
                 "Directory for default output files")
      ->envname("BKE_OUT_DIR")
      ->capture_default_str();
  auto* seed_opt =
      app.add_option("--seed", common.seed,
                     "Deterministic seed (omit for fresh entropy)");

  std::vector<int> valid_strengths = {80, 112, 128, 192, 256};

  // keygen
  auto* keygen = app.add_subcommand(
      "keygen", "Generate caterpillar key material (and RSA expansion values)");
  std::string kg_scheme, kg_out;
  int kg_strength = 0;
  unsigned kg_prime_bits = 256;
  bool kg_secrets = false;
  keygen->add_option("--scheme", kg_scheme, "rsa | ecc")
      ->required()
      ->check(CLI::IsMember({"rsa", "ecc"}));
  keygen->add_option("--strength", kg_strength, "Security strength")
      ->required()
      ->check(CLI::IsMember(valid_strengths));
  keygen->add_option("--prime-bits", kg_prime_bits,
                     "Bit length of the expansion primes g, h, v (rsa)")
      ->check(CLI::Range(16u, 4096u));
  keygen->add_flag("--include-secrets", kg_secrets,
                   "Export private fields as well");
  keygen->add_option("--out", kg_out, "Output file");

  // expand
  auto* expand = app.add_subcommand(
      "expand", "Expand cocoon or butterfly public keys from a key file");
  std::string ex_key, ex_stage, ex_rand, ex_out;
  unsigned ex_count = 0;
  expand->add_option("--key", ex_key, "Key file from keygen or a cocoon file")
      ->required()
      ->check(CLI::ExistingFile);
  expand->add_option("--stage", ex_stage, "cocoon | butterfly")
      ->required()
      ->check(CLI::IsMember({"cocoon", "butterfly"}));
  expand->add_option("--count", ex_count, "Number of keys to expand")
      ->required()
      ->check(CLI::Range(1u, 1000000u));
  expand->add_option("--randomness", ex_rand,
                     "Comma-separated decimal r/o values (rsa)");
  expand->add_option("--out", ex_out, "Output file");

  // flow
  auto* flow = app.add_subcommand(
      "flow", "Run the three-actor provisioning flow and the privacy checks");
  std::string fl_scheme, fl_fault = "none", fl_out;
  int fl_strength = 0;
  unsigned fl_batch = 20;
  flow->add_option("--scheme", fl_scheme, "rsa | ecc")
      ->required()
      ->check(CLI::IsMember({"rsa", "ecc"}));
  flow->add_option("--strength", fl_strength, "Security strength")
      ->required()
      ->check(CLI::IsMember(valid_strengths));
  flow->add_option("--batch", fl_batch, "Keys per flow")
      ->check(CLI::Range(1u, 10000u))
      ->capture_default_str();
  flow->add_option("--fault", fl_fault,
                   "Inject a protocol fault for privacy testing")
      ->check(CLI::IsMember({"none", "alpha-plain", "c-plain"}))
      ->capture_default_str();
  flow->add_option("--out", fl_out, "Transcript file");

  // bench
  auto* bench = app.add_subcommand(
      "bench", "Measure expansion times and emit csv/json/md reports");
  bke::bench::Config bench_config;
  std::string bench_config_path;
  bench->add_option("--experiments", bench_config.experiments,
                    "Subset of 1 2 3 4")
      ->delimiter(',')
      ->check(CLI::Range(1, 4));
  bench->add_option("--strengths", bench_config.strengths,
                    "Security strengths to measure")
      ->delimiter(',')
      ->check(CLI::IsMember(valid_strengths));
  bench->add_option("--iterations", bench_config.iterations,
                    "Timed iterations per cell")
      ->check(CLI::Range(1u, 10000000u))
      ->capture_default_str();
  bench->add_option("--batch", bench_config.batch,
                    "Batch size for experiments 3 and 4")
      ->check(CLI::Range(1u, 10000u))
      ->capture_default_str();
  bench->add_option("--warmup", bench_config.warmup, "Warmup iterations")
      ->capture_default_str();
  bench->add_flag("--include-ecies", bench_config.include_ecies_in_exp2,
                  "Include the ECIES wrap of c in experiment 2's timed region");
  bool no_cached = false;
  bench->add_flag("--no-cached-keys", no_cached,
                  "Generate 7680/15360-bit RSA keys instead of using the "
                  "cached ones (slow)");
  bench->add_option("--prime-bits", bench_config.expansion_prime_bits,
                    "Bit length of the expansion primes")
      ->check(CLI::Range(16u, 4096u))
      ->capture_default_str();
  bench->add_option("--config", bench_config_path,
                    "JSON config file (overrides the flags above)")
      ->check(CLI::ExistingFile);

  // verify-example
  auto* verify = app.add_subcommand(
      "verify-example",
      "Recompute the embedded 10-bit worked example and check every value");
  std::string vf_fixture;
  verify->add_option("--fixture", vf_fixture,
                     "Alternative fixture file (defaults to the embedded one)")
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  common.seeded = seed_opt->count() > 0;

  try {
    if (*keygen)
      return cmd_keygen(common, kg_scheme, kg_strength, kg_prime_bits,
                        kg_secrets, kg_out);
    if (*expand)
      return cmd_expand(common, ex_key, ex_stage, ex_count, ex_rand, ex_out);
    if (*flow)
      return cmd_flow(common, fl_scheme, fl_strength, fl_batch, fl_fault,
                      fl_out);
    if (*bench) {
      if (no_cached) bench_config.use_cached_keys = false;
      if (common.seeded) bench_config.seed = common.seed;
      return cmd_bench(common, bench_config, bench_config_path);
    }
    if (*verify) return cmd_verify_example(vf_fixture);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "bke/fixtures.hpp"
#include "bke/flow.hpp"

using namespace bke;
using namespace bke::flow;

namespace {

FlowOptions small_rsa(unsigned batch, uint64_t seed) {
  FlowOptions opt;
  opt.scheme = Scheme::Rsa;
  opt.batch = batch;
  opt.strength = 80;
  opt.seed = seed;
  opt.test_modulus_bits = 128;
  opt.expansion_prime_bits = 32;
  return opt;
}

FlowOptions small_ecc(unsigned batch, uint64_t seed) {
  FlowOptions opt;
  opt.scheme = Scheme::Ecc;
  opt.batch = batch;
  opt.strength = 80;
  opt.seed = seed;
  opt.test_curve = "P-192";
  return opt;
}

FlowOptions fixture_flow() {
  const auto& ex = fixtures::rsa_example_10bit();
  FlowOptions opt = small_rsa(2, 1);
  RsaVector vec;
  vec.rho = ex.rho;
  vec.zeta = ex.zeta;
  vec.S = ex.S;
  vec.g = ex.g;
  vec.h = ex.h;
  vec.v = ex.v;
  vec.r = ex.r;
  vec.o = ex.o;
  opt.fixed = vec;
  return opt;
}

}  // namespace

TEST_CASE("rsa flow with the fixture vector reproduces the golden keys") {
  const auto& ex = fixtures::rsa_example_10bit();
  Transcript t = run_flow(fixture_flow());
  REQUIRE(t.outcome.at("keys").size() == 2);
  for (size_t i = 0; i < 2; ++i) {
    const auto& key = t.outcome.at("keys").at(i);
    CHECK(key.at("J").get<std::string>() == to_hex(ex.J[i]));
    CHECK(key.at("H").get<std::string>() == to_hex(ex.H[i]));
    CHECK(key.at("congruent").get<bool>());
    CHECK(key.at("roundtrip").get<bool>());
  }
}

TEST_CASE("message sequences follow the step tables") {
  Transcript rsa_t = run_flow(small_rsa(2, 7));
  CHECK_NOTHROW(check_step_structure(rsa_t));
  REQUIRE(rsa_t.messages.size() == 2);
  CHECK(rsa_t.messages[0].step == 2);
  CHECK(rsa_t.messages[1].step == 4);
  // nothing flows back toward the EE in the RSA scheme
  for (const auto& m : rsa_t.messages) CHECK(m.to != Role::EE);

  Transcript ecc_t = run_flow(small_ecc(3, 7));
  CHECK_NOTHROW(check_step_structure(ecc_t));
  REQUIRE(ecc_t.messages.size() == 4);
  CHECK(ecc_t.messages[3].step == 7);
  CHECK(ecc_t.messages[3].from == Role::RA);
  CHECK(ecc_t.messages[3].to == Role::EE);
  // step 7 carries (i, c', signature) for every index
  const auto& items = ecc_t.messages[3].payload.at("items");
  REQUIRE(items.size() == 3);
  for (size_t i = 0; i < items.size(); ++i) {
    CHECK(items.at(i).at("i").get<uint64_t>() == i);
    CHECK(items.at(i).contains("c_ct"));
    CHECK(items.at(i).contains("sig"));
  }

  // tampered sequence is rejected
  Transcript broken = run_flow(small_rsa(1, 9));
  broken.messages[0].step = 3;
  CHECK_THROWS_AS(check_step_structure(broken), std::logic_error);
}

TEST_CASE("honest flows have no privacy violations") {
  CHECK(assert_privacy(run_flow(small_rsa(20, 11))).empty());
  CHECK(assert_privacy(run_flow(small_ecc(20, 11))).empty());
}

TEST_CASE("leaking alpha to the ACA is detected exactly once") {
  FlowOptions opt = small_rsa(20, 13);
  opt.fault = Fault::RsaAlphaPlaintextToAca;
  Transcript t = run_flow(opt);
  auto violations = assert_privacy(t);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].role == Role::ACA);
  CHECK(violations[0].step == "4");
  CHECK(violations[0].name == "alpha");
}

TEST_CASE("leaking c to the RA is detected exactly once") {
  FlowOptions opt = small_ecc(20, 13);
  opt.fault = Fault::EccCPlaintextToRa;
  Transcript t = run_flow(opt);
  auto violations = assert_privacy(t);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].role == Role::RA);
  CHECK(violations[0].step == "6");
  CHECK(violations[0].name == "c[0]");
}

TEST_CASE("collusion probe: fixture values") {
  Transcript t = run_flow(fixture_flow());
  ProbeReport report = collusion_probe(t);
  CHECK(report.gcd_alpha_beta == Bigint("489826260"));
  CHECK(report.h_phi == Bigint(599) * Bigint(817740));
  CHECK(report.equals_h_phi);
  CHECK_FALSE(report.equals_phi);
  CHECK_FALSE(report.equals_two_phi);
  CHECK_FALSE(report.degenerate_equal_gv);
}

TEST_CASE("collusion probe: fresh flows satisfy gcd == h*phi") {
  for (uint64_t seed = 100; seed < 110; ++seed) {
    Transcript t = run_flow(small_rsa(2, seed));
    ProbeReport report = collusion_probe(t);
    CHECK(report.equals_h_phi);
    CHECK_FALSE(report.degenerate_equal_gv);
  }
}

TEST_CASE("collusion probe: forced g == v degenerates") {
  FlowOptions opt = small_rsa(2, 21);
  opt.force_equal_gv = true;
  Transcript t = run_flow(opt);
  ProbeReport report = collusion_probe(t);
  CHECK(report.degenerate_equal_gv);
  CHECK(report.gcd_alpha_beta ==
        t.values.at("g") * t.values.at("h") * t.values.at("phi"));
  CHECK_FALSE(report.equals_h_phi);

  // probe refuses ECC transcripts
  Transcript ecc_t = run_flow(small_ecc(1, 3));
  CHECK_THROWS_AS(collusion_probe(ecc_t), std::invalid_argument);
}

TEST_CASE("same seed reproduces the transcript byte for byte") {
  for (const auto make :
       {+[](uint64_t s) { return small_rsa(5, s); },
        +[](uint64_t s) { return small_ecc(5, s); }}) {
    std::string a = run_flow(make(1234)).to_json_text();
    std::string b = run_flow(make(1234)).to_json_text();
    std::string c = run_flow(make(1235)).to_json_text();
    CHECK(a == b);
    CHECK(a != c);
  }
}

TEST_CASE("batch of 20 yields 20 distinct butterfly keys") {
  Transcript rsa_t = run_flow(small_rsa(20, 31));
  std::set<std::string> rsa_keys;
  for (const auto& key : rsa_t.outcome.at("keys"))
    rsa_keys.insert(key.at("H").get<std::string>());
  CHECK(rsa_keys.size() == 20);

  Transcript ecc_t = run_flow(small_ecc(20, 31));
  std::set<std::string> ecc_keys;
  for (const auto& key : ecc_t.outcome.at("keys"))
    ecc_keys.insert(key.at("butterfly_pub").get<std::string>());
  CHECK(ecc_keys.size() == 20);
}

TEST_CASE("option validation") {
  FlowOptions opt = small_rsa(0, 1);
  CHECK_THROWS_AS(run_flow(opt), std::invalid_argument);
  opt = small_rsa(1, 1);
  opt.strength = 99;
  CHECK_THROWS_AS(run_flow(opt), std::invalid_argument);
  opt = fixture_flow();
  opt.batch = 5;  // fixed vector only covers two indices
  CHECK_THROWS_AS(run_flow(opt), std::invalid_argument);
}

TEST_CASE("transcript json carries the wire schema") {
  Transcript t = run_flow(small_rsa(2, 55));
  auto j = t.to_json();
  CHECK(j.at("scheme") == "rsa");
  CHECK(j.at("strength") == 80);
  CHECK(j.at("batch") == 2);
  REQUIRE(j.at("messages").size() == 2);
  const auto& m0 = j.at("messages").at(0);
  CHECK(m0.at("step") == 2);
  CHECK(m0.at("from") == "ee");
  CHECK(m0.at("to") == "ra");
  CHECK(m0.at("payload").contains("S"));
  CHECK(m0.at("payload").contains("alpha_ct"));
}

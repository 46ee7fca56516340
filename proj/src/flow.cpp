#include "bke/flow.hpp"

#include <algorithm>

#include "bke/curve.hpp"
#include "bke/ecc_bke.hpp"
#include "bke/rng.hpp"
#include "bke/rsa_bke.hpp"

namespace bke::flow {

const char* role_name(Role role) {
  switch (role) {
    case Role::EE:
      return "ee";
    case Role::RA:
      return "ra";
    default:
      return "aca";
  }
}

void ActorLog::note(const std::string& step, const std::string& name,
                    const std::string& value) {
  entries.push_back(Observed{step, name, value});
}

namespace {

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

// Records every field of a received payload in the receiver's log.
void observe_json(ActorLog& log, const std::string& step,
                  const std::string& prefix, const ordered_json& value) {
  if (value.is_object()) {
    for (const auto& [key, sub] : value.items()) {
      observe_json(log, step, prefix.empty() ? key : prefix + "." + key, sub);
    }
  } else if (value.is_array()) {
    for (size_t i = 0; i < value.size(); ++i) {
      observe_json(log, step, prefix + "[" + std::to_string(i) + "]",
                   value[i]);
    }
  } else if (value.is_string()) {
    log.note(step, prefix, value.get<std::string>());
  } else {
    log.note(step, prefix, value.dump());
  }
}

struct Actors {
  ActorLog ee{Role::EE, {}};
  ActorLog ra{Role::RA, {}};
  ActorLog aca{Role::ACA, {}};
};

void send(Transcript& t, Actors& actors, int step, Role from, Role to,
          ordered_json payload) {
  ActorLog& receiver = to == Role::EE   ? actors.ee
                       : to == Role::RA ? actors.ra
                                        : actors.aca;
  observe_json(receiver, std::to_string(step), "", payload);
  t.messages.push_back(Message{step, from, to, std::move(payload)});
}

ordered_json wrapped_json(const rsa::WrappedValue& w) {
  return ordered_json{{"kem", hex_encode(w.kem_ct)},
                      {"box", hex_encode(w.box)}};
}

rsa::WrappedValue wrapped_from_json(const ordered_json& j) {
  auto decode = [](const std::string& hexstr) {
    std::vector<uint8_t> out(hexstr.size() / 2);
    for (size_t i = 0; i < out.size(); ++i)
      out[i] =
          static_cast<uint8_t>(std::stoi(hexstr.substr(2 * i, 2), nullptr, 16));
    return out;
  };
  return rsa::WrappedValue{decode(j.at("kem").get<std::string>()),
                           decode(j.at("box").get<std::string>())};
}

void run_rsa_flow(const FlowOptions& opt, Transcript& t, Actors& actors,
                  Rng& rng) {
  unsigned bits = opt.test_modulus_bits
                      ? opt.test_modulus_bits
                      : strength_params(opt.strength).rsa_bits;
  t.test_modulus_bits = opt.test_modulus_bits;

  // Long-term keys exist before the flow starts.
  rsa::Caterpillar ra_lt = rsa::gen_caterpillar(bits, rng);
  rsa::Caterpillar aca_lt = rsa::gen_caterpillar(bits, rng);

  // (1a) caterpillar keypair at the EE
  rsa::Caterpillar cat =
      opt.fixed ? rsa::caterpillar_from_primes(opt.fixed->rho, opt.fixed->zeta,
                                               opt.fixed->S)
                : rsa::gen_caterpillar(bits, rng);
  actors.ee.note("1a", "rho", to_hex(cat.rho));
  actors.ee.note("1a", "zeta", to_hex(cat.zeta));
  actors.ee.note("1a", "N", to_hex(cat.N));
  actors.ee.note("1a", "phi", to_hex(cat.phi));
  actors.ee.note("1a", "s", to_hex(cat.s));
  actors.ee.note("1a", "S", to_hex(cat.S));

  // (1b)-(1c) expansion values
  rsa::ExpansionValues ev;
  if (opt.fixed) {
    ev = rsa::expansion_values_from_primes(cat.phi, opt.fixed->g, opt.fixed->h,
                                           opt.fixed->v, rng);
  } else if (opt.force_equal_gv) {
    rsa::ExpansionValues tmp =
        rsa::gen_expansion_values(cat, opt.expansion_prime_bits, rng);
    ev = rsa::expansion_values_from_primes(cat.phi, tmp.g, tmp.h, tmp.g, rng,
                                           /*allow_equal_gv=*/true);
  } else {
    ev = rsa::gen_expansion_values(cat, opt.expansion_prime_bits, rng);
  }
  actors.ee.note("1b", "g", to_hex(ev.g));
  actors.ee.note("1b", "h", to_hex(ev.h));
  actors.ee.note("1b", "alpha", to_hex(ev.alpha));
  actors.ee.note("1c", "v", to_hex(ev.v));
  actors.ee.note("1c", "beta", to_hex(ev.beta));

  // (1d)-(1e) wrap the expansion values for their recipients
  rsa::WrappedValue alpha_ct = rsa::wrap_value(ev.alpha, ra_lt.N, ra_lt.S, rng);
  rsa::WrappedValue beta_ct = rsa::wrap_value(ev.beta, aca_lt.N, aca_lt.S, rng);
  actors.ee.note("1d", "alpha_ct", hex_encode(alpha_ct.box));
  actors.ee.note("1e", "beta_ct", hex_encode(beta_ct.box));

  // (2) EE -> RA: (S, alpha', beta') plus the shared modulus
  send(t, actors, 2, Role::EE, Role::RA,
       ordered_json{{"S", to_hex(cat.S)},
                    {"N", to_hex(cat.N)},
                    {"alpha_ct", wrapped_json(alpha_ct)},
                    {"beta_ct", wrapped_json(beta_ct)}});

  // (3a) RA unwraps alpha
  Bigint alpha;
  try {
    alpha = rsa::unwrap_value(wrapped_from_json(t.messages.back().payload.at(
                                  "alpha_ct")),
                              ra_lt.N, ra_lt.s);
  } catch (const std::exception& e) {
    throw FlowError("3a", e.what());
  }
  actors.ra.note("3a", "alpha", to_hex(alpha));

  // (3b) cocoon keys J_i = S + r_i * alpha
  Bigint r_bound = Bigint(1) << 64;
  std::vector<rsa::CocoonKey> cocoons;
  for (unsigned i = 0; i < opt.batch; ++i) {
    Bigint r = opt.fixed ? opt.fixed->r.at(i) : rng.range(1, r_bound);
    cocoons.push_back(rsa::expand_cocoon(cat.S, alpha, r, i));
    actors.ra.note("3b", "r[" + std::to_string(i) + "]", to_hex(r));
    actors.ra.note("3b", "J[" + std::to_string(i) + "]",
                   to_hex(cocoons.back().J));
  }

  // (4) RA -> ACA: (J_i..., beta')
  ordered_json j_list = ordered_json::array();
  for (const auto& ck : cocoons) j_list.push_back(to_hex(ck.J));
  ordered_json step4{{"J", j_list},
                     {"N", to_hex(cat.N)},
                     {"beta_ct", wrapped_json(beta_ct)}};
  if (opt.fault == Fault::RsaAlphaPlaintextToAca)
    step4["alpha"] = to_hex(alpha);
  send(t, actors, 4, Role::RA, Role::ACA, std::move(step4));

  // (5a) ACA unwraps beta
  Bigint beta;
  try {
    beta = rsa::unwrap_value(
        wrapped_from_json(t.messages.back().payload.at("beta_ct")), aca_lt.N,
        aca_lt.s);
  } catch (const std::exception& e) {
    throw FlowError("5a", e.what());
  }
  actors.aca.note("5a", "beta", to_hex(beta));

  // (5b) butterfly keys H_i = J_i + o_i * beta; the flow ends here --
  // nothing returns to the EE in this scheme.
  std::vector<rsa::ButterflyKey> butterflies;
  for (unsigned i = 0; i < opt.batch; ++i) {
    Bigint o = opt.fixed ? opt.fixed->o.at(i) : rng.range(1, r_bound);
    butterflies.push_back(rsa::expand_butterfly(cocoons[i].J, beta, o, i));
    actors.aca.note("5b", "o[" + std::to_string(i) + "]", to_hex(o));
    actors.aca.note("5b", "H[" + std::to_string(i) + "]",
                    to_hex(butterflies.back().H));
  }

  // Post-flow validation with the EE's retained private material.
  ordered_json keys = ordered_json::array();
  for (unsigned i = 0; i < opt.batch; ++i) {
    const auto& bf = butterflies[i];
    if (!rsa::verify_exponent_congruence(bf.H, cat))
      throw FlowError("5b", "butterfly exponent not congruent at index " +
                                std::to_string(i));
    Bigint x;
    do {
      x = rng.range(2, cat.N);
    } while (gcd(x, cat.N) != 1);
    bool roundtrip =
        rsa::decrypt(rsa::encrypt(x, bf.H, cat.N), cat.s, cat.N) == x;
    if (!roundtrip)
      throw FlowError("5b",
                      "round-trip failed at index " + std::to_string(i));
    keys.push_back(ordered_json{{"i", i},
                                {"r", to_hex(cocoons[i].r)},
                                {"J", to_hex(cocoons[i].J)},
                                {"o", to_hex(bf.o)},
                                {"H", to_hex(bf.H)},
                                {"congruent", true},
                                {"roundtrip", true}});
  }
  t.outcome = ordered_json{
      {"keys", std::move(keys)},
      {"note", "index-to-H association recorded by the simulator; no "
               "protocol message conveys it to the EE"}};

  // Values each role must never observe, and probe inputs.
  t.forbidden[Role::RA] = {{"beta", to_hex(ev.beta)},
                           {"s", to_hex(cat.s)},
                           {"phi", to_hex(cat.phi)},
                           {"rho", to_hex(cat.rho)},
                           {"zeta", to_hex(cat.zeta)}};
  t.forbidden[Role::ACA] = {{"alpha", to_hex(ev.alpha)},
                            {"s", to_hex(cat.s)},
                            {"phi", to_hex(cat.phi)},
                            {"rho", to_hex(cat.rho)},
                            {"zeta", to_hex(cat.zeta)}};
  t.values["alpha"] = ev.alpha;
  t.values["beta"] = ev.beta;
  t.values["phi"] = cat.phi;
  t.values["g"] = ev.g;
  t.values["h"] = ev.h;
  t.values["v"] = ev.v;
}

void run_ecc_flow(const FlowOptions& opt, Transcript& t, Actors& actors,
                  Rng& rng) {
  const ecc::Curve& curve =
      opt.test_curve.empty() ? ecc::Curve::for_strength(opt.strength)
                             : ecc::Curve::by_name(opt.test_curve);
  t.curve_name = curve.name();

  ecc::EcdsaKeyPair ra_lt = ecc::gen_ecdsa_keypair(curve, rng);
  (void)ra_lt;  // the RA's long-term key plays no part in this scheme
  ecc::EcdsaKeyPair aca_lt = ecc::gen_ecdsa_keypair(curve, rng);

  // (1) caterpillar keypairs and expansion keys at the EE
  ecc::CaterpillarSet set = ecc::gen_caterpillar(curve, rng);
  actors.ee.note("1", "a", to_hex(set.a));
  actors.ee.note("1", "A", curve.point_hex(set.A));
  actors.ee.note("1", "p", to_hex(set.p));
  actors.ee.note("1", "P", curve.point_hex(set.P));
  actors.ee.note("1", "ck", hex_encode(set.ck));
  actors.ee.note("1", "ek", hex_encode(set.ek));

  // (2) EE -> RA: (ck, ek, A, P)
  send(t, actors, 2, Role::EE, Role::RA,
       ordered_json{{"curve", curve.name()},
                    {"ck", hex_encode(set.ck)},
                    {"ek", hex_encode(set.ek)},
                    {"A", curve.point_hex(set.A)},
                    {"P", curve.point_hex(set.P)}});

  // (3) cocoon pairs at the RA
  std::vector<ecc::CocoonPair> cocoons;
  for (unsigned i = 0; i < opt.batch; ++i) {
    cocoons.push_back(
        ecc::expand_cocoon(set.A, set.P, set.ck, set.ek, i, curve));
    actors.ra.note("3", "B[" + std::to_string(i) + "]",
                   curve.point_hex(cocoons.back().B));
    actors.ra.note("3", "Q[" + std::to_string(i) + "]",
                   curve.point_hex(cocoons.back().Q));
  }

  // (4) RA -> ACA: cocoon pairs
  ordered_json cocoon_list = ordered_json::array();
  for (const auto& cp : cocoons) {
    cocoon_list.push_back(ordered_json{{"i", cp.index},
                                       {"B", curve.point_hex(cp.B)},
                                       {"Q", curve.point_hex(cp.Q)}});
  }
  send(t, actors, 4, Role::RA, Role::ACA,
       ordered_json{{"cocoons", std::move(cocoon_list)}});

  // (5) butterfly formation at the ACA
  std::vector<ecc::ButterflyResult> results;
  std::vector<Bigint> c_values;  // kept for privacy bookkeeping
  for (unsigned i = 0; i < opt.batch; ++i) {
    ecc::ButterflyResult res;
    try {
      res = ecc::aca_contribution(cocoons[i], curve, aca_lt.priv, rng);
    } catch (const std::exception& e) {
      throw FlowError("5", e.what());
    }
    actors.aca.note("5", "butterfly_pub[" + std::to_string(i) + "]",
                    curve.point_hex(res.butterfly_pub));
    actors.aca.note("5", "c_ct[" + std::to_string(i) + "]",
                    hex_encode(res.c_ct));
    results.push_back(std::move(res));
  }

  // (6) ACA -> RA: (i, c', signature); the butterfly key itself stays at
  // the ACA (sending it would hand the RA the value C).
  ordered_json items = ordered_json::array();
  for (const auto& res : results) {
    items.push_back(ordered_json{{"i", res.index},
                                 {"c_ct", hex_encode(res.c_ct)},
                                 {"sig", hex_encode(res.signature)}});
  }
  ordered_json step6{{"items", items}};
  if (opt.fault == Fault::EccCPlaintextToRa && opt.batch > 0) {
    // Recover c_0 the way the EE would, purely to stage the leak.
    Bigint f2 = ecc::expansion_f(set.ek, 0, curve.order());
    Bigint q0 = (set.p + f2) % curve.order();
    auto c_bytes = ecc::ecies_decrypt(curve, q0, results[0].c_ct);
    step6["c"] = to_hex(from_bytes_be(c_bytes));
  }
  send(t, actors, 6, Role::ACA, Role::RA, std::move(step6));

  // (7) RA -> EE: forwarded unchanged
  send(t, actors, 7, Role::RA, Role::EE, ordered_json{{"items", items}});

  // (8)-(9) private-key reconstruction at the EE
  ordered_json keys = ordered_json::array();
  for (unsigned i = 0; i < opt.batch; ++i) {
    ecc::ButterflyPrivate priv;
    try {
      priv = ecc::derive_private(set, i, results[i].c_ct,
                                 results[i].signature, aca_lt.pub);
    } catch (const std::exception& e) {
      throw FlowError("8", e.what());
    }
    actors.ee.note("8", "b[" + std::to_string(i) + "]", to_hex(priv.b));
    actors.ee.note("8", "q[" + std::to_string(i) + "]", to_hex(priv.q));
    actors.ee.note("9", "butterfly_priv[" + std::to_string(i) + "]",
                   to_hex(priv.butterfly_priv));
    if (!(priv.butterfly_pub == results[i].butterfly_pub))
      throw FlowError("9", "EE and ACA disagree on butterfly key " +
                               std::to_string(i));
    keys.push_back(ordered_json{
        {"i", i},
        {"butterfly_pub", curve.point_hex(priv.butterfly_pub)},
        {"consistent", true}});

    // privacy bookkeeping: c_i and C_i must never reach the RA
    Bigint c = (priv.butterfly_priv - priv.b + curve.order()) % curve.order();
    c_values.push_back(c);
  }
  t.outcome = ordered_json{{"keys", std::move(keys)}};

  auto& ra_forbidden = t.forbidden[Role::RA];
  for (unsigned i = 0; i < opt.batch; ++i) {
    ra_forbidden.push_back(
        {"c[" + std::to_string(i) + "]", to_hex(c_values[i])});
    ra_forbidden.push_back(
        {"C[" + std::to_string(i) + "]",
         curve.point_hex(curve.mul_base(c_values[i]))});
  }
  t.forbidden[Role::ACA] = {{"ck", hex_encode(set.ck)},
                            {"ek", hex_encode(set.ek)},
                            {"a", to_hex(set.a)},
                            {"p", to_hex(set.p)}};
}

}  // namespace

Transcript run_flow(const FlowOptions& opt) {
  if (opt.batch < 1) throw std::invalid_argument("run_flow: batch must be >= 1");
  if (!is_valid_strength(opt.strength))
    throw std::invalid_argument("run_flow: bad strength");
  if (opt.fixed && (opt.fixed->r.size() < opt.batch ||
                    opt.fixed->o.size() < opt.batch))
    throw std::invalid_argument("run_flow: fixed vector too short for batch");

  Rng rng(opt.seed);
  Transcript t;
  t.scheme = opt.scheme;
  t.strength = opt.strength;
  t.batch = opt.batch;

  Actors actors;
  if (opt.scheme == Scheme::Rsa)
    run_rsa_flow(opt, t, actors, rng);
  else
    run_ecc_flow(opt, t, actors, rng);

  t.logs[Role::EE] = std::move(actors.ee);
  t.logs[Role::RA] = std::move(actors.ra);
  t.logs[Role::ACA] = std::move(actors.aca);
  check_step_structure(t);
  return t;
}

std::vector<Violation> assert_privacy(const Transcript& t) {
  std::vector<Violation> violations;
  for (const auto& [role, sensitive] : t.forbidden) {
    auto log_it = t.logs.find(role);
    if (log_it == t.logs.end()) continue;
    for (const auto& sv : sensitive) {
      for (const auto& entry : log_it->second.entries) {
        if (entry.value == sv.value) {
          violations.push_back(
              Violation{role, entry.step, sv.name, sv.value});
        }
      }
    }
  }
  return violations;
}

ProbeReport collusion_probe(const Transcript& t) {
  if (t.scheme != Scheme::Rsa)
    throw std::invalid_argument("collusion_probe: RSA transcripts only");
  ProbeReport report;
  const Bigint& alpha = t.values.at("alpha");
  const Bigint& beta = t.values.at("beta");
  const Bigint& phi = t.values.at("phi");
  report.gcd_alpha_beta = gcd(alpha, beta);
  report.h_phi = t.values.at("h") * phi;
  report.equals_h_phi = report.gcd_alpha_beta == report.h_phi;
  report.equals_phi = report.gcd_alpha_beta == phi;
  report.equals_two_phi = report.gcd_alpha_beta == 2 * phi;
  report.degenerate_equal_gv = t.values.at("g") == t.values.at("v");
  return report;
}

ordered_json ProbeReport::to_json() const {
  return ordered_json{{"gcd_alpha_beta", to_hex(gcd_alpha_beta)},
                      {"h_phi", to_hex(h_phi)},
                      {"equals_h_phi", equals_h_phi},
                      {"equals_phi", equals_phi},
                      {"equals_two_phi", equals_two_phi},
                      {"degenerate_equal_gv", degenerate_equal_gv}};
}

void check_step_structure(const Transcript& t) {
  struct Hop {
    int step;
    Role from, to;
  };
  static const std::vector<Hop> rsa_hops = {{2, Role::EE, Role::RA},
                                            {4, Role::RA, Role::ACA}};
  static const std::vector<Hop> ecc_hops = {{2, Role::EE, Role::RA},
                                            {4, Role::RA, Role::ACA},
                                            {6, Role::ACA, Role::RA},
                                            {7, Role::RA, Role::EE}};
  const auto& hops = t.scheme == Scheme::Rsa ? rsa_hops : ecc_hops;
  if (t.messages.size() != hops.size())
    throw std::logic_error("transcript has wrong message count");
  for (size_t i = 0; i < hops.size(); ++i) {
    const auto& m = t.messages[i];
    if (m.step != hops[i].step || m.from != hops[i].from ||
        m.to != hops[i].to)
      throw std::logic_error("transcript message " + std::to_string(i) +
                             " deviates from the step table");
  }
}

ordered_json Transcript::to_json() const {
  ordered_json j;
  j["scheme"] = scheme_name(scheme);
  j["strength"] = strength;
  j["batch"] = batch;
  if (test_modulus_bits != 0) j["test_modulus_bits"] = test_modulus_bits;
  if (!curve_name.empty()) j["curve"] = curve_name;
  ordered_json msgs = ordered_json::array();
  for (const auto& m : messages) {
    msgs.push_back(ordered_json{{"step", m.step},
                                {"from", role_name(m.from)},
                                {"to", role_name(m.to)},
                                {"payload", m.payload}});
  }
  j["messages"] = std::move(msgs);
  j["outcome"] = outcome;
  return j;
}

std::string Transcript::to_json_text() const { return to_json().dump(2) + "\n"; }

}  // namespace bke::flow

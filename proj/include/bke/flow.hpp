#pragma once

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bke/bigint.hpp"
#include "bke/strength.hpp"

namespace bke::flow {

using ordered_json = nlohmann::ordered_json;

enum class Role { EE, RA, ACA };
const char* role_name(Role role);

/// A sub-operation failed; `step` identifies where the flow aborted.
struct FlowError : std::runtime_error {
  std::string step;
  FlowError(std::string step_id, const std::string& what)
      : std::runtime_error("flow step " + step_id + ": " + what),
        step(std::move(step_id)) {}
};

/// Deliberate protocol mutations for privacy-check tests.
enum class Fault {
  None,
  /// RSA step 4 additionally carries plaintext alpha to the ACA.
  RsaAlphaPlaintextToAca,
  /// ECC step 6 additionally carries plaintext c for index 0 to the RA.
  EccCPlaintextToRa,
};

struct Observed {
  std::string step;
  std::string name;
  std::string value;  // canonical string form (lowercase hex for numbers)
};

/// Append-only record of every value an actor receives or derives.
struct ActorLog {
  Role role = Role::EE;
  std::vector<Observed> entries;
  void note(const std::string& step, const std::string& name,
            const std::string& value);
};

struct Message {
  int step;
  Role from;
  Role to;
  ordered_json payload;
};

struct Violation {
  Role role;
  std::string step;
  std::string name;
  std::string value;
};

struct ProbeReport {
  Bigint gcd_alpha_beta;
  Bigint h_phi;
  bool equals_h_phi = false;
  bool equals_phi = false;
  bool equals_two_phi = false;
  bool degenerate_equal_gv = false;
  ordered_json to_json() const;
};

struct SensitiveValue {
  std::string name;
  std::string value;
};

struct Transcript {
  Scheme scheme = Scheme::Rsa;
  int strength = 80;
  unsigned batch = 0;
  unsigned test_modulus_bits = 0;  // nonzero when a test size replaced the
                                   // strength's RSA modulus
  std::string curve_name;          // ECC flows
  std::vector<Message> messages;
  ordered_json outcome;

  // Simulator-side state used by the privacy and collusion checks. Not
  // part of the serialized wire view.
  std::map<Role, ActorLog> logs;
  std::map<Role, std::vector<SensitiveValue>> forbidden;
  std::map<std::string, Bigint> values;

  ordered_json to_json() const;
  /// Deterministic rendering: identical seeds give identical bytes.
  std::string to_json_text() const;
};

/// Explicit RSA material for deterministic replays of a known vector.
struct RsaVector {
  Bigint rho, zeta, S;
  Bigint g, h, v;
  std::vector<Bigint> r;
  std::vector<Bigint> o;
};

struct FlowOptions {
  Scheme scheme = Scheme::Rsa;
  unsigned batch = 20;
  int strength = 80;
  uint64_t seed = 0;
  /// Test-scale overrides; zero / empty means "use the strength table".
  unsigned test_modulus_bits = 0;
  std::string test_curve;
  unsigned expansion_prime_bits = 256;
  Fault fault = Fault::None;
  /// Test-only: force g == v in the expansion values.
  bool force_equal_gv = false;
  std::optional<RsaVector> fixed;
};

/// Runs the full provisioning flow for the chosen scheme and verifies
/// every expanded key before returning. Aborts with FlowError naming the
/// failing step otherwise.
Transcript run_flow(const FlowOptions& options);

/// Exact-value membership checks over the actors' observed logs. An
/// empty result means no role ever saw a value it must not see.
std::vector<Violation> assert_privacy(const Transcript& transcript);

/// gcd(alpha, beta) from the RA's and ACA's unwrapped values; reports
/// whether it equals h*phi (and flags g == v degeneration).
ProbeReport collusion_probe(const Transcript& transcript);

/// Validates the message sequence against the scheme's step table;
/// throws std::logic_error on deviation.
void check_step_structure(const Transcript& transcript);

}  // namespace bke::flow

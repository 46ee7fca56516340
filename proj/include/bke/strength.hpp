#pragma once

#include <string>
#include <vector>

namespace bke {

enum class Scheme { Ecc, Rsa };
const char* scheme_name(Scheme scheme);
Scheme scheme_from_name(const std::string& name);

/// NIST security-strength parameter sets used across the library.
struct StrengthParams {
  int strength;            // 80 | 112 | 128 | 192 | 256
  unsigned rsa_bits;       // RSA modulus size
  std::string curve_name;  // NIST curve
};

const std::vector<StrengthParams>& strength_table();
const StrengthParams& strength_params(int strength);
bool is_valid_strength(int strength);

}  // namespace bke

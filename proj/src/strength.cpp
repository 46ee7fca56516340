#include "bke/strength.hpp"

#include <stdexcept>

namespace bke {

const char* scheme_name(Scheme scheme) {
  return scheme == Scheme::Ecc ? "ecc" : "rsa";
}

Scheme scheme_from_name(const std::string& name) {
  if (name == "ecc" || name == "ECC") return Scheme::Ecc;
  if (name == "rsa" || name == "RSA") return Scheme::Rsa;
  throw std::invalid_argument("unknown scheme: " + name);
}

const std::vector<StrengthParams>& strength_table() {
  static const std::vector<StrengthParams> table = {
      {80, 1024, "P-192"},  {112, 2048, "P-224"}, {128, 3072, "P-256"},
      {192, 7680, "P-384"}, {256, 15360, "P-521"},
  };
  return table;
}

const StrengthParams& strength_params(int strength) {
  for (const auto& row : strength_table())
    if (row.strength == strength) return row;
  throw std::invalid_argument("unsupported security strength: " +
                              std::to_string(strength));
}

bool is_valid_strength(int strength) {
  for (const auto& row : strength_table())
    if (row.strength == strength) return true;
  return false;
}

}  // namespace bke

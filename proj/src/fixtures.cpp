#include "bke/fixtures.hpp"

namespace bke::fixtures {

const RsaExample& rsa_example_10bit() {
  static const RsaExample example = [] {
    RsaExample e;
    e.rho = 991;
    e.zeta = 827;
    e.N = Bigint("819557");
    e.phi = Bigint("817740");
    e.s = Bigint("84983");
    e.S = Bigint("65567");
    e.g = 937;
    e.h = 599;
    e.v = 983;
    e.alpha = Bigint("458967205620");
    e.beta = Bigint("481499213580");
    e.gcd_alpha_beta = Bigint("489826260");
    e.r = {2, 3};
    e.o = {5, 7};
    e.J = {Bigint("917934476807"), Bigint("1376901682427")};
    e.H = {Bigint("3325430544707"), Bigint("4747396177487")};
    e.plaintext = 101;
    e.misprinted_h2 = Bigint("917934476807");
    return e;
  }();
  return example;
}

}  // namespace bke::fixtures

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bke/curve.hpp"
#include "bke/rng.hpp"

using namespace bke;
using namespace bke::ecc;

TEST_CASE("all five curves construct and validate") {
  for (const auto& name : Curve::names()) {
    const Curve& curve = Curve::by_name(name);
    CHECK(curve.on_curve(curve.base_point()));
    CHECK(curve.mul_base(curve.order()).infinity);
    CHECK(curve.mul_base(1) == curve.base_point());
  }
  CHECK_THROWS_AS(Curve::by_name("P-999"), std::invalid_argument);
}

TEST_CASE("strength mapping") {
  CHECK(Curve::for_strength(80).name() == "P-192");
  CHECK(Curve::for_strength(112).name() == "P-224");
  CHECK(Curve::for_strength(128).name() == "P-256");
  CHECK(Curve::for_strength(192).name() == "P-384");
  CHECK(Curve::for_strength(256).name() == "P-521");
  CHECK_THROWS_AS(Curve::for_strength(81), std::invalid_argument);
}

TEST_CASE("group laws hold on random points") {
  Rng rng(1234);
  for (const auto& name : {"P-192", "P-256", "P-521"}) {
    const Curve& curve = Curve::by_name(name);
    const Bigint& n = curve.order();
    Bigint k1 = rng.range(1, n);
    Bigint k2 = rng.range(1, n);
    Point P1 = curve.mul_base(k1);
    Point P2 = curve.mul_base(k2);
    CHECK(curve.on_curve(P1));

    // (k1 + k2) G == k1 G + k2 G
    CHECK(curve.mul_base((k1 + k2) % n) == curve.add(P1, P2));
    // commutativity
    CHECK(curve.add(P1, P2) == curve.add(P2, P1));
    // doubling vs addition of equal points
    CHECK(curve.dbl(P1) == curve.add(P1, P1));
    // identity and inverse
    CHECK(curve.add(P1, Point::identity()) == P1);
    CHECK(curve.add(P1, curve.negate(P1)).infinity);
    // n * P == identity for any point in the group
    CHECK(curve.mul(n, P1).infinity);
  }
}

TEST_CASE("small-scalar multiples match repeated addition") {
  const Curve& curve = Curve::by_name("P-256");
  Point acc = Point::identity();
  for (unsigned k = 1; k <= 20; ++k) {
    acc = curve.add(acc, curve.base_point());
    CHECK(curve.mul_base(k) == acc);
  }
  CHECK(curve.mul_base(0).infinity);
}

TEST_CASE("point encoding round trips and validates") {
  const Curve& curve = Curve::by_name("P-384");
  Rng rng(5);
  Point pt = curve.mul_base(rng.range(1, curve.order()));
  auto bytes = curve.encode_point(pt);
  CHECK(bytes.size() == 2 * curve.coord_bytes());
  CHECK(curve.decode_point(bytes) == pt);
  CHECK(curve.point_from_hex(curve.point_hex(pt)) == pt);

  CHECK_THROWS_AS(curve.encode_point(Point::identity()),
                  std::invalid_argument);
  bytes[7] ^= 1;  // corrupt a coordinate byte
  CHECK_THROWS_AS(curve.decode_point(bytes), std::invalid_argument);
}

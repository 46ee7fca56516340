#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bke/bigint.hpp"

namespace bke::ecc {

/// Affine point; (0, 0, infinity=true) is the group identity.
struct Point {
  Bigint x;
  Bigint y;
  bool infinity = false;

  static Point identity() { return Point{0, 0, true}; }
  bool operator==(const Point& other) const;
};

/// Short-Weierstrass prime curve y^2 = x^3 + ax + b over GF(p) with base
/// point G of prime order n. The five NIST curves are available through
/// by_name() / for_strength(); construction checks that G is on the curve
/// and that n*G is the identity.
class Curve {
 public:
  static const Curve& by_name(std::string_view name);
  /// NIST security-strength mapping: 80 -> P-192, 112 -> P-224,
  /// 128 -> P-256, 192 -> P-384, 256 -> P-521.
  static const Curve& for_strength(int strength);
  static const std::vector<std::string>& names();

  const std::string& name() const { return name_; }
  const Bigint& field_prime() const { return p_; }
  const Bigint& coeff_a() const { return a_; }
  const Bigint& coeff_b() const { return b_; }
  const Point& base_point() const { return g_; }
  const Bigint& order() const { return n_; }
  /// Bytes per coordinate in the fixed-width encoding.
  size_t coord_bytes() const { return coord_bytes_; }

  bool on_curve(const Point& pt) const;

  Point add(const Point& lhs, const Point& rhs) const;
  Point dbl(const Point& pt) const;
  Point negate(const Point& pt) const;
  /// Scalar multiplication, k >= 0 (k = 0 yields the identity).
  Point mul(const Bigint& k, const Point& pt) const;
  Point mul_base(const Bigint& k) const;

  /// Uncompressed x || y, fixed width per coordinate. Throws on the
  /// identity (it has no affine encoding).
  std::vector<uint8_t> encode_point(const Point& pt) const;
  std::string point_hex(const Point& pt) const;
  /// Parses and validates; throws std::invalid_argument off curve.
  Point decode_point(std::span<const uint8_t> bytes) const;
  Point point_from_hex(const std::string& hex) const;

  Curve(std::string name, Bigint p, Bigint a, Bigint b, Bigint gx, Bigint gy,
        Bigint n);

 private:
  std::string name_;
  Bigint p_, a_, b_;
  Point g_;
  Bigint n_;
  size_t coord_bytes_;
};

}  // namespace bke::ecc

#include "bke/curve.hpp"

#include <map>
#include <stdexcept>

namespace bke::ecc {

bool Point::operator==(const Point& other) const {
  if (infinity || other.infinity) return infinity == other.infinity;
  return x == other.x && y == other.y;
}

namespace {

// Jacobian coordinates: x = X/Z^2, y = Y/Z^3; Z == 0 is the identity.
struct Jac {
  Bigint X, Y, Z;
  bool is_identity() const { return Z == 0; }
  static Jac identity() { return Jac{1, 1, 0}; }
  static Jac from_affine(const Point& pt) {
    if (pt.infinity) return identity();
    return Jac{pt.x, pt.y, 1};
  }
};

Bigint modp(const Bigint& v, const Bigint& p) {
  Bigint r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return r;
}

}  // namespace

Curve::Curve(std::string name, Bigint p, Bigint a, Bigint b, Bigint gx,
             Bigint gy, Bigint n)
    : name_(std::move(name)),
      p_(std::move(p)),
      a_(std::move(a)),
      b_(std::move(b)),
      g_{std::move(gx), std::move(gy), false},
      n_(std::move(n)),
      coord_bytes_((bit_length(p_) + 7) / 8) {
  if (!on_curve(g_)) throw std::invalid_argument(name_ + ": G not on curve");
  if (!mul_base(n_).infinity)
    throw std::invalid_argument(name_ + ": G does not have order n");
}

bool Curve::on_curve(const Point& pt) const {
  if (pt.infinity) return true;
  if (pt.x < 0 || pt.x >= p_ || pt.y < 0 || pt.y >= p_) return false;
  Bigint lhs = modp(pt.y * pt.y, p_);
  Bigint rhs = modp(pt.x * pt.x * pt.x + a_ * pt.x + b_, p_);
  return lhs == rhs;
}

Point Curve::negate(const Point& pt) const {
  if (pt.infinity) return pt;
  return Point{pt.x, pt.y == 0 ? Bigint(0) : p_ - pt.y, false};
}

namespace {

Jac jac_double(const Jac& pt, const Bigint& a, const Bigint& p) {
  if (pt.is_identity() || pt.Y == 0) return Jac::identity();
  Bigint ysq = modp(pt.Y * pt.Y, p);
  Bigint s = modp(4 * pt.X * ysq, p);
  Bigint zsq = modp(pt.Z * pt.Z, p);
  Bigint m = modp(3 * pt.X * pt.X + a * zsq * zsq, p);
  Bigint x3 = modp(m * m - 2 * s, p);
  Bigint y3 = modp(m * (s - x3) - 8 * ysq * ysq, p);
  Bigint z3 = modp(2 * pt.Y * pt.Z, p);
  return Jac{x3, y3, z3};
}

// Mixed addition with an affine (Z = 1) second operand.
Jac jac_add_affine(const Jac& lhs, const Point& rhs, const Bigint& a,
                   const Bigint& p) {
  if (rhs.infinity) return lhs;
  if (lhs.is_identity()) return Jac::from_affine(rhs);
  Bigint zsq = modp(lhs.Z * lhs.Z, p);
  Bigint u2 = modp(rhs.x * zsq, p);
  Bigint s2 = modp(rhs.y * zsq * lhs.Z, p);
  if (u2 == lhs.X) {
    if (s2 == lhs.Y) return jac_double(lhs, a, p);
    return Jac::identity();
  }
  Bigint h = modp(u2 - lhs.X, p);
  Bigint r = modp(s2 - lhs.Y, p);
  Bigint hsq = modp(h * h, p);
  Bigint hcu = modp(hsq * h, p);
  Bigint x3 = modp(r * r - hcu - 2 * lhs.X * hsq, p);
  Bigint y3 = modp(r * (lhs.X * hsq - x3) - lhs.Y * hcu, p);
  Bigint z3 = modp(lhs.Z * h, p);
  return Jac{x3, y3, z3};
}

Point jac_to_affine(const Jac& pt, const Bigint& p) {
  if (pt.is_identity()) return Point::identity();
  Bigint zinv = invmod(pt.Z, p);
  Bigint zinv2 = modp(zinv * zinv, p);
  return Point{modp(pt.X * zinv2, p), modp(pt.Y * zinv2 * zinv, p), false};
}

}  // namespace

Point Curve::dbl(const Point& pt) const {
  return jac_to_affine(jac_double(Jac::from_affine(pt), a_, p_), p_);
}

Point Curve::add(const Point& lhs, const Point& rhs) const {
  if (lhs.infinity) return rhs;
  if (rhs.infinity) return lhs;
  if (lhs.x == rhs.x && lhs.y != rhs.y) return Point::identity();
  if (lhs == rhs) return dbl(lhs);
  return jac_to_affine(jac_add_affine(Jac::from_affine(lhs), rhs, a_, p_), p_);
}

Point Curve::mul(const Bigint& k, const Point& pt) const {
  if (k < 0) throw std::invalid_argument("Curve::mul: negative scalar");
  if (k == 0 || pt.infinity) return Point::identity();
  Jac acc = Jac::identity();
  for (long i = static_cast<long>(bit_length(k)) - 1; i >= 0; --i) {
    acc = jac_double(acc, a_, p_);
    if (mpz_tstbit(k.get_mpz_t(), static_cast<mp_bitcnt_t>(i)))
      acc = jac_add_affine(acc, pt, a_, p_);
  }
  return jac_to_affine(acc, p_);
}

Point Curve::mul_base(const Bigint& k) const { return mul(k, g_); }

std::vector<uint8_t> Curve::encode_point(const Point& pt) const {
  if (pt.infinity)
    throw std::invalid_argument("encode_point: identity has no encoding");
  auto out = to_bytes_be(pt.x, coord_bytes_);
  auto y = to_bytes_be(pt.y, coord_bytes_);
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

std::string Curve::point_hex(const Point& pt) const {
  auto bytes = encode_point(pt);
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (uint8_t b : bytes) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 0xf]);
  }
  return s;
}

Point Curve::decode_point(std::span<const uint8_t> bytes) const {
  if (bytes.size() != 2 * coord_bytes_)
    throw std::invalid_argument("decode_point: bad length");
  Point pt{from_bytes_be(bytes.subspan(0, coord_bytes_)),
           from_bytes_be(bytes.subspan(coord_bytes_)), false};
  if (!on_curve(pt)) throw std::invalid_argument("decode_point: off curve");
  return pt;
}

Point Curve::point_from_hex(const std::string& hex) const {
  if (hex.size() % 2 != 0)
    throw std::invalid_argument("point_from_hex: odd length");
  std::vector<uint8_t> bytes(hex.size() / 2);
  for (size_t i = 0; i < bytes.size(); ++i) {
    bytes[i] = static_cast<uint8_t>(
        std::stoi(hex.substr(2 * i, 2), nullptr, 16));
  }
  return decode_point(bytes);
}

namespace {

// NIST SP 800-186 / SEC 2 domain parameters.
Curve make_p192() {
  Bigint p = from_hex("fffffffffffffffffffffffffffffffeffffffffffffffff");
  return Curve(
      "P-192", p, p - 3,
      from_hex("64210519e59c80e70fa7e9ab72243049feb8deecc146b9b1"),
      from_hex("188da80eb03090f67cbf20eb43a18800f4ff0afd82ff1012"),
      from_hex("07192b95ffc8da78631011ed6b24cdd573f977a11e794811"),
      from_hex("ffffffffffffffffffffffff99def836146bc9b1b4d22831"));
}

Curve make_p224() {
  Bigint p =
      from_hex("ffffffffffffffffffffffffffffffff000000000000000000000001");
  return Curve(
      "P-224", p, p - 3,
      from_hex("b4050a850c04b3abf54132565044b0b7d7bfd8ba270b39432355ffb4"),
      from_hex("b70e0cbd6bb4bf7f321390b94a03c1d356c21122343280d6115c1d21"),
      from_hex("bd376388b5f723fb4c22dfe6cd4375a05a07476444d5819985007e34"),
      from_hex("ffffffffffffffffffffffffffff16a2e0b8f03e13dd29455c5c2a3d"));
}

Curve make_p256() {
  Bigint p = from_hex(
      "ffffffff00000001000000000000000000000000ffffffffffffffffffffffff");
  return Curve(
      "P-256", p, p - 3,
      from_hex(
          "5ac635d8aa3a93e7b3ebbd55769886bc651d06b0cc53b0f63bce3c3e27d2604b"),
      from_hex(
          "6b17d1f2e12c4247f8bce6e563a440f277037d812deb33a0f4a13945d898c296"),
      from_hex(
          "4fe342e2fe1a7f9b8ee7eb4a7c0f9e162bce33576b315ececbb6406837bf51f5"),
      from_hex(
          "ffffffff00000000ffffffffffffffffbce6faada7179e84f3b9cac2fc632551"));
}

Curve make_p384() {
  Bigint p = from_hex(
      "fffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffe"
      "ffffffff0000000000000000ffffffff");
  return Curve(
      "P-384", p, p - 3,
      from_hex("b3312fa7e23ee7e4988e056be3f82d19181d9c6efe8141120314088f"
               "5013875ac656398d8a2ed19d2a85c8edd3ec2aef"),
      from_hex("aa87ca22be8b05378eb1c71ef320ad746e1d3b628ba79b9859f741e0"
               "82542a385502f25dbf55296c3a545e3872760ab7"),
      from_hex("3617de4a96262c6f5d9e98bf9292dc29f8f41dbd289a147ce9da3113"
               "b5f0b8c00a60b1ce1d7e819d7a431d7c90ea0e5f"),
      from_hex("ffffffffffffffffffffffffffffffffffffffffffffffffc7634d81"
               "f4372ddf581a0db248b0a77aecec196accc52973"));
}

Curve make_p521() {
  Bigint p = (Bigint(1) << 521) - 1;  // Mersenne prime 2^521 - 1
  return Curve(
      "P-521", p, p - 3,
      from_hex("51953eb9618e1c9a1f929a21a0b68540eea2da725b99b315f3b8b4899"
               "18ef109e156193951ec7e937b1652c0bd3bb1bf073573df883d2c34f1"
               "ef451fd46b503f00"),
      from_hex("c6858e06b70404e9cd9e3ecb662395b4429c648139053fb521f828af6"
               "06b4d3dbaa14b5e77efe75928fe1dc127a2ffa8de3348b3c1856a429b"
               "f97e7e31c2e5bd66"),
      from_hex("11839296a789a3bc0045c8a5fb42c7d1bd998f54449579b446817afbd"
               "17273e662c97ee72995ef42640c550b9013fad0761353c7086a272c24"
               "088be94769fd16650"),
      from_hex("1fffffffffffffffffffffffffffffffffffffffffffffffffffffff"
               "ffffffffffa51868783bf2f966b7fcc0148f709a5d03bb5c9b8899c47"
               "aebb6fb71e91386409"));
}

const std::map<std::string, Curve, std::less<>>& curve_table() {
  static const std::map<std::string, Curve, std::less<>> table = [] {
    std::map<std::string, Curve, std::less<>> t;
    t.emplace("P-192", make_p192());
    t.emplace("P-224", make_p224());
    t.emplace("P-256", make_p256());
    t.emplace("P-384", make_p384());
    t.emplace("P-521", make_p521());
    return t;
  }();
  return table;
}

}  // namespace

const Curve& Curve::by_name(std::string_view name) {
  const auto& table = curve_table();
  auto it = table.find(name);
  if (it == table.end())
    throw std::invalid_argument("unknown curve: " + std::string(name));
  return it->second;
}

const Curve& Curve::for_strength(int strength) {
  switch (strength) {
    case 80:
      return by_name("P-192");
    case 112:
      return by_name("P-224");
    case 128:
      return by_name("P-256");
    case 192:
      return by_name("P-384");
    case 256:
      return by_name("P-521");
    default:
      throw std::invalid_argument("unsupported security strength: " +
                                  std::to_string(strength));
  }
}

const std::vector<std::string>& Curve::names() {
  static const std::vector<std::string> names_list = {
      "P-192", "P-224", "P-256", "P-384", "P-521"};
  return names_list;
}

}  // namespace bke::ecc

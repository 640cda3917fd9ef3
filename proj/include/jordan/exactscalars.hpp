#pragma once

#include <cstdint>
#include <compare>
#include <optional>
#include <string>

namespace jordan {

using i64 = std::int64_t;

/// Nonnegative residue of v modulo m (m > 0).
constexpr i64 mod_floor(i64 v, i64 m) {
  const i64 r = v % m;
  return r < 0 ? r + m : r;
}

bool is_prime(i64 n);

/*
 * An N-th root of unity stored by its exponent against a fixed abstract
 * primitive root zeta_N. No field is involved; the value is zeta_N^exponent.
 */
class RootOfUnity {
 public:
  RootOfUnity() = default;
  RootOfUnity(i64 modulus, i64 exponent);

  static RootOfUnity one(i64 modulus) { return RootOfUnity(modulus, 0); }

  i64 modulus() const { return modulus_; }
  i64 exponent() const { return exponent_; }

  bool is_one() const { return exponent_ == 0; }

  /// Multiplicative order of the value (divides modulus).
  i64 order() const;

  /// Reinterpret in mu_target; requires modulus() | target.
  RootOfUnity embed(i64 target) const;

  RootOfUnity inverse() const { return RootOfUnity(modulus_, -exponent_); }
  RootOfUnity pow(i64 k) const { return RootOfUnity(modulus_, exponent_ * k); }

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
  friend auto operator<=>(const RootOfUnity&, const RootOfUnity&) = default;

  std::string str() const;

 private:
  i64 modulus_ = 1;
  i64 exponent_ = 0;
};

/// Product in mu_N. Throws ModulusMismatch unless both moduli agree.
RootOfUnity ru_mul(const RootOfUnity& a, const RootOfUnity& b);
RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);

/// Element of the prime field F_p.
class Fp {
 public:
  Fp() = default;
  Fp(i64 p, i64 value) : p_(p), v_(mod_floor(value, p)) {}

  i64 p() const { return p_; }
  i64 value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator+(const Fp& o) const;
  Fp operator-(const Fp& o) const;
  Fp operator*(const Fp& o) const;
  Fp operator/(const Fp& o) const;
  Fp operator-() const { return Fp(p_, -v_); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  Fp inverse() const;
  Fp pow(i64 e) const;

  /// Multiplicative order; throws on zero.
  i64 order() const;

  friend bool operator==(const Fp&, const Fp&) = default;
  friend auto operator<=>(const Fp&, const Fp&) = default;

 private:
  void check_same(const Fp& o) const;

  i64 p_ = 2;
  i64 v_ = 0;
};

/// A square root of a in F_p, if any (the smaller representative).
std::optional<Fp> fp_sqrt(const Fp& a);

/// Legendre symbol as -1, 0, 1.
int legendre(const Fp& a);

/// Smallest element of F_p^* whose multiplicative order is exactly n.
/// Throws NoRootsOfUnity when n does not divide p-1.
Fp primitive_root_of_unity(i64 p, i64 n);

/// g^exponent, where g must have exact order a.modulus() in F_p^*.
/// Throws NoRootsOfUnity (N does not divide p-1) or BadGenerator.
Fp ru_embed_in_field(const RootOfUnity& a, i64 p, const Fp& g);

/// Inverse of ru_embed_in_field: the exponent e with g^e == value.
/// Returns nullopt when value is not a power of g.
std::optional<RootOfUnity> field_to_root(const Fp& value, const Fp& g, i64 n);

}  // namespace jordan

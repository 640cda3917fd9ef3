#include "jordan/exactscalars.hpp"

#include <numeric>

#include "jordan/error.hpp"

namespace jordan {

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

RootOfUnity::RootOfUnity(i64 modulus, i64 exponent) : modulus_(modulus) {
  if (modulus < 1) throw Error(ErrorCode::ModulusMismatch, "root of unity modulus must be >= 1");
  exponent_ = mod_floor(exponent, modulus);
}

i64 RootOfUnity::order() const { return modulus_ / std::gcd(modulus_, exponent_); }

RootOfUnity RootOfUnity::embed(i64 target) const {
  if (target < 1 || target % modulus_ != 0)
    throw Error(ErrorCode::ModulusMismatch, "cannot embed mu_" + std::to_string(modulus_) +
                                                " into mu_" + std::to_string(target));
  return RootOfUnity(target, exponent_ * (target / modulus_));
}

std::string RootOfUnity::str() const {
  return "zeta_" + std::to_string(modulus_) + "^" + std::to_string(exponent_);
}

RootOfUnity ru_mul(const RootOfUnity& a, const RootOfUnity& b) {
  if (a.modulus() != b.modulus())
    throw Error(ErrorCode::ModulusMismatch, "mu_" + std::to_string(a.modulus()) + " vs mu_" +
                                                std::to_string(b.modulus()));
  return RootOfUnity(a.modulus(), a.exponent() + b.exponent());
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) { return ru_mul(a, b); }

void Fp::check_same(const Fp& o) const {
  if (p_ != o.p_)
    throw Error(ErrorCode::ModulusMismatch,
                "F_" + std::to_string(p_) + " vs F_" + std::to_string(o.p_));
}

Fp Fp::operator+(const Fp& o) const {
  check_same(o);
  return Fp(p_, v_ + o.v_);
}

Fp Fp::operator-(const Fp& o) const {
  check_same(o);
  return Fp(p_, v_ - o.v_);
}

Fp Fp::operator*(const Fp& o) const {
  check_same(o);
  return Fp(p_, v_ * o.v_);
}

Fp Fp::operator/(const Fp& o) const { return *this * o.inverse(); }

Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(p_));
  // extended Euclid
  i64 r0 = p_, r1 = v_, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const i64 q = r0 / r1;
    i64 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return Fp(p_, s0);
}

Fp Fp::pow(i64 e) const {
  if (e < 0) return inverse().pow(-e);
  Fp base = *this, acc(p_, 1);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

i64 Fp::order() const {
  if (v_ == 0) throw std::domain_error("order of zero");
  const i64 group = p_ - 1;
  i64 best = group;
  for (i64 d = 1; d * d <= group; ++d) {
    if (group % d != 0) continue;
    if (pow(d).value() == 1) return d;
    if (pow(group / d).value() == 1) best = std::min(best, group / d);
  }
  return best;
}

int legendre(const Fp& a) {
  if (a.is_zero()) return 0;
  if (a.p() == 2) return 1;
  return a.pow((a.p() - 1) / 2).value() == 1 ? 1 : -1;
}

std::optional<Fp> fp_sqrt(const Fp& a) {
  const i64 p = a.p();
  if (a.is_zero()) return a;
  if (p == 2) return a;
  if (legendre(a) != 1) return std::nullopt;
  // Tonelli-Shanks
  i64 q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  Fp z(p, 2);
  while (legendre(z) != -1) z = z + Fp(p, 1);
  Fp c = z.pow(q), t = a.pow(q), r = a.pow((q + 1) / 2);
  i64 m = s;
  while (t.value() != 1) {
    i64 i = 0;
    Fp tt = t;
    while (tt.value() != 1) {
      tt = tt * tt;
      ++i;
    }
    Fp b = c;
    for (i64 k = 0; k < m - i - 1; ++k) b = b * b;
    r = r * b;
    c = b * b;
    t = t * c;
    m = i;
  }
  const Fp other = -r;
  return other.value() < r.value() ? other : r;
}

Fp primitive_root_of_unity(i64 p, i64 n) {
  if (n < 1 || (p - 1) % n != 0)
    throw Error(ErrorCode::NoRootsOfUnity,
                std::to_string(n) + " does not divide " + std::to_string(p - 1));
  for (i64 v = 1; v < p; ++v) {
    const Fp g(p, v);
    if (g.order() == n) return g;
  }
  throw Error(ErrorCode::NoRootsOfUnity, "no element of order " + std::to_string(n));
}

Fp ru_embed_in_field(const RootOfUnity& a, i64 p, const Fp& g) {
  const i64 n = a.modulus();
  if ((p - 1) % n != 0)
    throw Error(ErrorCode::NoRootsOfUnity,
                std::to_string(n) + " does not divide " + std::to_string(p - 1));
  if (g.p() != p || g.is_zero() || g.order() != n)
    throw Error(ErrorCode::BadGenerator, "generator does not have order " + std::to_string(n));
  return g.pow(a.exponent());
}

std::optional<RootOfUnity> field_to_root(const Fp& value, const Fp& g, i64 n) {
  Fp acc(g.p(), 1);
  for (i64 e = 0; e < n; ++e) {
    if (acc == value) return RootOfUnity(n, e);
    acc = acc * g;
  }
  return std::nullopt;
}

}  // namespace jordan

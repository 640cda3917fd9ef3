#include "jordan/curve.hpp"

#include <charconv>

#include "jordan/error.hpp"

namespace jordan {

namespace {

i64 parse_int(std::string_view token, std::string_view what) {
  i64 v = 0;
  while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
  while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
    throw Error(ErrorCode::ParseError, "bad " + std::string(what) + " '" + std::string(token) + "'");
  return v;
}

}  // namespace

std::string CurvePoint::str() const {
  return infinity ? "inf" : std::to_string(x) + "," + std::to_string(y);
}

CurvePoint parse_point(std::string_view text) {
  if (text == "inf" || text == "O") return CurvePoint::at_infinity();
  const auto comma = text.find(',');
  if (comma == std::string_view::npos)
    throw Error(ErrorCode::ParseError, "point must be 'inf' or 'x,y'");
  return CurvePoint::affine(parse_int(text.substr(0, comma), "x"),
                            parse_int(text.substr(comma + 1), "y"));
}

Curve::Curve(i64 p, i64 a, i64 b) : p_(p), a_(mod_floor(a, p > 0 ? p : 1)), b_(mod_floor(b, p > 0 ? p : 1)) {
  if (p < 5 || !is_prime(p)) throw Error(ErrorCode::NotPrime, "need a prime p >= 5, got " + std::to_string(p));
  const Fp disc = Fp(p, 4) * this->a().pow(3) + Fp(p, 27) * this->b().pow(2);
  if (disc.is_zero()) throw Error(ErrorCode::Singular, "4a^3 + 27b^2 = 0 for " + str());
}

Curve Curve::parse(std::string_view text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string_view::npos) throw Error(ErrorCode::ParseError, "curve must be 'p:a:b'");
  return Curve(parse_int(text.substr(0, c1), "p"), parse_int(text.substr(c1 + 1, c2 - c1 - 1), "a"),
               parse_int(text.substr(c2 + 1), "b"));
}

std::string Curve::str() const {
  return std::to_string(p_) + ":" + std::to_string(a_) + ":" + std::to_string(b_);
}

bool Curve::contains(const CurvePoint& pt) const {
  if (pt.infinity) return true;
  if (pt.x < 0 || pt.x >= p_ || pt.y < 0 || pt.y >= p_) return false;
  return field(pt.y) * field(pt.y) == rhs(field(pt.x));
}

void Curve::require(const CurvePoint& pt) const {
  if (!contains(pt)) throw Error(ErrorCode::OffCurve, pt.str() + " is not on " + str());
}

CurvePoint Curve::add_unchecked(const CurvePoint& u, const CurvePoint& v) const {
  if (u.infinity) return v;
  if (v.infinity) return u;
  const Fp x1 = field(u.x), y1 = field(u.y), x2 = field(v.x), y2 = field(v.y);
  Fp slope;
  if (u.x == v.x) {
    if ((y1 + y2).is_zero()) return CurvePoint::at_infinity();
    slope = (Fp(p_, 3) * x1 * x1 + a()) / (y1 + y1);
  } else {
    slope = (y2 - y1) / (x2 - x1);
  }
  const Fp x3 = slope * slope - x1 - x2;
  const Fp y3 = slope * (x1 - x3) - y1;
  return CurvePoint::affine(x3.value(), y3.value());
}

CurvePoint Curve::add(const CurvePoint& u, const CurvePoint& v) const {
  require(u);
  require(v);
  return add_unchecked(u, v);
}

CurvePoint Curve::neg(const CurvePoint& u) const {
  require(u);
  if (u.infinity) return u;
  return CurvePoint::affine(u.x, mod_floor(-u.y, p_));
}

CurvePoint Curve::mul(i64 n, const CurvePoint& u) const {
  require(u);
  CurvePoint base = n < 0 ? neg(u) : u;
  if (n < 0) n = -n;
  CurvePoint acc;
  while (n > 0) {
    if (n & 1) acc = add_unchecked(acc, base);
    base = add_unchecked(base, base);
    n >>= 1;
  }
  return acc;
}

i64 Curve::point_order(const CurvePoint& u) const {
  require(u);
  CurvePoint acc = u;
  i64 k = 1;
  while (!acc.infinity) {
    acc = add_unchecked(acc, u);
    ++k;
  }
  return k;
}

std::vector<CurvePoint> enumerate_points(const Curve& curve, i64 p_budget) {
  const i64 p = curve.p();
  if (p > p_budget)
    throw Error(ErrorCode::BudgetExceeded, "p = " + std::to_string(p) + " exceeds " + std::to_string(p_budget));
  std::vector<std::vector<i64>> roots(static_cast<std::size_t>(p));
  for (i64 y = 0; y < p; ++y) roots[static_cast<std::size_t>(y * y % p)].push_back(y);
  std::vector<CurvePoint> out{CurvePoint::at_infinity()};
  for (i64 x = 0; x < p; ++x) {
    const auto r = curve.rhs(curve.field(x)).value();
    for (i64 y : roots[static_cast<std::size_t>(r)]) out.push_back(CurvePoint::affine(x, y));
  }
  return out;
}

i64 count_points(const Curve& curve) {
  const i64 p = curve.p();
  std::vector<int> chi(static_cast<std::size_t>(p), -1);
  chi[0] = 0;
  for (i64 y = 1; y < p; ++y) chi[static_cast<std::size_t>(y * y % p)] = 1;
  i64 total = p + 1;
  for (i64 x = 0; x < p; ++x) total += chi[static_cast<std::size_t>(curve.rhs(curve.field(x)).value())];
  return total;
}

std::vector<CurvePoint> torsion_subgroup(const Curve& curve, i64 n, i64 p_budget) {
  std::vector<CurvePoint> out;
  for (const auto& pt : enumerate_points(curve, p_budget))
    if (curve.mul(n, pt).infinity) out.push_back(pt);
  return out;
}

bool has_full_torsion(const Curve& curve, i64 n) {
  if (n < 1 || (curve.p() - 1) % n != 0) return false;
  if (count_points(curve) % (n * n) != 0) return false;
  return static_cast<i64>(torsion_subgroup(curve, n, curve.p()).size()) == n * n;
}

std::vector<Curve> curve_search(i64 n, i64 p_max, std::size_t limit) {
  return curve_search(n, p_max, limit, [](const Curve&) { return true; });
}

std::vector<Curve> curve_search(i64 n, i64 p_max, std::size_t limit,
                                const std::function<bool(const Curve&)>& accept) {
  std::vector<Curve> out;
  for (i64 p = 5; p <= p_max; ++p) {
    if (!is_prime(p) || (p - 1) % n != 0) continue;
    for (i64 a = 0; a < p; ++a)
      for (i64 b = 0; b < p; ++b) {
        const Fp disc = Fp(p, 4) * Fp(p, a).pow(3) + Fp(p, 27) * Fp(p, b).pow(2);
        if (disc.is_zero()) continue;
        const Curve c(p, a, b);
        if (!has_full_torsion(c, n) || !accept(c)) continue;
        out.push_back(c);
        if (limit && out.size() >= limit) return out;
      }
  }
  return out;
}

Divisor Divisor::point(const CurvePoint& pt, i64 mult) {
  Divisor d;
  d.add(pt, mult);
  return d;
}

i64 Divisor::coefficient(const CurvePoint& pt) const {
  const auto it = terms_.find(pt);
  return it == terms_.end() ? 0 : it->second;
}

void Divisor::add(const CurvePoint& pt, i64 mult) {
  if (mult == 0) return;
  const i64 m = (terms_[pt] += mult);
  if (m == 0) terms_.erase(pt);
}

Divisor Divisor::operator+(const Divisor& o) const {
  Divisor d = *this;
  for (const auto& [pt, m] : o.terms_) d.add(pt, m);
  return d;
}

Divisor Divisor::operator-() const { return scaled(-1); }

Divisor Divisor::operator-(const Divisor& o) const { return *this + (-o); }

Divisor Divisor::scaled(i64 k) const {
  Divisor d;
  if (k == 0) return d;
  for (const auto& [pt, m] : terms_) d.terms_[pt] = m * k;
  return d;
}

i64 Divisor::degree() const {
  i64 s = 0;
  for (const auto& [pt, m] : terms_) s += m;
  return s;
}

CurvePoint Divisor::sum(const Curve& curve) const {
  CurvePoint acc;
  for (const auto& [pt, m] : terms_) acc = curve.add(acc, curve.mul(m, pt));
  return acc;
}

Divisor Divisor::pullback(const Curve& curve, const CurvePoint& y) const {
  if (y.infinity) return *this;
  Divisor d;
  for (const auto& [pt, m] : terms_) d.add(curve.sub(pt, y), m);
  return d;
}

std::string Divisor::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [pt, m] : terms_) {
    if (!out.empty()) out += " ";
    out += (m > 0 ? "+" : "") + std::to_string(m) + "(" + pt.str() + ")";
  }
  return out;
}

bool is_principal(const Curve& curve, const Divisor& d) {
  return d.degree() == 0 && d.sum(curve).infinity;
}

}  // namespace jordan

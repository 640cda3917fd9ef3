#include "jordan/heisenberg.hpp"

#include <algorithm>

#include "jordan/error.hpp"

namespace jordan {

namespace {

void require_same(const FinAbGroup& a, const FinAbGroup& b) {
  if (!(a == b))
    throw Error(ErrorCode::GroupMismatch, "K(" + a.str() + ") vs K(" + b.str() + ")");
}

void check_element(const HeisElement& g) {
  require_same(g.x.group, g.ell.group);
  if (g.a.modulus() != g.x.group.order())
    throw Error(ErrorCode::GroupMismatch, "scalar is not in mu_N");
}

}  // namespace

HeisElement HeisElement::identity(const FinAbGroup& k) {
  return {RootOfUnity::one(k.order()), KElement::zero(k), Character::trivial(k)};
}

HeisElement HeisElement::central(const FinAbGroup& k, i64 exponent) {
  return {RootOfUnity(k.order(), exponent), KElement::zero(k), Character::trivial(k)};
}

HeisElement heis_mul(const HeisElement& g, const HeisElement& h) {
  check_element(g);
  check_element(h);
  require_same(g.x.group, h.x.group);
  return {g.a * h.a * char_eval(h.ell, g.x), g.x + h.x, g.ell * h.ell};
}

HeisElement heis_inv(const HeisElement& g) {
  check_element(g);
  return {g.a.inverse() * char_eval(g.ell, g.x), -g.x, g.ell.inverse()};
}

RootOfUnity heis_commutator(const HeisElement& g, const HeisElement& h) {
  const auto c = heis_mul(heis_mul(g, h), heis_mul(heis_inv(g), heis_inv(h)));
  return c.a;
}

HPoint heis_pi(const HeisElement& g) { return {g.x, g.ell}; }

HeisGroup::HeisGroup(FinAbGroup k) : k_(std::move(k)), n_(k_.order()) {}

std::uint32_t HeisGroup::mul(std::uint32_t a, std::uint32_t b) const {
  const i64 n2 = n_ * n_;
  const i64 sa = a / n2, xa = (a % n2) / n_, la = a % n_;
  const i64 sb = b / n2, xb = (b % n2) / n_, lb = b % n_;
  const i64 s = (sa + sb + k_.char_exponent(lb, xa)) % n_;
  return static_cast<std::uint32_t>(s * n2 + k_.add_index(xa, xb) * n_ + k_.add_index(la, lb));
}

std::uint32_t HeisGroup::inv(std::uint32_t a) const {
  const i64 n2 = n_ * n_;
  const i64 sa = a / n2, xa = (a % n2) / n_, la = a % n_;
  const i64 s = mod_floor(-sa + k_.char_exponent(la, xa), n_);
  return static_cast<std::uint32_t>(s * n2 + k_.neg_index(xa) * n_ + k_.neg_index(la));
}

std::uint32_t HeisGroup::index_of(const HeisElement& g) const {
  check_element(g);
  require_same(k_, g.x.group);
  return static_cast<std::uint32_t>(g.a.exponent() * n_ * n_ + g.x.index() * n_ + g.ell.index());
}

HeisElement HeisGroup::element(std::uint32_t idx) const {
  const i64 n2 = n_ * n_;
  return {RootOfUnity(n_, idx / n2), KElement::from_index(k_, (idx % n2) / n_),
          Character::from_index(k_, idx % n_)};
}

ElementList lagrangian_lift(const HeisGroup& g) {
  ElementList out;
  const i64 n = g.k().order();
  for (i64 a = 0; a < n; ++a)
    for (i64 x = 0; x < n; ++x) out.push_back(static_cast<std::uint32_t>(a * n * n + x * n));
  return out;
}

IndexReport min_abelian_index(const FinAbGroup& k, const MinIndexOptions& opt) {
  const HeisGroup g(k);
  IndexReport report;
  report.delta = k.delta();
  report.n = k.order();
  report.group_order = static_cast<i64>(g.order());
  report.certified_lower_bound = k.order();

  ElementList witness;
  if (g.order() <= opt.max_group_order) {
    LatticeOptions lat;
    lat.abelian_only = true;
    lat.max_generators = opt.max_generators ? opt.max_generators : 1 + 2 * k.rank();
    const auto subgroups = enumerate_subgroups(g, lat);
    report.abelian_subgroups_scanned = subgroups.size();
    // entries are sorted by element list, so the first largest one is the
    // lexicographically least minimal-index witness
    for (const auto& s : subgroups)
      if (s.elements.size() > witness.size()) witness = s.elements;
    report.min_abelian_index = static_cast<i64>(g.order() / witness.size());
  } else {
    witness = lagrangian_lift(g);
  }
  report.witness_order = witness.size();
  for (auto e : greedy_generators(g, witness)) report.witness_generators.push_back(g.element(e));
  return report;
}

nlohmann::json to_json(const HeisElement& g) {
  return {{"a", g.a.exponent()}, {"x", g.x.coords}, {"ell", g.ell.coords}};
}

nlohmann::json to_json(const IndexReport& r) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : r.witness_generators) gens.push_back(to_json(g));
  return {{"delta", r.delta},
          {"N", r.n},
          {"group_order", r.group_order},
          {"min_abelian_index",
           r.min_abelian_index ? nlohmann::json(*r.min_abelian_index) : nlohmann::json(nullptr)},
          {"certified_lower_bound", r.certified_lower_bound},
          {"witness_generators", gens}};
}

}  // namespace jordan

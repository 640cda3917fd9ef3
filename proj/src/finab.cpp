#include "jordan/finab.hpp"

#include <charconv>
#include <numeric>

#include "jordan/error.hpp"

namespace jordan {

namespace {

constexpr i64 kCharTableMaxOrder = 512;

void require_same(const FinAbGroup& a, const FinAbGroup& b) {
  if (!(a == b))
    throw Error(ErrorCode::GroupMismatch, "K(" + a.str() + ") vs K(" + b.str() + ")");
}

}  // namespace

FinAbGroup::FinAbGroup(std::vector<i64> delta) {
  for (std::size_t i = 0; i < delta.size(); ++i) {
    if (delta[i] < 1) throw Error(ErrorCode::BadDelta, "elementary divisors must be positive");
    if (i > 0 && delta[i - 1] % delta[i] != 0)
      throw Error(ErrorCode::BadDelta, "need d_{i+1} | d_i, got " + std::to_string(delta[i]) +
                                           " after " + std::to_string(delta[i - 1]));
  }
  auto data = std::make_shared<Data>();
  data->delta = std::move(delta);
  data->stride.assign(data->delta.size(), 1);
  for (std::size_t i = data->delta.size(); i-- > 0;) {
    data->stride[i] = data->order;
    data->order *= data->delta[i];
  }
  data_ = std::move(data);

  if (order() <= kCharTableMaxOrder) {
    const i64 n = order();
    std::vector<std::int32_t> table(static_cast<std::size_t>(n * n));
    for (i64 ell = 0; ell < n; ++ell) {
      const auto c = coords_of(ell);
      for (i64 x = 0; x < n; ++x) {
        const auto xc = coords_of(x);
        i64 e = 0;
        for (std::size_t i = 0; i < rank(); ++i) e += (n / this->delta()[i]) * c[i] * xc[i];
        table[ell * n + x] = static_cast<std::int32_t>(mod_floor(e, n));
      }
    }
    auto with_table = std::make_shared<Data>(*data_);
    with_table->char_table = std::move(table);
    data_ = std::move(with_table);
  }
}

FinAbGroup FinAbGroup::parse(std::string_view text) {
  std::vector<i64> delta;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto token = text.substr(pos, comma == std::string_view::npos ? text.size() - pos
                                                                        : comma - pos);
    i64 v = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    while (first < last && *first == ' ') ++first;
    while (last > first && *(last - 1) == ' ') --last;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || first == last)
      throw Error(ErrorCode::BadDelta, "cannot parse delta '" + std::string(text) + "'");
    delta.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return FinAbGroup(std::move(delta));
}

i64 FinAbGroup::index_of(const std::vector<i64>& coords) const {
  if (coords.size() != rank()) throw Error(ErrorCode::GroupMismatch, "coordinate count");
  i64 idx = 0;
  for (std::size_t i = 0; i < rank(); ++i) idx += mod_floor(coords[i], delta()[i]) * data_->stride[i];
  return idx;
}

std::vector<i64> FinAbGroup::coords_of(i64 index) const {
  std::vector<i64> c(rank());
  for (std::size_t i = 0; i < rank(); ++i) c[i] = (index / data_->stride[i]) % delta()[i];
  return c;
}

i64 FinAbGroup::add_index(i64 a, i64 b) const {
  i64 idx = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    const i64 s = data_->stride[i], d = delta()[i];
    idx += (((a / s) % d + (b / s) % d) % d) * s;
  }
  return idx;
}

i64 FinAbGroup::neg_index(i64 a) const {
  i64 idx = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    const i64 s = data_->stride[i], d = delta()[i];
    idx += ((d - (a / s) % d) % d) * s;
  }
  return idx;
}

i64 FinAbGroup::char_exponent(i64 ell, i64 x) const {
  const i64 n = order();
  if (!data_->char_table.empty()) return data_->char_table[ell * n + x];
  i64 e = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    const i64 s = data_->stride[i], d = delta()[i];
    e = mod_floor(e + (n / d) * ((ell / s) % d) * ((x / s) % d), n);
  }
  return e;
}

std::string FinAbGroup::str() const {
  std::string out;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (i) out += ",";
    out += std::to_string(delta()[i]);
  }
  return out.empty() ? "1" : out;
}

KElement KElement::operator+(const KElement& o) const {
  require_same(group, o.group);
  return from_index(group, group.add_index(index(), o.index()));
}

KElement KElement::operator-() const { return from_index(group, group.neg_index(index())); }

Character Character::operator*(const Character& o) const {
  require_same(group, o.group);
  return from_index(group, group.add_index(index(), o.index()));
}

Character Character::inverse() const { return from_index(group, group.neg_index(index())); }

RootOfUnity char_eval(const Character& ell, const KElement& x) {
  require_same(ell.group, x.group);
  return RootOfUnity(ell.group.order(), ell.group.char_exponent(ell.index(), x.index()));
}

HPoint HPoint::from_index(const FinAbGroup& g, i64 idx) {
  return {KElement::from_index(g, idx / g.order()), Character::from_index(g, idx % g.order())};
}

i64 HPoint::index() const { return x.index() * x.group.order() + ell.index(); }

HPoint HPoint::operator+(const HPoint& o) const { return {x + o.x, ell * o.ell}; }

RootOfUnity pairing_e(const HPoint& h1, const HPoint& h2) {
  require_same(h1.x.group, h2.x.group);
  require_same(h1.x.group, h1.ell.group);
  require_same(h2.x.group, h2.ell.group);
  return char_eval(h2.ell, h1.x) * char_eval(h1.ell, h2.x).inverse();
}

std::uint32_t HGroup::mul(std::uint32_t a, std::uint32_t b) const {
  const i64 n = k_.order();
  return static_cast<std::uint32_t>(k_.add_index(a / n, b / n) * n + k_.add_index(a % n, b % n));
}

std::uint32_t HGroup::neg(std::uint32_t a) const {
  const i64 n = k_.order();
  return static_cast<std::uint32_t>(k_.neg_index(a / n) * n + k_.neg_index(a % n));
}

i64 HGroup::pairing_exponent(std::uint32_t a, std::uint32_t b) const {
  const i64 n = k_.order();
  return mod_floor(k_.char_exponent(b % n, a / n) - k_.char_exponent(a % n, b / n), n);
}

bool HSubgroup::contains(const HPoint& h) const {
  require_same(group, h.x.group);
  return std::binary_search(elements.begin(), elements.end(),
                            static_cast<std::uint32_t>(h.index()));
}

std::vector<HPoint> HSubgroup::points() const {
  std::vector<HPoint> out;
  out.reserve(elements.size());
  for (auto e : elements) out.push_back(HPoint::from_index(group, e));
  return out;
}

namespace {

void check_budget(const FinAbGroup& k, std::size_t budget) {
  const auto h = static_cast<std::size_t>(k.order() * k.order());
  if (h > budget)
    throw Error(ErrorCode::BudgetExceeded, "#H_K = " + std::to_string(h) + " exceeds budget " +
                                               std::to_string(budget));
}

void require_subgroup(const HSubgroup& e) {
  if (!is_subgroup(HGroup(e.group), e.elements))
    throw Error(ErrorCode::NotASubgroup, "element list is not closed under addition");
}

}  // namespace

HSubgroup subgroup_span(const FinAbGroup& k, const std::vector<HPoint>& gens, std::size_t budget) {
  check_budget(k, budget);
  std::vector<std::uint32_t> idx;
  for (const auto& g : gens) {
    require_same(k, g.x.group);
    require_same(k, g.ell.group);
    idx.push_back(static_cast<std::uint32_t>(g.index()));
  }
  return {k, closure(HGroup(k), idx, budget)};
}

bool is_isotropic(const HSubgroup& e) {
  require_subgroup(e);
  const HGroup h(e.group);
  for (auto a : e.elements)
    for (auto b : e.elements)
      if (h.pairing_exponent(a, b) != 0) return false;
  return true;
}

HSubgroup orthogonal_complement(const HSubgroup& e) {
  require_subgroup(e);
  const HGroup h(e.group);
  HSubgroup out{e.group, {}};
  for (std::uint32_t a = 0; a < h.order(); ++a) {
    bool orth = true;
    for (auto b : e.elements) {
      if (h.pairing_exponent(a, b) != 0) {
        orth = false;
        break;
      }
    }
    if (orth) out.elements.push_back(a);
  }
  return out;
}

IsotropicWitness isotropic_certificate(const HSubgroup& e) {
  if (!is_isotropic(e)) throw Error(ErrorCode::NotIsotropic, "pairing is nontrivial on E");
  const HGroup h(e.group);
  IsotropicWitness w;
  w.n = e.group.order();
  w.elements = e;
  w.complement = orthogonal_complement(e);
  w.index = static_cast<i64>(h.order() / e.size());
  for (auto g : greedy_generators(h, e.elements)) w.generators.push_back(h.point(g));

  const auto size = static_cast<i64>(e.size());
  const auto h_order = static_cast<i64>(h.order());
  const bool inside = std::includes(w.complement.elements.begin(), w.complement.elements.end(),
                                    e.elements.begin(), e.elements.end());
  // #E * #(H/E^perp) = #E^2
  const bool dual = size * (h_order / static_cast<i64>(w.complement.size())) == size * size;
  if (!inside || !dual || w.n % size != 0 || w.index % w.n != 0)
    throw Error(ErrorCode::NotIsotropic, "isotropic index certificate failed for #E = " +
                                             std::to_string(size));
  return w;
}

std::vector<HSubgroup> all_subgroups(const FinAbGroup& k, std::size_t budget) {
  check_budget(k, budget);
  std::vector<HSubgroup> out;
  for (auto& entry : enumerate_subgroups(HGroup(k))) out.push_back({k, std::move(entry.elements)});
  return out;
}

}  // namespace jordan

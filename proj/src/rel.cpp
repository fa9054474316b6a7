#include "relcalc/rel.hpp"

#include <stdexcept>

#include "relcalc/partition.hpp"

namespace relcalc {

Rel Rel::from_pairs(Carrier d, Carrier c,
                    const std::vector<std::pair<std::size_t, std::size_t>>& ps) {
  Rel r(std::move(d), std::move(c));
  for (auto [x, y] : ps) {
    if (x >= r.dom.size || y >= r.cod.size)
      throw std::invalid_argument("relation pair out of range");
    r.add(x, y);
  }
  return r;
}

std::vector<std::pair<std::size_t, std::size_t>> Rel::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < dom.size; ++x)
    rows[x].for_each([&](std::size_t y) { out.emplace_back(x, y); });
  return out;
}

std::size_t Rel::pair_count() const {
  std::size_t n = 0;
  for (const auto& row : rows) n += row.count();
  return n;
}

Rel compose(const Rel& r, const Rel& s) {
  if (r.cod.size != s.dom.size)
    throw std::invalid_argument("compose: carrier mismatch between r.cod and s.dom");
  Rel out(r.dom, s.cod);
  for (std::size_t x = 0; x < r.dom.size; ++x)
    r.rows[x].for_each([&](std::size_t y) { out.rows[x] |= s.rows[y]; });
  return out;
}

Rel opposite(const Rel& r) {
  Rel out(r.cod, r.dom);
  for (std::size_t x = 0; x < r.dom.size; ++x)
    r.rows[x].for_each([&](std::size_t y) { out.add(y, x); });
  return out;
}

Rel diagonal(const Carrier& x) {
  Rel out(x, x);
  for (std::size_t i = 0; i < x.size; ++i) out.add(i, i);
  return out;
}

bool subset(const Rel& a, const Rel& b) {
  if (a.dom.size != b.dom.size || a.cod.size != b.cod.size)
    throw std::invalid_argument("subset: carrier mismatch");
  for (std::size_t x = 0; x < a.dom.size; ++x)
    if (!a.rows[x].subset_of(b.rows[x])) return false;
  return true;
}

Rel rel_union(const Rel& a, const Rel& b) {
  if (a.dom.size != b.dom.size || a.cod.size != b.cod.size)
    throw std::invalid_argument("union: carrier mismatch");
  Rel out = a;
  for (std::size_t x = 0; x < a.dom.size; ++x) out.rows[x] |= b.rows[x];
  return out;
}

RelFlags classify(const Rel& r) {
  RelFlags f;
  f.endo = r.dom.size == r.cod.size;
  // r . r^o . r = r, with r applied first
  f.difunctional = compose(compose(r, opposite(r)), r) == r;
  if (!f.endo) return f;
  f.reflexive = true;
  for (std::size_t x = 0; x < r.dom.size; ++x)
    if (!r.contains(x, x)) { f.reflexive = false; break; }
  f.symmetric = opposite(r) == r;
  f.transitive = subset(compose(r, r), r);
  f.equivalence = f.reflexive && f.symmetric && f.transitive;
  return f;
}

Rel equivalence_closure(const Rel& r) {
  if (r.dom.size != r.cod.size)
    throw std::invalid_argument("equivalence_closure: endo-relation required");
  UnionFind uf(r.dom.size);
  for (std::size_t x = 0; x < r.dom.size; ++x)
    r.rows[x].for_each([&](std::size_t y) { uf.unite(x, y); });
  return partition_to_rel(r.dom, Partition::from_union_find(uf));
}

Rel alternating_composite(const Rel& r, const Rel& s, std::size_t n) {
  if (n == 0)
    throw std::invalid_argument("alternating_composite: n must be at least 1");
  if (r.dom.size != r.cod.size || s.dom.size != s.cod.size ||
      r.dom.size != s.dom.size)
    throw std::invalid_argument("alternating_composite: carriers must agree");
  Rel acc = r;
  for (std::size_t i = 2; i <= n; ++i)
    acc = compose(acc, i % 2 == 0 ? s : r);
  return acc;
}

}  // namespace relcalc

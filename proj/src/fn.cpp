#include "relcalc/fn.hpp"

#include <stdexcept>

#include "relcalc/partition.hpp"

namespace relcalc {

FinFn::FinFn(Carrier d, Carrier c, std::vector<std::size_t> m)
    : dom(std::move(d)), cod(std::move(c)), map(std::move(m)) {
  if (map.size() != dom.size)
    throw std::invalid_argument("function: map length must equal dom size");
  for (auto v : map)
    if (v >= cod.size)
      throw std::invalid_argument("function: value out of codomain range");
}

FinFn FinFn::identity(const Carrier& x) {
  std::vector<std::size_t> m(x.size);
  for (std::size_t i = 0; i < x.size; ++i) m[i] = i;
  return FinFn(x, x, std::move(m));
}

FinFn FinFn::constant(const Carrier& d, const Carrier& c, std::size_t value) {
  return FinFn(d, c, std::vector<std::size_t>(d.size, value));
}

FinFn compose(const FinFn& f, const FinFn& g) {
  if (f.cod.size != g.dom.size)
    throw std::invalid_argument("compose: carrier mismatch between f.cod and g.dom");
  std::vector<std::size_t> m(f.dom.size);
  for (std::size_t x = 0; x < f.dom.size; ++x) m[x] = g.map[f.map[x]];
  return FinFn(f.dom, g.cod, std::move(m));
}

bool is_injective(const FinFn& f) {
  std::vector<bool> hit(f.cod.size, false);
  for (auto v : f.map) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool is_surjective(const FinFn& f) {
  std::vector<bool> hit(f.cod.size, false);
  for (auto v : f.map) hit[v] = true;
  for (auto h : hit)
    if (!h) return false;
  return true;
}

Rel graph(const FinFn& f) {
  Rel r(f.dom, f.cod);
  for (std::size_t x = 0; x < f.dom.size; ++x) r.add(x, f.map[x]);
  return r;
}

Rel kernel_pair(const FinFn& f) {
  Rel r(f.dom, f.dom);
  for (std::size_t x = 0; x < f.dom.size; ++x)
    for (std::size_t y = 0; y < f.dom.size; ++y)
      if (f.map[x] == f.map[y]) r.add(x, y);
  return r;
}

Factorization image_factorize(const FinFn& f) {
  std::vector<std::size_t> image;           // distinct values, first occurrence
  std::vector<std::size_t> value_to_image(f.cod.size, f.cod.size);
  std::vector<std::size_t> q(f.dom.size);
  for (std::size_t x = 0; x < f.dom.size; ++x) {
    std::size_t v = f.map[x];
    if (value_to_image[v] == f.cod.size) {
      value_to_image[v] = image.size();
      image.push_back(v);
    }
    q[x] = value_to_image[v];
  }
  Carrier i(image.size());
  if (!f.cod.labels.empty()) {
    i.labels.reserve(image.size());
    for (auto v : image) i.labels.push_back(f.cod.labels[v]);
  }
  return Factorization{FinFn(f.dom, i, std::move(q)), FinFn(i, f.cod, std::move(image))};
}

Pullback pullback(const FinFn& f, const FinFn& g) {
  if (f.cod.size != g.cod.size)
    throw std::invalid_argument("pullback: codomain mismatch");
  Pullback pb;
  std::vector<std::size_t> m1, m2;
  for (std::size_t a = 0; a < f.dom.size; ++a)
    for (std::size_t c = 0; c < g.dom.size; ++c)
      if (f.map[a] == g.map[c]) {
        pb.pairs.emplace_back(a, c);
        m1.push_back(a);
        m2.push_back(c);
      }
  pb.apex = Carrier(pb.pairs.size());
  pb.p1 = FinFn(pb.apex, f.dom, std::move(m1));
  pb.p2 = FinFn(pb.apex, g.dom, std::move(m2));
  return pb;
}

FinFn coequalizer(const FinFn& u, const FinFn& v) {
  if (u.dom.size != v.dom.size || u.cod.size != v.cod.size)
    throw std::invalid_argument("coequalizer: parallel pair required");
  UnionFind uf(u.cod.size);
  for (std::size_t t = 0; t < u.dom.size; ++t) uf.unite(u.map[t], v.map[t]);
  Partition p = Partition::from_union_find(uf);
  return FinFn(u.cod, Carrier(p.block_count), p.block_of);
}

Rel direct_image(const FinFn& f, const Rel& r) {
  if (r.dom.size != f.dom.size || r.cod.size != f.dom.size)
    throw std::invalid_argument("direct_image: relation must live on f.dom");
  Rel out(f.cod, f.cod);
  for (std::size_t x = 0; x < r.dom.size; ++x)
    r.rows[x].for_each([&](std::size_t y) { out.add(f.map[x], f.map[y]); });
  return out;
}

Rel inverse_image(const FinFn& f, const Rel& s) {
  if (s.dom.size != f.cod.size || s.cod.size != f.cod.size)
    throw std::invalid_argument("inverse_image: relation must live on f.cod");
  Rel out(f.dom, f.dom);
  for (std::size_t x = 0; x < f.dom.size; ++x)
    for (std::size_t y = 0; y < f.dom.size; ++y)
      if (s.contains(f.map[x], f.map[y])) out.add(x, y);
  return out;
}

Tabulation tabulate(const Rel& r) {
  Tabulation t;
  t.pairs = r.pairs();
  std::vector<std::size_t> m1, m2;
  m1.reserve(t.pairs.size());
  m2.reserve(t.pairs.size());
  for (auto [x, y] : t.pairs) {
    m1.push_back(x);
    m2.push_back(y);
  }
  t.apex = Carrier(t.pairs.size());
  t.p1 = FinFn(t.apex, r.dom, std::move(m1));
  t.p2 = FinFn(t.apex, r.cod, std::move(m2));
  return t;
}

Tabulation kernel_pair_tabulation(const FinFn& f) {
  return tabulate(kernel_pair(f));
}

}  // namespace relcalc

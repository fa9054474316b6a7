#include "relcalc/congruence.hpp"

#include <stdexcept>

#include "relcalc/algebra.hpp"

namespace relcalc {

namespace {

std::size_t power(std::size_t n, std::size_t k) {
  std::size_t p = 1;
  for (std::size_t i = 0; i < k; ++i) p *= n;
  return p;
}

}  // namespace

bool is_congruence(const Algebra& a, const Partition& p) {
  std::size_t n = a.carrier.size;
  if (p.size() != n) throw std::invalid_argument("is_congruence: size mismatch");
  // one argument slot at a time is enough: componentwise equivalence
  // follows by chaining positions
  std::vector<std::size_t> tuple;
  for (std::size_t op = 0; op < a.sig.ops.size(); ++op) {
    std::size_t k = a.sig.ops[op].arity;
    std::size_t count = power(n, k);
    for (std::size_t idx = 0; idx < count; ++idx) {
      index_tuple(n, k, idx, tuple);
      std::size_t base = a.tables[op][idx];
      for (std::size_t i = 0; i < k; ++i) {
        std::size_t orig = tuple[i];
        for (std::size_t b = 0; b < n; ++b) {
          if (!p.same_block(orig, b)) continue;
          tuple[i] = b;
          if (!p.same_block(base, a.op_value(op, tuple))) return false;
        }
        tuple[i] = orig;
      }
    }
  }
  return true;
}

Partition congruence_generated(
    const Algebra& a, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::size_t n = a.carrier.size;
  UnionFind uf(n);
  std::vector<std::pair<std::size_t, std::size_t>> work;
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n)
      throw std::invalid_argument("congruence_generated: pair out of range");
    if (uf.unite(x, y)) work.emplace_back(x, y);
  }
  // propagate each merge through every unary translation of every op
  std::vector<std::size_t> tuple;
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    for (std::size_t op = 0; op < a.sig.ops.size(); ++op) {
      std::size_t k = a.sig.ops[op].arity;
      if (k == 0) continue;
      std::size_t rest = power(n, k - 1);
      for (std::size_t pos = 0; pos < k; ++pos) {
        for (std::size_t ridx = 0; ridx < rest; ++ridx) {
          index_tuple(n, k - 1, ridx, tuple);
          tuple.insert(tuple.begin() + pos, x);
          std::size_t vx = a.op_value(op, tuple);
          tuple[pos] = y;
          std::size_t vy = a.op_value(op, tuple);
          tuple.erase(tuple.begin() + pos);
          if (uf.unite(vx, vy)) work.emplace_back(vx, vy);
        }
      }
    }
  }
  return Partition::from_union_find(uf);
}

std::vector<Partition> all_congruences(const Algebra& a, std::size_t bound) {
  if (a.carrier.size > bound)
    throw std::invalid_argument("all_congruences: carrier exceeds bound");
  std::vector<Partition> out;
  Partition::enumerate(a.carrier.size, [&](const Partition& p) {
    if (is_congruence(a, p)) out.push_back(p);
    return true;
  });
  return out;
}

}  // namespace relcalc

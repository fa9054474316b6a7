#include "relcalc/clone.hpp"

#include <stdexcept>
#include <unordered_map>

namespace relcalc {

namespace {

std::size_t power(std::size_t n, std::size_t k) {
  std::size_t p = 1;
  for (std::size_t i = 0; i < k; ++i) p *= n;
  return p;
}

struct TableHash {
  std::size_t operator()(const std::vector<std::size_t>& t) const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : t) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace

CloneResult grow_clone(
    const Algebra& a, std::size_t arity, std::size_t budget,
    const std::function<bool(const CloneElement&, std::size_t)>& visit) {
  if (arity == 0) throw std::invalid_argument("clone: arity must be positive");
  if (budget <= arity)
    throw std::invalid_argument("clone: budget must exceed the arity");
  std::size_t n = a.carrier.size;
  std::size_t width = power(n, arity);

  CloneResult result;
  std::vector<std::size_t> generation;
  std::unordered_map<std::vector<std::size_t>, std::size_t, TableHash> known;

  auto add = [&](CloneElement&& e, std::size_t gen) -> int {
    // -1 duplicate, 0 added, 1 stop requested, 2 budget hit
    auto [it, fresh] = known.emplace(e.table, result.elements.size());
    if (!fresh) return -1;
    if (result.elements.size() >= budget) {
      known.erase(it);
      return 2;
    }
    result.elements.push_back(std::move(e));
    generation.push_back(gen);
    if (visit && visit(result.elements.back(), result.elements.size() - 1))
      return 1;
    return 0;
  };

  // generation 0: the projections
  std::vector<std::size_t> tuple;
  for (std::size_t i = 0; i < arity; ++i) {
    CloneElement e;
    e.arity = arity;
    e.table.resize(width);
    for (std::size_t idx = 0; idx < width; ++idx) {
      index_tuple(n, arity, idx, tuple);
      e.table[idx] = tuple[i];
    }
    e.witness = Term::var(i);
    int rc = add(std::move(e), 0);
    if (rc == 1) return {CloneStatus::Stopped, std::move(result.elements)};
    if (rc == 2) return {CloneStatus::BudgetExceeded, std::move(result.elements)};
  }

  // round g combines everything known so far, keeping only tuples that
  // touch generation g; anything older was already tried
  for (std::size_t g = 0;; ++g) {
    std::size_t base = result.elements.size();
    bool grew = false;
    for (std::size_t op = 0; op < a.sig.ops.size(); ++op) {
      std::size_t m = a.sig.ops[op].arity;
      if (m == 0) {
        if (g != 0) continue;
        CloneElement e;
        e.arity = arity;
        e.table.assign(width, a.tables[op][0]);
        e.witness = Term::app(a.sig.ops[op].name, {});
        int rc = add(std::move(e), g + 1);
        if (rc == 1) return {CloneStatus::Stopped, std::move(result.elements)};
        if (rc == 2)
          return {CloneStatus::BudgetExceeded, std::move(result.elements)};
        grew = grew || rc == 0;
        continue;
      }
      std::vector<std::size_t> args(m, 0);
      while (true) {
        std::size_t newest = 0;
        for (auto i : args) newest = std::max(newest, generation[i]);
        if (newest == g) {
          CloneElement e;
          e.arity = arity;
          e.table.resize(width);
          std::vector<std::size_t> vals(m);
          for (std::size_t idx = 0; idx < width; ++idx) {
            for (std::size_t j = 0; j < m; ++j)
              vals[j] = result.elements[args[j]].table[idx];
            e.table[idx] = a.op_value(op, vals);
          }
          std::vector<Term> wargs;
          wargs.reserve(m);
          for (auto i : args) wargs.push_back(result.elements[i].witness);
          e.witness = Term::app(a.sig.ops[op].name, std::move(wargs));
          int rc = add(std::move(e), g + 1);
          if (rc == 1) return {CloneStatus::Stopped, std::move(result.elements)};
          if (rc == 2)
            return {CloneStatus::BudgetExceeded, std::move(result.elements)};
          grew = grew || rc == 0;
        }
        // next argument tuple over the elements present at round start
        std::size_t j = m;
        while (j-- > 0) {
          if (++args[j] < base) break;
          args[j] = 0;
        }
        if (j == static_cast<std::size_t>(-1)) break;
      }
    }
    if (!grew) break;
  }
  return {CloneStatus::Complete, std::move(result.elements)};
}

CloneResult free_clone_table(const Algebra& a, std::size_t arity,
                             std::size_t budget) {
  return grow_clone(a, arity, budget);
}

}  // namespace relcalc

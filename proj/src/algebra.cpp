#include "relcalc/algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "relcalc/congruence.hpp"

namespace relcalc {

std::size_t tuple_index(std::size_t n, std::span<const std::size_t> args) {
  std::size_t idx = 0;
  for (auto a : args) idx = idx * n + a;
  return idx;
}

void index_tuple(std::size_t n, std::size_t k, std::size_t index,
                 std::vector<std::size_t>& out) {
  out.assign(k, 0);
  for (std::size_t i = k; i-- > 0;) {
    out[i] = index % n;
    index /= n;
  }
}

namespace {

std::size_t power(std::size_t n, std::size_t k) {
  std::size_t p = 1;
  for (std::size_t i = 0; i < k; ++i) p *= n;
  return p;
}

}  // namespace

void Algebra::validate() const {
  carrier.validate();
  sig.validate();
  if (tables.size() != sig.ops.size())
    throw std::invalid_argument("algebra: one table per op required");
  std::size_t n = carrier.size;
  for (std::size_t i = 0; i < sig.ops.size(); ++i) {
    if (sig.ops[i].arity == 0 && n == 0)
      throw std::invalid_argument("algebra: a constant needs a nonempty carrier");
    std::size_t want = power(n, sig.ops[i].arity);
    if (tables[i].size() != want)
      throw std::invalid_argument("algebra: table for " + sig.ops[i].name +
                                  " has wrong length");
    for (auto v : tables[i])
      if (v >= n)
        throw std::invalid_argument("algebra: table entry out of range in " +
                                    sig.ops[i].name);
  }
}

std::size_t eval_term(const Algebra& a, const Term& t,
                      std::span<const std::size_t> env) {
  if (t.is_var()) {
    if (t.var_index() >= env.size())
      throw std::invalid_argument("eval: variable index out of range");
    return env[t.var_index()];
  }
  std::size_t op = a.sig.index_of(t.op());
  if (op == a.sig.ops.size())
    throw std::invalid_argument("eval: unknown op " + t.op());
  if (t.args().size() != a.sig.ops[op].arity)
    throw std::invalid_argument("eval: arity mismatch for " + t.op());
  std::vector<std::size_t> vals;
  vals.reserve(t.args().size());
  for (const auto& arg : t.args()) vals.push_back(eval_term(a, arg, env));
  return a.op_value(op, vals);
}

Algebra product_algebra(const Algebra& a, const Algebra& b) {
  if (!(a.sig == b.sig))
    throw std::invalid_argument("product: signature mismatch");
  std::size_t na = a.carrier.size, nb = b.carrier.size;
  Algebra p;
  p.carrier = Carrier(na * nb);
  p.sig = a.sig;
  std::vector<std::size_t> tuple, ta(0), tb(0);
  for (std::size_t op = 0; op < p.sig.ops.size(); ++op) {
    std::size_t k = p.sig.ops[op].arity;
    std::size_t count = power(na * nb, k);
    std::vector<std::size_t> table(count);
    ta.resize(k);
    tb.resize(k);
    for (std::size_t idx = 0; idx < count; ++idx) {
      index_tuple(na * nb, k, idx, tuple);
      for (std::size_t i = 0; i < k; ++i) {
        ta[i] = tuple[i] / nb;
        tb[i] = tuple[i] % nb;
      }
      table[idx] = a.op_value(op, ta) * nb + b.op_value(op, tb);
    }
    p.tables.push_back(std::move(table));
  }
  return p;
}

std::vector<std::size_t> subalgebra_generated(const Algebra& a,
                                              const std::vector<std::size_t>& seeds) {
  std::size_t n = a.carrier.size;
  std::vector<bool> in(n, false);
  for (auto s : seeds) {
    if (s >= n) throw std::invalid_argument("subalgebra: seed out of range");
    in[s] = true;
  }
  for (std::size_t op = 0; op < a.sig.ops.size(); ++op)
    if (a.sig.ops[op].arity == 0) in[a.tables[op][0]] = true;

  // worklist closure: re-scan tuples drawn from the current subset until
  // nothing new appears
  bool changed = true;
  std::vector<std::size_t> members, tuple;
  while (changed) {
    changed = false;
    members.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (in[i]) members.push_back(i);
    for (std::size_t op = 0; op < a.sig.ops.size(); ++op) {
      std::size_t k = a.sig.ops[op].arity;
      if (k == 0) continue;
      std::size_t count = power(members.size(), k);
      for (std::size_t idx = 0; idx < count; ++idx) {
        index_tuple(members.size(), k, idx, tuple);
        for (auto& t : tuple) t = members[t];
        std::size_t v = a.op_value(op, tuple);
        if (!in[v]) {
          in[v] = true;
          changed = true;
        }
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (in[i]) out.push_back(i);
  return out;
}

HomCheck is_homomorphism(const Algebra& a, const Algebra& b, const FinFn& f) {
  if (!(a.sig == b.sig))
    throw std::invalid_argument("homomorphism: signature mismatch");
  if (f.dom.size != a.carrier.size || f.cod.size != b.carrier.size)
    throw std::invalid_argument("homomorphism: carrier mismatch");
  std::vector<std::size_t> tuple, mapped;
  for (std::size_t op = 0; op < a.sig.ops.size(); ++op) {
    std::size_t k = a.sig.ops[op].arity;
    std::size_t count = power(a.carrier.size, k);
    mapped.resize(k);
    for (std::size_t idx = 0; idx < count; ++idx) {
      index_tuple(a.carrier.size, k, idx, tuple);
      for (std::size_t i = 0; i < k; ++i) mapped[i] = f.map[tuple[i]];
      if (f.map[a.op_value(op, tuple)] != b.op_value(op, mapped))
        return HomCheck{false, a.sig.ops[op].name, tuple};
    }
  }
  return HomCheck{};
}

Algebra quotient_algebra(const Algebra& a, const Partition& p) {
  if (!is_congruence(a, p))
    throw std::invalid_argument("quotient: partition is not a congruence");
  Algebra q;
  q.carrier = Carrier(p.block_count);
  q.sig = a.sig;
  auto bs = p.blocks();
  std::vector<std::size_t> reps(p.block_count);
  for (std::size_t b = 0; b < p.block_count; ++b) reps[b] = bs[b].front();
  std::vector<std::size_t> tuple, lifted;
  for (std::size_t op = 0; op < a.sig.ops.size(); ++op) {
    std::size_t k = a.sig.ops[op].arity;
    std::size_t count = power(p.block_count, k);
    std::vector<std::size_t> table(count);
    lifted.resize(k);
    for (std::size_t idx = 0; idx < count; ++idx) {
      index_tuple(p.block_count, k, idx, tuple);
      for (std::size_t i = 0; i < k; ++i) lifted[i] = reps[tuple[i]];
      table[idx] = p.block_of[a.op_value(op, lifted)];
    }
    q.tables.push_back(std::move(table));
  }
  return q;
}

FinFn quotient_map(const Algebra& a, const Partition& p) {
  return FinFn(a.carrier, Carrier(p.block_count), p.block_of);
}

}  // namespace relcalc

#include "relcalc/partition.hpp"

#include <stdexcept>

namespace relcalc {

Partition Partition::discrete(std::size_t n) {
  Partition p;
  p.block_of.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.block_of[i] = i;
  p.block_count = n;
  return p;
}

Partition Partition::indiscrete(std::size_t n) {
  Partition p;
  p.block_of.assign(n, 0);
  p.block_count = n == 0 ? 0 : 1;
  return p;
}

Partition Partition::from_union_find(UnionFind& uf) {
  std::size_t n = uf.size();
  Partition p;
  p.block_of.assign(n, 0);
  std::vector<std::size_t> root_block(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = uf.find(i);
    if (root_block[r] == n) root_block[r] = p.block_count++;
    p.block_of[i] = root_block[r];
  }
  return p;
}

Partition Partition::from_pairs(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& ps) {
  UnionFind uf(n);
  for (auto [a, b] : ps) {
    if (a >= n || b >= n) throw std::invalid_argument("pair out of range");
    uf.unite(a, b);
  }
  return from_union_find(uf);
}

std::vector<std::vector<std::size_t>> Partition::blocks() const {
  std::vector<std::vector<std::size_t>> out(block_count);
  for (std::size_t i = 0; i < block_of.size(); ++i)
    out[block_of[i]].push_back(i);
  return out;
}

bool Partition::refines(const Partition& coarser) const {
  if (block_of.size() != coarser.block_of.size())
    throw std::invalid_argument("refines: size mismatch");
  std::vector<std::size_t> image(block_count, block_of.size());
  for (std::size_t i = 0; i < block_of.size(); ++i) {
    std::size_t b = block_of[i];
    if (image[b] == block_of.size()) image[b] = coarser.block_of[i];
    else if (image[b] != coarser.block_of[i]) return false;
  }
  return true;
}

Partition Partition::meet(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("meet: size mismatch");
  std::size_t n = a.size();
  Partition p;
  p.block_of.assign(n, 0);
  // label pairs (a-block, b-block) by first occurrence
  std::vector<std::size_t> seen;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t key = a.block_of[i] * n + b.block_of[i];
    std::size_t j = 0;
    while (j < seen.size() && seen[j] != key) ++j;
    if (j == seen.size()) seen.push_back(key);
    p.block_of[i] = j;
  }
  p.block_count = seen.size();
  return p;
}

Partition Partition::join(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("join: size mismatch");
  std::size_t n = a.size();
  UnionFind uf(n);
  std::vector<std::size_t> first_a(a.block_count, n), first_b(b.block_count, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (first_a[a.block_of[i]] == n) first_a[a.block_of[i]] = i;
    else uf.unite(first_a[a.block_of[i]], i);
    if (first_b[b.block_of[i]] == n) first_b[b.block_of[i]] = i;
    else uf.unite(first_b[b.block_of[i]], i);
  }
  return from_union_find(uf);
}

void Partition::enumerate(std::size_t n,
                          const std::function<bool(const Partition&)>& visit) {
  Partition p;
  p.block_of.assign(n, 0);
  if (n == 0) {
    p.block_count = 0;
    visit(p);
    return;
  }
  // generate restricted growth strings in lexicographic order
  std::vector<std::size_t> rgs(n, 0), maxv(n, 0);
  while (true) {
    p.block_of = rgs;
    p.block_count = maxv[n - 1] + 1;
    if (!visit(p)) return;
    std::size_t i = n;
    while (i-- > 1) {
      if (rgs[i] <= maxv[i - 1]) {  // rgs[i]+1 is still a legal letter
        ++rgs[i];
        maxv[i] = std::max(maxv[i - 1], rgs[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
          rgs[j] = 0;
          maxv[j] = maxv[i];
        }
        break;
      }
    }
    if (i == 0) return;
  }
}

Rel partition_to_rel(const Carrier& x, const Partition& p) {
  if (p.size() != x.size)
    throw std::invalid_argument("partition_to_rel: size mismatch");
  Rel r(x, x);
  auto bs = p.blocks();
  for (const auto& block : bs)
    for (auto i : block)
      for (auto j : block) r.add(i, j);
  return r;
}

Partition rel_to_partition(const Rel& r) {
  RelFlags f = classify(r);
  if (!f.endo || !f.equivalence)
    throw std::invalid_argument("rel_to_partition: equivalence relation required");
  UnionFind uf(r.dom.size);
  for (std::size_t x = 0; x < r.dom.size; ++x)
    r.rows[x].for_each([&](std::size_t y) { uf.unite(x, y); });
  return Partition::from_union_find(uf);
}

}  // namespace relcalc

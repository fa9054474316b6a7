#ifndef RELCALC_CONGRUENCE_HPP
#define RELCALC_CONGRUENCE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "relcalc/partition.hpp"

namespace relcalc {

struct Algebra;

/// A congruence is a partition of the carrier compatible with every
/// operation; the engine represents it as a Partition and converts to a
/// relation with partition_to_rel when the calculus needs bits.
bool is_congruence(const Algebra& a, const Partition& p);

/// Least congruence containing the given pairs.
Partition congruence_generated(
    const Algebra& a, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

/// All congruences in restricted-growth-string order.
/// Throws when the carrier exceeds the bound.
std::vector<Partition> all_congruences(const Algebra& a, std::size_t bound = 8);

}  // namespace relcalc

#endif

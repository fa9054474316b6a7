#ifndef RELCALC_ALGEBRA_HPP
#define RELCALC_ALGEBRA_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "relcalc/carrier.hpp"
#include "relcalc/fn.hpp"
#include "relcalc/partition.hpp"
#include "relcalc/term.hpp"

namespace relcalc {

/// Index of an argument tuple in a flat operation table of width n:
/// first argument most significant.
std::size_t tuple_index(std::size_t n, std::span<const std::size_t> args);

/// Inverse of tuple_index.
void index_tuple(std::size_t n, std::size_t k, std::size_t index,
                 std::vector<std::size_t>& out);

/// Finite algebra given by flat operation tables.
struct Algebra {
  Carrier carrier;
  Signature sig;
  std::vector<std::vector<std::size_t>> tables;  // tables[i] has n^arity entries

  void validate() const;

  std::size_t op_value(std::size_t op, std::span<const std::size_t> args) const {
    return tables[op][tuple_index(carrier.size, args)];
  }
};

std::size_t eval_term(const Algebra& a, const Term& t,
                      std::span<const std::size_t> env);

/// Carrier is the set of pairs in lexicographic order (first factor most
/// significant); operations act coordinatewise.
Algebra product_algebra(const Algebra& a, const Algebra& b);

/// Least subset containing the seeds and all constants and closed under
/// every operation; returned sorted.
std::vector<std::size_t> subalgebra_generated(const Algebra& a,
                                              const std::vector<std::size_t>& seeds);

struct HomCheck {
  bool ok = true;
  std::string op;                 // on failure, the offending operation
  std::vector<std::size_t> args;  // and the argument tuple in a.carrier
};

HomCheck is_homomorphism(const Algebra& a, const Algebra& b, const FinFn& f);

/// Quotient by a congruence; throws if the partition is not compatible.
Algebra quotient_algebra(const Algebra& a, const Partition& p);

/// The canonical map onto the quotient carrier.
FinFn quotient_map(const Algebra& a, const Partition& p);

}  // namespace relcalc

#endif

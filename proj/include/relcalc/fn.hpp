#ifndef RELCALC_FN_HPP
#define RELCALC_FN_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "relcalc/carrier.hpp"
#include "relcalc/rel.hpp"

namespace relcalc {

/// Total function between finite carriers.
struct FinFn {
  Carrier dom;
  Carrier cod;
  std::vector<std::size_t> map;  // length dom.size, entries < cod.size

  FinFn() = default;
  FinFn(Carrier d, Carrier c, std::vector<std::size_t> m);

  static FinFn identity(const Carrier& x);
  static FinFn constant(const Carrier& d, const Carrier& c, std::size_t value);

  std::size_t operator()(std::size_t x) const { return map[x]; }

  bool operator==(const FinFn& o) const {
    return dom.size == o.dom.size && cod.size == o.cod.size && map == o.map;
  }
};

/// `compose(f, g)` applies f first, then g (the composite g . f).
FinFn compose(const FinFn& f, const FinFn& g);

bool is_injective(const FinFn& f);
bool is_surjective(const FinFn& f);

/// The graph of f as a relation from dom to cod.
Rel graph(const FinFn& f);

/// Eq(f): the pairs (x, y) with f(x) = f(y); always an equivalence relation.
Rel kernel_pair(const FinFn& f);

/// f = embedding . quotient with quotient surjective and embedding
/// injective; the image carrier enumerates distinct values of f in order
/// of first occurrence.
struct Factorization {
  FinFn quotient;   // A -> I
  FinFn embedding;  // I -> B
};
Factorization image_factorize(const FinFn& f);

/// Pullback of f and g over their shared codomain.  The apex enumerates
/// the pairs (a, c) with f(a) = g(c) in lexicographic order.
struct Pullback {
  Carrier apex;
  FinFn p1;  // apex -> f.dom
  FinFn p2;  // apex -> g.dom
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};
Pullback pullback(const FinFn& f, const FinFn& g);

/// Canonical quotient of the shared codomain of u and v by the
/// equivalence closure of { (u(t), v(t)) }.
FinFn coequalizer(const FinFn& u, const FinFn& v);

/// f(r): the pairs (f(x1), f(x2)) for (x1, x2) in r.
Rel direct_image(const FinFn& f, const Rel& r);

/// The pairs (x1, x2) with (f(x1), f(x2)) in s.
Rel inverse_image(const FinFn& f, const Rel& s);

/// Kernel pair materialized as a carrier of pairs with projection legs,
/// for constructions that need an actual object rather than a bitmap.
struct Tabulation {
  Carrier apex;
  FinFn p1;
  FinFn p2;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

/// Pairs of r enumerated row-major; legs are the two projections.
Tabulation tabulate(const Rel& r);

Tabulation kernel_pair_tabulation(const FinFn& f);

}  // namespace relcalc

#endif

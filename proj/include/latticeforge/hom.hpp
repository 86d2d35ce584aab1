#pragma once

#include <optional>
#include <vector>

#include "latticeforge/algebra.hpp"
#include "latticeforge/relation.hpp"

namespace latticeforge {

struct Hom {
  FiniteAlgebra dom, cod;
  std::vector<Element> table;

  Element operator()(Element x) const { return table[x]; }
  friend bool operator==(const Hom& a, const Hom& b) { return a.table == b.table; }
  friend auto operator<=>(const Hom& a, const Hom& b) { return a.table <=> b.table; }
};

// Full preservation check of a map against both algebras' tables.
bool is_homomorphism(const FiniteAlgebra& dom, const FiniteAlgebra& cod,
                     const std::vector<Element>& table);

Hom identity_hom(const FiniteAlgebra& a);
Hom compose(const Hom& g, const Hom& f);  // g ∘ f
bool is_surjective(const Hom& h);

// All homomorphisms a -> b, sorted by table.
std::vector<Hom> enumerate_homs(const FiniteAlgebra& a, const FiniteAlgebra& b);

// A subalgebra of a finite product with its coordinate projections.
struct ProductSubalgebra {
  FiniteAlgebra algebra;
  std::vector<FiniteAlgebra> factors;
  std::vector<Hom> projections;  // projections[i]: algebra -> factors[i]
};

// The subalgebra of dom×cod on r's pairs (in bit order) with ρ1, ρ2.
ProductSubalgebra algebra_of(const BinRel& r);
// A base algebra seen as a one-factor product (projection = identity).
ProductSubalgebra as_product(const FiniteAlgebra& a);

bool is_hom_minimal(const BinRel& r);

// A hom u: algebra_of(r·s) -> M with (a, u(a,b)) ∈ r and (u(a,b), b) ∈ s.
std::optional<Hom> check_hom_rel_product(const BinRel& r, const BinRel& s);

struct JonssonFactor {
  std::size_t coordinate;
  Hom g;  // factors[coordinate] -> c
};
// Finds i and g with u = g ∘ π_i. Coordinates whose projection is not onto
// the factor are skipped.
std::optional<JonssonFactor> jonsson_factor(const ProductSubalgebra& b, const FiniteAlgebra& c,
                                            const Hom& u);

}  // namespace latticeforge

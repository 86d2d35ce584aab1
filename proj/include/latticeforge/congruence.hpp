#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "latticeforge/algebra.hpp"
#include "latticeforge/partition.hpp"

namespace latticeforge {

bool is_congruence(const FiniteAlgebra& a, const Partition& theta);

Partition principal_congruence(const FiniteAlgebra& a, Element x, Element y);

// Con(A) ordered by refinement. Members are sorted by decreasing number of
// blocks, then by block assignment, so Δ comes first and ∇ last.
class ConLattice {
 public:
  explicit ConLattice(std::vector<Partition> members);

  const std::vector<Partition>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const Partition& operator[](std::size_t i) const { return members_[i]; }
  bool leq(std::size_t i, std::size_t j) const { return members_[i].refines(members_[j]); }
  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return upper_[i]; }
  std::optional<std::size_t> index_of(const Partition& p) const;

 private:
  std::vector<Partition> members_;
  std::vector<std::vector<std::size_t>> upper_;
};

inline constexpr std::size_t kMaxConCarrier = 32;

ConLattice con_lattice(const FiniteAlgebra& a);
bool is_subdirectly_irreducible(const FiniteAlgebra& a);
std::vector<Partition> meet_irreducible_congruences(const ConLattice& con);
std::vector<FiniteAlgebra> si_quotients(const FiniteAlgebra& a);

// A finite poset given by its order relation leq[i][j] (i <= j).
using Poset = std::vector<std::vector<bool>>;
Poset poset_of(const ConLattice& con);
// The boolean lattice 2^n with a new top adjoined.
Poset boolean_plus_top(std::size_t n);
std::optional<std::vector<std::size_t>> poset_isomorphism(const Poset& a, const Poset& b);

}  // namespace latticeforge

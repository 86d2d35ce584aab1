#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latticeforge/algebra.hpp"

namespace latticeforge {

using Bits = boost::dynamic_bitset<std::uint64_t>;
using Pair = std::pair<Element, Element>;

// A binary relation from dom to cod; pair (x,y) is bit x*|cod|+y.
class BinRel {
 public:
  BinRel(FiniteAlgebra dom, FiniteAlgebra cod);
  BinRel(FiniteAlgebra dom, FiniteAlgebra cod, const std::vector<Pair>& pairs);
  BinRel(FiniteAlgebra dom, FiniteAlgebra cod, Bits bits);

  const FiniteAlgebra& dom() const { return dom_; }
  const FiniteAlgebra& cod() const { return cod_; }
  const Bits& bits() const { return bits_; }

  std::size_t index(Element x, Element y) const { return std::size_t{x} * cod_.size() + y; }
  Pair pair_at(std::size_t bit) const {
    return {static_cast<Element>(bit / cod_.size()), static_cast<Element>(bit % cod_.size())};
  }
  bool contains(Element x, Element y) const { return bits_.test(index(x, y)); }
  void insert(Element x, Element y) { bits_.set(index(x, y)); }
  std::size_t size() const { return bits_.count(); }
  std::vector<Pair> pairs() const;

  bool subset_of(const BinRel& other) const { return bits_.is_subset_of(other.bits_); }

  friend bool operator==(const BinRel& a, const BinRel& b) {
    return a.bits_ == b.bits_ && a.dom_.size() == b.dom_.size() &&
           a.cod_.size() == b.cod_.size();
  }

 private:
  FiniteAlgebra dom_, cod_;
  Bits bits_;
};

// Canonical order: popcount, then the lowest differing pair belongs to the smaller.
bool canonical_less(const Bits& a, const Bits& b);
bool canonical_less(const BinRel& a, const BinRel& b);

std::size_t default_max_bits();  // 256, or LATTICEFORGE_MAX_BITS

BinRel constants_diag(const FiniteAlgebra& a, const FiniteAlgebra& b);
BinRel generate(const FiniteAlgebra& a, const FiniteAlgebra& b, const std::vector<Pair>& seed);
BinRel close(const BinRel& r);
bool is_compatible(const BinRel& r);

BinRel full_relation(const FiniteAlgebra& a, const FiniteAlgebra& b);
BinRel converse(const BinRel& r);
BinRel intersect(const std::vector<BinRel>& rs);
BinRel rel_union(const BinRel& r, const BinRel& s);
BinRel rel_product(const BinRel& r, const BinRel& s);

// The relations on J_n.
BinRel make_snn(std::size_t n);
BinRel make_sni(std::size_t n, std::size_t i);  // i == n gives make_snn(n)
BinRel make_rnij(std::size_t n, std::size_t i, std::size_t j);

enum class MultiLeq { leq0, leqk, leqjk };
// leq0 lives on M_0, leqk on M_k, leqjk goes from M_j to M_k (1 <= j < k <= n).
BinRel make_multi_leq(MultiLeq kind, std::size_t n, std::size_t j, std::size_t k);

// For non-trivial homomorphic images a, b of J_n.
BinRel make_s_le(const FiniteAlgebra& a, const FiniteAlgebra& b);
BinRel make_s_ge(const FiniteAlgebra& a, const FiniteAlgebra& b);
BinRel make_sab(const FiniteAlgebra& a, const FiniteAlgebra& b, Pair ab);

struct SubLatticeOptions {
  std::size_t max_bits = default_max_bits();
  unsigned threads = 1;
};

// Sub(A×B) ordered by inclusion.
class SubLattice {
 public:
  SubLattice(FiniteAlgebra dom, FiniteAlgebra cod, std::vector<BinRel> members);

  const FiniteAlgebra& dom() const { return dom_; }
  const FiniteAlgebra& cod() const { return cod_; }
  const std::vector<BinRel>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const BinRel& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return upper_[i]; }
  const std::vector<std::size_t>& lower_covers(std::size_t i) const { return lower_[i]; }
  std::optional<std::size_t> index_of(const BinRel& r) const;

 private:
  FiniteAlgebra dom_, cod_;
  std::vector<BinRel> members_;
  std::vector<std::vector<std::size_t>> upper_, lower_;
};

SubLattice enumerate_sub(const FiniteAlgebra& a, const FiniteAlgebra& b,
                         const SubLatticeOptions& options = {});
std::vector<BinRel> meet_irreducibles(const SubLattice& lat);
std::vector<BinRel> values_at(const SubLattice& lat, Pair p);

// Number of classes of members up to converse (only meaningful when dom == cod).
std::size_t count_up_to_converse(const SubLattice& lat);
std::vector<BinRel> self_converse_members(const SubLattice& lat);

// Named relations on J_n^2: K, the full relation, S_{n,i}, R_{n,i,j} and converses.
std::vector<std::pair<std::string, BinRel>> named_relations_jn(std::size_t n);
std::optional<std::string> lookup_name(const std::vector<std::pair<std::string, BinRel>>& names,
                                       const BinRel& r);

std::string pair_name(const BinRel& r, Pair p);

}  // namespace latticeforge

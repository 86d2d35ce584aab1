#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "latticeforge/algebra.hpp"
#include "latticeforge/hom.hpp"
#include "latticeforge/relation.hpp"

// All structures here are finite, so the topology of an alter ego is discrete
// and plays no role: dual structures are plain relational structures and the
// maps into the alter ego are just structure-preserving maps.

namespace latticeforge {

struct RelationSymbol {
  std::string name;
  std::size_t from, to;  // sort indices
  BinRel relation;
};

struct MapSymbol {
  std::string name;
  std::size_t from, to;
  Hom map;
};

struct MultiAlterEgo {
  std::vector<FiniteAlgebra> sorts;
  std::vector<RelationSymbol> relations;
  std::vector<MapSymbol> maps;

  std::size_t num_items() const { return relations.size() + maps.size(); }
};

struct AlterEgo {
  FiniteAlgebra base;
  std::vector<std::pair<std::string, BinRel>> named_relations;

  MultiAlterEgo as_multi() const;
};

AlterEgo single_alter_ego(std::size_t n);
MultiAlterEgo multi_alter_ego(std::size_t n);

// A finite structure of the same signature as an alter ego: points per sort,
// one bitset per relation symbol (over from-points × to-points, row-major) and
// one point map per map symbol.
struct Structure {
  std::vector<std::size_t> sort_sizes;
  std::vector<Bits> relations;
  std::vector<std::vector<std::size_t>> maps;
};

struct DualStructure {
  Structure structure;
  std::vector<std::vector<Hom>> points;  // points[k] = homs A -> sort k
};

// A sort-respecting assignment of alter-ego elements to the points of a structure.
struct StructMap {
  std::vector<std::vector<Element>> values;  // values[k][p]

  friend bool operator==(const StructMap&, const StructMap&) = default;
  friend auto operator<=>(const StructMap&, const StructMap&) = default;
};

DualStructure dualize(const FiniteAlgebra& a, const MultiAlterEgo& ego);
DualStructure dualize(const FiniteAlgebra& a, const AlterEgo& ego);

// The s-th power of the alter ego: sort k has |M_k|^s points (tuples in
// little-endian base-|M_k| order), relations and maps act coordinatewise.
Structure power_structure(const MultiAlterEgo& ego, std::size_t s);

// Items of the signature that a morphism must respect.
struct ItemMask {
  std::vector<bool> relations, maps;
  static ItemMask all(const MultiAlterEgo& ego);
};

bool preserves_relation(const Structure& x, const MultiAlterEgo& ego, const StructMap& phi,
                        std::size_t r);
bool preserves_map(const Structure& x, const MultiAlterEgo& ego, const StructMap& phi,
                   std::size_t m);
bool preserves(const Structure& x, const MultiAlterEgo& ego, const StructMap& phi,
               const ItemMask& mask);

inline constexpr std::size_t kDefaultMorphismLimit = 1'000'000;

// All structure-preserving maps x -> ego respecting the masked items, sorted.
// Throws std::length_error past `limit` solutions.
std::vector<StructMap> enumerate_morphisms(const Structure& x, const MultiAlterEgo& ego,
                                           const ItemMask& mask,
                                           std::size_t limit = kDefaultMorphismLimit);
// Visits solutions in search order until visit returns false.
void search_morphisms(const Structure& x, const MultiAlterEgo& ego, const ItemMask& mask,
                      const std::function<bool(const StructMap&)>& visit);

std::vector<StructMap> evaluate_e(const FiniteAlgebra& a, const DualStructure& d);
std::vector<StructMap> double_dual(const FiniteAlgebra& a, const MultiAlterEgo& ego);
std::vector<StructMap> double_dual(const FiniteAlgebra& a, const AlterEgo& ego);

struct DualityReport {
  std::size_t algebra_size = 0;
  std::size_t double_dual_size = 0;
  std::vector<std::size_t> points_per_sort;
  bool evaluations_preserve = false;  // every e_A(a) is a morphism
  bool injective = false;
  bool surjective = false;
  bool holds() const { return evaluations_preserve && injective && surjective; }
};

DualityReport duality_report(const FiniteAlgebra& a, const MultiAlterEgo& ego);
bool check_duality(const FiniteAlgebra& a, const MultiAlterEgo& ego);
bool check_duality(const FiniteAlgebra& a, const AlterEgo& ego);

// E(ego^s) with pointwise operations; labelled "F_V<n>(<s>)".
FiniteAlgebra free_algebra(const MultiAlterEgo& ego, std::size_t s,
                           std::size_t limit = kDefaultMorphismLimit);
FiniteAlgebra free_algebra(const AlterEgo& ego, std::size_t s,
                           std::size_t limit = kDefaultMorphismLimit);

// A map D(test) -> base preserving ego_relations but not target, if one exists.
std::optional<StructMap> entails(const std::vector<BinRel>& ego_relations, const BinRel& target,
                                 const FiniteAlgebra& test);

// Removing one item (relation or map) from an ego.
struct ItemRef {
  bool is_map = false;
  std::size_t index = 0;
};

// Searches D(test) for a map preserving every item except `removed` and violating it.
std::optional<StructMap> removal_witness(const MultiAlterEgo& ego, ItemRef removed,
                                         const FiniteAlgebra& test);

// Re-checks a candidate witness directly from the hom tables of D(test),
// without the lifted bitsets: it must preserve every item except `removed`
// and violate `removed`.
bool verify_removal_witness(const MultiAlterEgo& ego, ItemRef removed, const DualStructure& d,
                            const StructMap& gamma);

struct OptimalityRecord {
  std::string item;
  std::string test_algebra;
  std::optional<StructMap> witness;  // the reconstructed witness map
  bool witness_verified = false;     // brute-force re-check
  bool search_agrees = false;        // removal_witness also finds a witness
  std::string note;
  std::string verdict() const { return witness_verified ? "optimal-necessary" : "entailed"; }
};

std::vector<OptimalityRecord> single_optimality_suite(std::size_t n);
std::vector<OptimalityRecord> multi_optimality_suite(std::size_t n);

}  // namespace latticeforge

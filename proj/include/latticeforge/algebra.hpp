#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latticeforge/partition.hpp"

namespace latticeforge {

enum class BinaryOp : std::uint8_t { kmeet, kjoin, tmeet, tjoin };

inline constexpr std::array<BinaryOp, 4> kBinaryOps{BinaryOp::kmeet, BinaryOp::kjoin,
                                                     BinaryOp::tmeet, BinaryOp::tjoin};

const char* op_name(BinaryOp op);

// A finite algebra in the signature <; kmeet, kjoin, tmeet, tjoin, neg, constants>
// where the constants are the 2n+4 slots top, f_0..f_n, t_0..t_n, bot.
//
// Values are immutable and cheap to copy (the tables are shared).
class FiniteAlgebra {
 public:
  struct Tables {
    std::size_t n = 0;
    std::size_t size = 0;
    std::array<std::vector<Element>, 4> binary;  // row-major size*size
    std::vector<Element> neg;
    std::vector<Element> constants;  // 2n+4 slots
    std::string label;
    std::vector<std::string> names;  // optional element names
  };

  FiniteAlgebra();
  // Checks table shapes and index ranges; throws std::invalid_argument.
  explicit FiniteAlgebra(Tables t);

  std::size_t n() const { return data_->n; }
  std::size_t size() const { return data_->size; }
  const std::string& label() const { return data_->label; }
  const Tables& tables() const { return *data_; }

  Element op(BinaryOp o, Element x, Element y) const {
    return data_->binary[static_cast<std::size_t>(o)][x * data_->size + y];
  }
  Element neg(Element x) const { return data_->neg[x]; }

  std::span<const Element> constants() const { return data_->constants; }
  std::size_t num_constants() const { return data_->constants.size(); }
  Element constant(std::size_t slot) const { return data_->constants[slot]; }
  Element top() const { return constant(0); }
  Element bottom() const { return constant(2 * n() + 3); }
  Element false_constant(std::size_t i) const { return constant(1 + i); }
  Element true_constant(std::size_t i) const { return constant(n() + 2 + i); }

  bool leq_k(Element x, Element y) const { return op(BinaryOp::kmeet, x, y) == x; }
  bool leq_t(Element x, Element y) const { return op(BinaryOp::tmeet, x, y) == x; }

  std::string element_name(Element x) const;
  FiniteAlgebra relabelled(std::string label) const;

  // Structural equality: signature, tables and constants (labels and names ignored).
  friend bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b);

 private:
  std::shared_ptr<const Tables> data_;
};

// Slot indices into the constant list.
inline std::size_t slot_top() { return 0; }
inline std::size_t slot_false(std::size_t i) { return 1 + i; }
inline std::size_t slot_true(std::size_t n, std::size_t i) { return n + 2 + i; }
inline std::size_t slot_bottom(std::size_t n) { return 2 * n + 3; }

// Builds an algebra from two lattice orders (given as predicates on indices),
// a negation table and constants. The binary tables are the meets/joins.
template <class LeqK, class LeqT>
FiniteAlgebra algebra_from_orders(std::size_t n, std::size_t size, LeqK leq_k, LeqT leq_t,
                                  std::vector<Element> neg, std::vector<Element> constants,
                                  std::string label, std::vector<std::string> names);

FiniteAlgebra make_jn(std::size_t n);
FiniteAlgebra make_m0(std::size_t n);
FiniteAlgebra make_mk(std::size_t n, std::size_t k);

FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b);
FiniteAlgebra quotient(const FiniteAlgebra& a, const Partition& theta);

// Subalgebra on a subset closed under all operations and containing the constants.
// `members` must be sorted; element i of the result is members[i].
FiniteAlgebra subalgebra(const FiniteAlgebra& a, const std::vector<Element>& members,
                         std::string label);

// Least subuniverse containing the seed (and the constants), sorted.
std::vector<Element> generated_subuniverse(const FiniteAlgebra& a,
                                           const std::vector<Element>& seed);

// A carrier bijection preserving every operation and constant slot.
std::optional<std::vector<Element>> is_isomorphic(const FiniteAlgebra& a,
                                                  const FiniteAlgebra& b);

// Axiom scan; returns an empty string on success, else a description.
std::string check_bilattice(const FiniteAlgebra& a);
// A failure of interlacing: x <= y in one order while op(x,z) is not <= op(y,z)
// in that order, for an operation of the other lattice.
struct InterlacingFailure {
  Element x, y, z;
  BinaryOp op;
};
std::optional<InterlacingFailure> interlacing_failure(const FiniteAlgebra& a);
bool is_interlaced(const FiniteAlgebra& a);

void require_same_signature(const FiniteAlgebra& a, const FiniteAlgebra& b);

// ---- template implementation ----

template <class LeqK, class LeqT>
FiniteAlgebra algebra_from_orders(std::size_t n, std::size_t size, LeqK leq_k, LeqT leq_t,
                                  std::vector<Element> neg, std::vector<Element> constants,
                                  std::string label, std::vector<std::string> names) {
  auto bound = [size](auto leq, Element x, Element y, bool lower) {
    // the greatest lower (or least upper) bound in the given order
    std::optional<Element> best;
    for (std::size_t zi = 0; zi < size; ++zi) {
      auto z = static_cast<Element>(zi);
      bool is_bound = lower ? (leq(z, x) && leq(z, y)) : (leq(x, z) && leq(y, z));
      if (!is_bound) continue;
      if (!best || (lower ? leq(*best, z) : leq(z, *best))) best = z;
    }
    return *best;
  };
  FiniteAlgebra::Tables t;
  t.n = n;
  t.size = size;
  for (auto& table : t.binary) table.resize(size * size);
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = 0; y < size; ++y) {
      auto ex = static_cast<Element>(x), ey = static_cast<Element>(y);
      t.binary[0][x * size + y] = bound(leq_k, ex, ey, true);
      t.binary[1][x * size + y] = bound(leq_k, ex, ey, false);
      t.binary[2][x * size + y] = bound(leq_t, ex, ey, true);
      t.binary[3][x * size + y] = bound(leq_t, ex, ey, false);
    }
  }
  t.neg = std::move(neg);
  t.constants = std::move(constants);
  t.label = std::move(label);
  t.names = std::move(names);
  return FiniteAlgebra(std::move(t));
}

}  // namespace latticeforge

#pragma once

#include <functional>
#include <span>
#include <vector>

#include "latticeforge/algebra.hpp"

namespace latticeforge::detail {

inline constexpr Element kUnset = 0xFFFF;

// Backtracking search for maps dom -> cod that preserve every operation and
// constant slot. Constants seed the assignment; every new assignment is
// propagated against all assigned elements through the operation tables.
class MapSearch {
 public:
  MapSearch(const FiniteAlgebra& dom, const FiniteAlgebra& cod, bool injective);

  // Calls visit for each solution in lexicographic order of the table;
  // visit returns false to stop the search.
  void run(const std::function<bool(std::span<const Element>)>& visit);

 private:
  bool set(Element x, Element v);
  bool propagate();
  void undo(std::size_t mark);
  bool descend(const std::function<bool(std::span<const Element>)>& visit);

  const FiniteAlgebra& dom_;
  const FiniteAlgebra& cod_;
  bool injective_;
  std::vector<Element> image_;
  std::vector<Element> trail_;
  std::vector<char> used_;
  std::size_t head_ = 0;
};

}  // namespace latticeforge::detail

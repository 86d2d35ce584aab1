#include "map_search.hpp"

namespace latticeforge::detail {

MapSearch::MapSearch(const FiniteAlgebra& dom, const FiniteAlgebra& cod, bool injective)
    : dom_(dom), cod_(cod), injective_(injective) {
  require_same_signature(dom, cod);
  image_.assign(dom.size(), kUnset);
  used_.assign(cod.size(), 0);
}

bool MapSearch::set(Element x, Element v) {
  if (image_[x] != kUnset) return image_[x] == v;
  if (injective_ && used_[v]) return false;
  image_[x] = v;
  if (injective_) used_[v] = 1;
  trail_.push_back(x);
  return true;
}

bool MapSearch::propagate() {
  while (head_ < trail_.size()) {
    Element x = trail_[head_];
    Element hx = image_[x];
    if (!set(dom_.neg(x), cod_.neg(hx))) return false;
    // pair x with every element assigned no later than x; later ones pair with x
    // when their own turn comes
    for (std::size_t idx = 0; idx <= head_; ++idx) {
      Element y = trail_[idx];
      Element hy = image_[y];
      for (BinaryOp o : kBinaryOps) {
        if (!set(dom_.op(o, x, y), cod_.op(o, hx, hy))) return false;
        if (!set(dom_.op(o, y, x), cod_.op(o, hy, hx))) return false;
      }
    }
    ++head_;
  }
  return true;
}

void MapSearch::undo(std::size_t mark) {
  while (trail_.size() > mark) {
    Element x = trail_.back();
    trail_.pop_back();
    if (injective_) used_[image_[x]] = 0;
    image_[x] = kUnset;
  }
  if (head_ > mark) head_ = mark;
}

bool MapSearch::descend(const std::function<bool(std::span<const Element>)>& visit) {
  Element next = kUnset;
  for (std::size_t x = 0; x < image_.size(); ++x) {
    if (image_[x] == kUnset) {
      next = static_cast<Element>(x);
      break;
    }
  }
  if (next == kUnset) return visit(image_);
  for (std::size_t v = 0; v < cod_.size(); ++v) {
    std::size_t mark = trail_.size();
    if (set(next, static_cast<Element>(v)) && propagate()) {
      if (!descend(visit)) {
        undo(mark);
        return false;
      }
    }
    undo(mark);
  }
  return true;
}

void MapSearch::run(const std::function<bool(std::span<const Element>)>& visit) {
  if (injective_ && dom_.size() > cod_.size()) return;
  for (std::size_t c = 0; c < dom_.num_constants(); ++c) {
    if (!set(dom_.constant(c), cod_.constant(c))) {
      undo(0);
      return;
    }
  }
  if (propagate()) descend(visit);
  undo(0);
}

}  // namespace latticeforge::detail

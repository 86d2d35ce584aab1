#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace latticeforge {

using Element = std::uint16_t;

// An equivalence relation on {0, ..., size-1}, stored as a block assignment.
// Block ids are canonical: they increase with the least member of each block.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<std::size_t> block_ids);

  static Partition identity(std::size_t size);
  static Partition total(std::size_t size);
  // Elements not listed in any block become singletons.
  static Partition from_blocks(std::size_t size,
                               const std::vector<std::vector<Element>>& blocks);

  std::size_t size() const { return block_id_.size(); }
  std::size_t num_blocks() const { return num_blocks_; }
  std::size_t block_of(Element x) const { return block_id_[x]; }
  bool same_block(Element x, Element y) const { return block_id_[x] == block_id_[y]; }
  const std::vector<std::size_t>& block_ids() const { return block_id_; }
  std::vector<std::vector<Element>> blocks() const;

  // True if every block of *this lies inside a block of other.
  bool refines(const Partition& other) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.block_id_ <=> b.block_id_;
  }

 private:
  std::vector<std::size_t> block_id_;
  std::size_t num_blocks_ = 0;
};

Partition join(const Partition& a, const Partition& b);
Partition meet(const Partition& a, const Partition& b);

}  // namespace latticeforge

#include "latticeforge/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace latticeforge {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a < b) parent[b] = a;
    else if (b < a) parent[a] = b;
  }
};

}  // namespace

Partition::Partition(std::vector<std::size_t> block_ids) : block_id_(std::move(block_ids)) {
  std::vector<std::size_t> seen;
  for (auto& id : block_id_) {
    if (id >= seen.size()) seen.resize(id + 1, SIZE_MAX);
    if (seen[id] == SIZE_MAX) seen[id] = num_blocks_++;
    id = seen[id];
  }
}

Partition Partition::identity(std::size_t size) {
  std::vector<std::size_t> ids(size);
  std::iota(ids.begin(), ids.end(), 0);
  return Partition(std::move(ids));
}

Partition Partition::total(std::size_t size) {
  return Partition(std::vector<std::size_t>(size, 0));
}

Partition Partition::from_blocks(std::size_t size,
                                 const std::vector<std::vector<Element>>& blocks) {
  std::vector<std::size_t> ids(size, SIZE_MAX);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (Element x : blocks[b]) {
      if (x >= size || ids[x] != SIZE_MAX)
        throw std::invalid_argument("from_blocks: blocks do not partition the carrier");
      ids[x] = b;
    }
  }
  std::size_t next = blocks.size();
  for (auto& id : ids)
    if (id == SIZE_MAX) id = next++;
  return Partition(std::move(ids));
}

std::vector<std::vector<Element>> Partition::blocks() const {
  std::vector<std::vector<Element>> out(num_blocks_);
  for (std::size_t x = 0; x < block_id_.size(); ++x)
    out[block_id_[x]].push_back(static_cast<Element>(x));
  return out;
}

bool Partition::refines(const Partition& other) const {
  if (other.size() != size()) return false;
  // x ~ y here must imply x ~ y in other; compare each element with its block head
  std::vector<std::size_t> head(num_blocks_, SIZE_MAX);
  for (std::size_t x = 0; x < size(); ++x) {
    auto& h = head[block_id_[x]];
    if (h == SIZE_MAX) h = x;
    else if (other.block_id_[h] != other.block_id_[x]) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::string s;
  for (const auto& b : blocks()) {
    s += '{';
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(b[i]);
    }
    s += '}';
  }
  return s;
}

Partition join(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("join: size mismatch");
  UnionFind uf(a.size());
  std::vector<std::size_t> head_a(a.num_blocks(), SIZE_MAX), head_b(b.num_blocks(), SIZE_MAX);
  for (std::size_t x = 0; x < a.size(); ++x) {
    auto& ha = head_a[a.block_of(static_cast<Element>(x))];
    if (ha == SIZE_MAX) ha = x;
    uf.unite(ha, x);
    auto& hb = head_b[b.block_of(static_cast<Element>(x))];
    if (hb == SIZE_MAX) hb = x;
    uf.unite(hb, x);
  }
  std::vector<std::size_t> ids(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) ids[x] = uf.find(x);
  return Partition(std::move(ids));
}

Partition meet(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("meet: size mismatch");
  std::vector<std::size_t> ids(a.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    ids[x] = a.block_of(static_cast<Element>(x)) * b.num_blocks() +
             b.block_of(static_cast<Element>(x));
  return Partition(std::move(ids));
}

}  // namespace latticeforge

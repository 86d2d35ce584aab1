#include "latticeforge/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace latticeforge {

bool is_congruence(const FiniteAlgebra& a, const Partition& theta) {
  if (theta.size() != a.size()) return false;
  const std::size_t m = a.size();
  // comparing each element with the least member of its block is enough
  auto blocks = theta.blocks();
  for (const auto& block : blocks) {
    for (std::size_t i = 1; i < block.size(); ++i) {
      Element x = block[0], x2 = block[i];
      if (!theta.same_block(a.neg(x), a.neg(x2))) return false;
      for (std::size_t y = 0; y < m; ++y) {
        auto ey = static_cast<Element>(y);
        for (BinaryOp o : kBinaryOps)
          if (!theta.same_block(a.op(o, x, ey), a.op(o, x2, ey)) ||
              !theta.same_block(a.op(o, ey, x), a.op(o, ey, x2)))
            return false;
      }
    }
  }
  return true;
}

Partition principal_congruence(const FiniteAlgebra& a, Element x, Element y) {
  const std::size_t m = a.size();
  if (x >= m || y >= m) throw std::out_of_range("principal_congruence: element out of range");
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t e) {
    while (parent[e] != e) e = parent[e] = parent[parent[e]];
    return e;
  };
  bool changed = false;
  auto unite = [&](std::size_t p, std::size_t q) {
    p = find(p);
    q = find(q);
    if (p == q) return;
    if (p < q) parent[q] = p;
    else parent[p] = q;
    changed = true;
  };
  unite(x, y);
  while (changed) {
    changed = false;
    for (std::size_t e = 0; e < m; ++e) {
      std::size_t r = find(e);
      if (r == e) continue;
      auto er = static_cast<Element>(r), ee = static_cast<Element>(e);
      unite(a.neg(er), a.neg(ee));
      for (std::size_t z = 0; z < m; ++z) {
        auto ez = static_cast<Element>(z);
        for (BinaryOp o : kBinaryOps) {
          unite(a.op(o, er, ez), a.op(o, ee, ez));
          unite(a.op(o, ez, er), a.op(o, ez, ee));
        }
      }
    }
  }
  std::vector<std::size_t> ids(m);
  for (std::size_t e = 0; e < m; ++e) ids[e] = find(e);
  return Partition(std::move(ids));
}

ConLattice::ConLattice(std::vector<Partition> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end(), [](const Partition& p, const Partition& q) {
    if (p.num_blocks() != q.num_blocks()) return p.num_blocks() > q.num_blocks();
    return p < q;
  });
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  const std::size_t k = members_.size();
  upper_.assign(k, {});
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::size_t> above;
    for (std::size_t j = i + 1; j < k; ++j)
      if (members_[i].refines(members_[j])) above.push_back(j);
    for (std::size_t c = 0; c < above.size(); ++c) {
      bool minimal = true;
      for (std::size_t d = 0; d < above.size() && minimal; ++d)
        if (d != c && members_[above[d]].refines(members_[above[c]])) minimal = false;
      if (minimal) upper_[i].push_back(above[c]);
    }
  }
}

std::optional<std::size_t> ConLattice::index_of(const Partition& p) const {
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i] == p) return i;
  return std::nullopt;
}

ConLattice con_lattice(const FiniteAlgebra& a) {
  const std::size_t m = a.size();
  if (m > kMaxConCarrier)
    throw std::length_error("con_lattice: carrier of size " + std::to_string(m) +
                            " exceeds " + std::to_string(kMaxConCarrier));
  std::set<Partition> seen{Partition::identity(m)};
  std::vector<Partition> list{Partition::identity(m)};
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = x + 1; y < m; ++y) {
      auto p = principal_congruence(a, static_cast<Element>(x), static_cast<Element>(y));
      if (seen.insert(p).second) list.push_back(p);
    }
  // every congruence is a join of principal ones
  for (std::size_t head = 0; head < list.size(); ++head) {
    for (std::size_t idx = 0; idx < head; ++idx) {
      auto j = join(list[head], list[idx]);
      if (seen.insert(j).second) list.push_back(j);
    }
  }
  return ConLattice(std::move(list));
}

bool is_subdirectly_irreducible(const FiniteAlgebra& a) {
  if (a.size() < 2) return false;
  auto con = con_lattice(a);
  return con.upper_covers(0).size() == 1;
}

std::vector<Partition> meet_irreducible_congruences(const ConLattice& con) {
  std::vector<Partition> out;
  for (std::size_t i = 0; i < con.size(); ++i)
    if (con.upper_covers(i).size() == 1) out.push_back(con[i]);
  return out;
}

std::vector<FiniteAlgebra> si_quotients(const FiniteAlgebra& a) {
  std::vector<FiniteAlgebra> out;
  for (const auto& theta : meet_irreducible_congruences(con_lattice(a))) {
    auto q = quotient(a, theta);
    bool fresh = true;
    for (const auto& prev : out)
      if (is_isomorphic(prev, q)) fresh = false;
    if (fresh) out.push_back(q);
  }
  return out;
}

Poset poset_of(const ConLattice& con) {
  Poset p(con.size(), std::vector<bool>(con.size()));
  for (std::size_t i = 0; i < con.size(); ++i)
    for (std::size_t j = 0; j < con.size(); ++j) p[i][j] = con.leq(i, j);
  return p;
}

Poset boolean_plus_top(std::size_t n) {
  const std::size_t cube = std::size_t{1} << n;
  Poset p(cube + 1, std::vector<bool>(cube + 1));
  for (std::size_t s = 0; s < cube; ++s) {
    for (std::size_t t = 0; t < cube; ++t) p[s][t] = (s & t) == s;
    p[s][cube] = true;
  }
  p[cube][cube] = true;
  return p;
}

namespace {

bool extend_iso(const Poset& a, const Poset& b, std::vector<std::size_t>& map,
                std::vector<char>& used, std::size_t next,
                const std::vector<std::pair<std::size_t, std::size_t>>& sig_a,
                const std::vector<std::pair<std::size_t, std::size_t>>& sig_b) {
  if (next == a.size()) return true;
  for (std::size_t v = 0; v < b.size(); ++v) {
    if (used[v] || sig_a[next] != sig_b[v]) continue;
    bool ok = true;
    for (std::size_t u = 0; u < next && ok; ++u)
      ok = a[u][next] == b[map[u]][v] && a[next][u] == b[v][map[u]];
    if (!ok) continue;
    map[next] = v;
    used[v] = 1;
    if (extend_iso(a, b, map, used, next + 1, sig_a, sig_b)) return true;
    used[v] = 0;
  }
  return false;
}

std::vector<std::pair<std::size_t, std::size_t>> signature(const Poset& p) {
  std::vector<std::pair<std::size_t, std::size_t>> sig(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p[j][i]) ++sig[i].first;
      if (p[i][j]) ++sig[i].second;
    }
  return sig;
}

}  // namespace

std::optional<std::vector<std::size_t>> poset_isomorphism(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::vector<std::size_t> map(a.size());
  std::vector<char> used(b.size(), 0);
  if (extend_iso(a, b, map, used, 0, signature(a), signature(b))) return map;
  return std::nullopt;
}

}  // namespace latticeforge

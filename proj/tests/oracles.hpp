#pragma once

// Slow, direct reimplementations used to cross-check the library. Nothing in
// here calls library algorithms beyond reading the tables of an algebra.

#include <algorithm>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "latticeforge/algebra.hpp"
#include "latticeforge/relation.hpp"

namespace oracle {

using latticeforge::BinaryOp;
using latticeforge::Element;
using latticeforge::FiniteAlgebra;
using PairSet = std::set<std::pair<int, int>>;

// J_n element layout: top, f_0..f_n, t_0..t_n, bot.
inline int top() { return 0; }
inline int f(int i) { return 1 + i; }
inline int t(int n, int i) { return n + 2 + i; }
inline int bot(int n) { return 2 * n + 3; }
inline bool is_f(int n, int x) { return x >= 1 && x <= n + 1; }
inline bool is_t(int n, int x) { return x >= n + 2 && x <= 2 * n + 2; }
inline int index_of(int n, int x) { return is_f(n, x) ? x - 1 : x - (n + 2); }

// Read off the diagrams: ⊥ below both chains, ⊤ above both, f_0 and t_0 just under ⊤.
inline bool jn_leq_k(int n, int x, int y) {
  if (x == y || x == bot(n) || y == top()) return true;
  if (is_f(n, x) && is_f(n, y)) return index_of(n, x) >= index_of(n, y);
  if (is_t(n, x) && is_t(n, y)) return index_of(n, x) >= index_of(n, y);
  return false;
}

// f_0 < f_1 < ... < f_n < {⊤, ⊥} < t_n < ... < t_0.
inline bool jn_leq_t(int n, int x, int y) {
  auto level = [n](int z) {
    if (is_f(n, z)) return index_of(n, z);
    if (is_t(n, z)) return 2 * n + 2 - index_of(n, z);
    return n + 1;
  };
  return x == y || level(x) < level(y);
}

inline int jn_neg(int n, int x) {
  if (is_f(n, x)) return t(n, index_of(n, x));
  if (is_t(n, x)) return f(index_of(n, x));
  return x;
}

// Greatest lower bound in a finite order given as a predicate, by scanning.
inline int glb(int size, const std::function<bool(int, int)>& leq, int x, int y) {
  int best = -1;
  for (int z = 0; z < size; ++z)
    if (leq(z, x) && leq(z, y) && (best < 0 || leq(best, z))) best = z;
  return best;
}
inline int lub(int size, const std::function<bool(int, int)>& leq, int x, int y) {
  int best = -1;
  for (int z = 0; z < size; ++z)
    if (leq(x, z) && leq(y, z) && (best < 0 || leq(z, best))) best = z;
  return best;
}

// ---- literal relations ----

inline PairSet literal_snn(int n) {
  PairSet s;
  int size = 2 * n + 4;
  for (int x = 0; x < size; ++x) s.insert({x, top()});
  for (int y = 0; y < size; ++y) s.insert({bot(n), y});
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b) {
      s.insert({f(a), f(b)});
      s.insert({t(n, a), t(n, b)});
    }
  return s;
}

// Band relation: F^2 and T^2 minus {0..i} x {j+1..n}, plus (⊤,⊤), (⊥,⊥).
inline PairSet literal_band(int n, int i, int j) {
  PairSet s{{top(), top()}, {bot(n), bot(n)}};
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b) {
      if (a <= i && b >= j + 1) continue;
      s.insert({f(a), f(b)});
      s.insert({t(n, a), t(n, b)});
    }
  return s;
}
inline PairSet literal_sni(int n, int i) { return i == n ? literal_snn(n) : literal_band(n, i, i); }
inline PairSet literal_rnij(int n, int i, int j) { return literal_band(n, i, j); }

inline PairSet pairs_of(const latticeforge::BinRel& r) {
  PairSet s;
  for (auto [x, y] : r.pairs()) s.insert({x, y});
  return s;
}

inline PairSet converse(const PairSet& s) {
  PairSet out;
  for (auto [x, y] : s) out.insert({y, x});
  return out;
}

// ---- closure and compatibility ----

inline bool compatible(const FiniteAlgebra& a, const FiniteAlgebra& b, const PairSet& s) {
  for (std::size_t c = 0; c < a.num_constants(); ++c)
    if (!s.count({a.constant(c), b.constant(c)})) return false;
  for (auto [x, y] : s) {
    if (!s.count({a.neg(x), b.neg(y)})) return false;
    for (auto [u, v] : s)
      for (auto o : latticeforge::kBinaryOps)
        if (!s.count({a.op(o, x, u), b.op(o, y, v)})) return false;
  }
  return true;
}

// Fixpoint of applying every operation to every pair, starting from seed plus constants.
inline PairSet naive_close(const FiniteAlgebra& a, const FiniteAlgebra& b, PairSet s) {
  for (std::size_t c = 0; c < a.num_constants(); ++c) s.insert({a.constant(c), b.constant(c)});
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::pair<int, int>> cur(s.begin(), s.end());
    for (auto [x, y] : cur) {
      grew |= s.insert({a.neg(x), b.neg(y)}).second;
      for (auto [u, v] : cur)
        for (auto o : latticeforge::kBinaryOps) grew |= s.insert({a.op(o, x, u), b.op(o, y, v)}).second;
    }
  }
  return s;
}

// ---- homomorphisms ----

// Every map a -> b honouring the constants, checked against every operation.
// Only for tiny algebras.
inline std::vector<std::vector<Element>> brute_homs(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  const std::size_t na = a.size(), nb = b.size();
  std::vector<int> pinned(na, -1);
  for (std::size_t c = 0; c < a.num_constants(); ++c) {
    int& p = pinned[a.constant(c)];
    if (p >= 0 && p != b.constant(c)) return {};
    p = b.constant(c);
  }
  std::vector<std::size_t> free_slots;
  for (std::size_t x = 0; x < na; ++x)
    if (pinned[x] < 0) free_slots.push_back(x);
  std::vector<Element> table(na);
  for (std::size_t x = 0; x < na; ++x)
    if (pinned[x] >= 0) table[x] = static_cast<Element>(pinned[x]);
  std::vector<std::vector<Element>> out;
  std::vector<std::size_t> digit(free_slots.size(), 0);
  while (true) {
    for (std::size_t d = 0; d < free_slots.size(); ++d) table[free_slots[d]] = static_cast<Element>(digit[d]);
    bool ok = true;
    for (std::size_t x = 0; x < na && ok; ++x) {
      ok = table[a.neg(x)] == b.neg(table[x]);
      for (std::size_t y = 0; y < na && ok; ++y)
        for (auto o : latticeforge::kBinaryOps)
          if (table[a.op(o, x, y)] != b.op(o, table[x], table[y])) {
            ok = false;
            break;
          }
    }
    if (ok) out.push_back(table);
    std::size_t d = 0;
    while (d < digit.size() && ++digit[d] == nb) digit[d++] = 0;
    if (d == digit.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- partitions ----

// All set partitions of {0..n-1} as restricted growth strings.
inline std::vector<std::vector<std::size_t>> set_partitions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> rgs(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t used) {
    if (pos == n) {
      out.push_back(rgs);
      return;
    }
    for (std::size_t b = 0; b <= used && b < n; ++b) {
      rgs[pos] = b;
      rec(pos + 1, std::max(used, b + 1));
    }
  };
  if (n == 0) return {{}};
  rgs[0] = 0;
  rec(1, 1);
  return out;
}

inline bool naive_congruence(const FiniteAlgebra& a, const std::vector<std::size_t>& block) {
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y) {
      if (block[x] != block[y]) continue;
      if (block[a.neg(x)] != block[a.neg(y)]) return false;
      for (std::size_t z = 0; z < a.size(); ++z)
        for (auto o : latticeforge::kBinaryOps)
          if (block[a.op(o, x, z)] != block[a.op(o, y, z)] ||
              block[a.op(o, z, x)] != block[a.op(o, z, y)])
            return false;
    }
  return true;
}

}  // namespace oracle

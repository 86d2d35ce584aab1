#include "latticeforge/relation.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <thread>

namespace latticeforge {

BinRel::BinRel(FiniteAlgebra dom, FiniteAlgebra cod)
    : dom_(std::move(dom)), cod_(std::move(cod)), bits_(dom_.size() * cod_.size()) {}

BinRel::BinRel(FiniteAlgebra dom, FiniteAlgebra cod, const std::vector<Pair>& pairs)
    : BinRel(std::move(dom), std::move(cod)) {
  for (auto [x, y] : pairs) {
    if (x >= dom_.size() || y >= cod_.size()) throw std::out_of_range("BinRel: pair out of range");
    insert(x, y);
  }
}

BinRel::BinRel(FiniteAlgebra dom, FiniteAlgebra cod, Bits bits)
    : dom_(std::move(dom)), cod_(std::move(cod)), bits_(std::move(bits)) {
  if (bits_.size() != dom_.size() * cod_.size())
    throw std::invalid_argument("BinRel: bitset length does not match |dom|*|cod|");
}

std::vector<Pair> BinRel::pairs() const {
  std::vector<Pair> out;
  out.reserve(size());
  for (auto b = bits_.find_first(); b != Bits::npos; b = bits_.find_next(b))
    out.push_back(pair_at(b));
  return out;
}

bool canonical_less(const Bits& a, const Bits& b) {
  auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  if (a.size() != b.size()) return a.size() < b.size();
  auto diff = a ^ b;
  auto first = diff.find_first();
  return first != Bits::npos && a.test(first);
}

bool canonical_less(const BinRel& a, const BinRel& b) { return canonical_less(a.bits(), b.bits()); }

std::size_t default_max_bits() {
  if (const char* env = std::getenv("LATTICEFORGE_MAX_BITS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 256;
}

namespace {

void require_composable_signature(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  require_same_signature(a, b);
}

// Worklist closure in A×B. `bits` must already be closed (or empty); the extra
// pairs are added and everything new is combined with everything present.
Bits close_from(const FiniteAlgebra& a, const FiniteAlgebra& b, Bits bits,
                const std::vector<std::size_t>& extra) {
  const std::size_t nb = b.size();
  std::vector<std::size_t> members;
  members.reserve(bits.size());
  for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i)) members.push_back(i);
  std::size_t head = members.size();
  auto add = [&](std::size_t e) {
    if (!bits.test(e)) {
      bits.set(e);
      members.push_back(e);
    }
  };
  for (auto e : extra) add(e);
  for (; head < members.size(); ++head) {
    const std::size_t e = members[head];
    const auto x = static_cast<Element>(e / nb), y = static_cast<Element>(e % nb);
    add(std::size_t{a.neg(x)} * nb + b.neg(y));
    for (std::size_t idx = 0; idx <= head; ++idx) {
      const std::size_t f = members[idx];
      const auto x2 = static_cast<Element>(f / nb), y2 = static_cast<Element>(f % nb);
      for (BinaryOp o : kBinaryOps) {
        add(std::size_t{a.op(o, x, x2)} * nb + b.op(o, y, y2));
        add(std::size_t{a.op(o, x2, x)} * nb + b.op(o, y2, y));
      }
    }
  }
  return bits;
}

std::vector<std::size_t> constant_bits(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < a.num_constants(); ++s)
    out.push_back(std::size_t{a.constant(s)} * b.size() + b.constant(s));
  return out;
}

}  // namespace

BinRel constants_diag(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  require_composable_signature(a, b);
  BinRel r(a, b);
  for (std::size_t s = 0; s < a.num_constants(); ++s) r.insert(a.constant(s), b.constant(s));
  return r;
}

BinRel generate(const FiniteAlgebra& a, const FiniteAlgebra& b, const std::vector<Pair>& seed) {
  require_composable_signature(a, b);
  auto extra = constant_bits(a, b);
  for (auto [x, y] : seed) {
    if (x >= a.size() || y >= b.size()) throw std::out_of_range("generate: pair out of range");
    extra.push_back(std::size_t{x} * b.size() + y);
  }
  return BinRel(a, b, close_from(a, b, Bits(a.size() * b.size()), extra));
}

BinRel close(const BinRel& r) {
  auto extra = constant_bits(r.dom(), r.cod());
  for (auto i = r.bits().find_first(); i != Bits::npos; i = r.bits().find_next(i))
    extra.push_back(i);
  return BinRel(r.dom(), r.cod(),
                close_from(r.dom(), r.cod(), Bits(r.bits().size()), extra));
}

bool is_compatible(const BinRel& r) { return close(r) == r; }

BinRel full_relation(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  Bits bits(a.size() * b.size());
  bits.set();
  return BinRel(a, b, std::move(bits));
}

BinRel converse(const BinRel& r) {
  BinRel out(r.cod(), r.dom());
  for (auto [x, y] : r.pairs()) out.insert(y, x);
  return out;
}

BinRel intersect(const std::vector<BinRel>& rs) {
  if (rs.empty()) throw std::invalid_argument("intersect: empty family");
  Bits bits = rs.front().bits();
  for (const auto& r : rs) {
    if (!(r.dom() == rs.front().dom()) || !(r.cod() == rs.front().cod()))
      throw std::invalid_argument("intersect: relations on different algebras");
    bits &= r.bits();
  }
  return BinRel(rs.front().dom(), rs.front().cod(), std::move(bits));
}

BinRel rel_union(const BinRel& r, const BinRel& s) {
  if (!(r.dom() == s.dom()) || !(r.cod() == s.cod()))
    throw std::invalid_argument("rel_union: relations on different algebras");
  return BinRel(r.dom(), r.cod(), r.bits() | s.bits());
}

BinRel rel_product(const BinRel& r, const BinRel& s) {
  if (!(r.cod() == s.dom()))
    throw std::invalid_argument("rel_product: codomain of the first relation is not the domain of the second");
  BinRel out(r.dom(), s.cod());
  for (std::size_t a = 0; a < r.dom().size(); ++a)
    for (std::size_t c = 0; c < r.cod().size(); ++c) {
      if (!r.contains(static_cast<Element>(a), static_cast<Element>(c))) continue;
      for (std::size_t b = 0; b < s.cod().size(); ++b)
        if (s.contains(static_cast<Element>(c), static_cast<Element>(b)))
          out.insert(static_cast<Element>(a), static_cast<Element>(b));
    }
  return out;
}

// ---- named relations on J_n ----

namespace {

struct JIndex {
  std::size_t n;
  Element top() const { return 0; }
  Element f(std::size_t i) const { return static_cast<Element>(1 + i); }
  Element t(std::size_t i) const { return static_cast<Element>(n + 2 + i); }
  Element bot() const { return static_cast<Element>(2 * n + 3); }
};

// {(top,top),(bot,bot)} ∪ (F² \ {f_0..f_i}×{f_{j+1}..f_n}) ∪ (same on T)
BinRel band_relation(std::size_t n, std::size_t i, std::size_t j) {
  auto jn = make_jn(n);
  JIndex ix{n};
  BinRel r(jn, jn);
  r.insert(ix.top(), ix.top());
  r.insert(ix.bot(), ix.bot());
  for (std::size_t p = 0; p <= n; ++p)
    for (std::size_t q = 0; q <= n; ++q) {
      if (p <= i && q >= j + 1) continue;
      r.insert(ix.f(p), ix.f(q));
      r.insert(ix.t(p), ix.t(q));
    }
  return r;
}

}  // namespace

BinRel make_snn(std::size_t n) {
  auto jn = make_jn(n);
  JIndex ix{n};
  BinRel r(jn, jn);
  for (std::size_t x = 0; x < jn.size(); ++x) {
    r.insert(static_cast<Element>(x), ix.top());
    r.insert(ix.bot(), static_cast<Element>(x));
  }
  for (std::size_t p = 0; p <= n; ++p)
    for (std::size_t q = 0; q <= n; ++q) {
      r.insert(ix.f(p), ix.f(q));
      r.insert(ix.t(p), ix.t(q));
    }
  return r;
}

BinRel make_sni(std::size_t n, std::size_t i) {
  if (i > n) throw std::out_of_range("make_sni: need i <= n");
  if (i == n) return make_snn(n);
  return band_relation(n, i, i);
}

BinRel make_rnij(std::size_t n, std::size_t i, std::size_t j) {
  if (!(i < j && j + 1 <= n))
    throw std::out_of_range("make_rnij: need 0 <= i < j <= n-1");
  return band_relation(n, i, j);
}

BinRel make_multi_leq(MultiLeq kind, std::size_t n, std::size_t j, std::size_t k) {
  // element indices: M_0 top=0,f=1,t=2,bot=3; M_k top=0,0=1,f=2,1=3,t=4,bot=5
  switch (kind) {
    case MultiLeq::leq0: {
      auto m0 = make_m0(n);
      BinRel r(m0, m0);
      for (Element x = 0; x < 4; ++x) {
        r.insert(x, 0);
        r.insert(3, x);
      }
      r.insert(1, 1);
      r.insert(2, 2);
      return r;
    }
    case MultiLeq::leqk:
      j = k;
      [[fallthrough]];
    case MultiLeq::leqjk: {
      if (j < 1 || k > n || j > k || (kind == MultiLeq::leqjk && j == k))
        throw std::out_of_range("make_multi_leq: invalid sort indices");
      auto mj = make_mk(n, j);
      auto mk = make_mk(n, k);
      return BinRel(mj, mk, {{0, 0}, {5, 5}, {2, 2}, {2, 1}, {1, 1}, {4, 4}, {4, 3}, {3, 3}});
    }
  }
  throw std::invalid_argument("make_multi_leq: unknown kind");
}

namespace {

struct ImageData {
  std::vector<Element> F, T;  // false and true constant values, without repeats
};

ImageData image_data(const FiniteAlgebra& a) {
  if (a.size() < 2) throw std::invalid_argument("expected a non-trivial algebra: " + a.label());
  ImageData d;
  for (std::size_t i = 0; i <= a.n(); ++i) {
    if (std::find(d.F.begin(), d.F.end(), a.false_constant(i)) == d.F.end())
      d.F.push_back(a.false_constant(i));
    if (std::find(d.T.begin(), d.T.end(), a.true_constant(i)) == d.T.end())
      d.T.push_back(a.true_constant(i));
  }
  return d;
}

}  // namespace

BinRel make_s_le(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  require_composable_signature(a, b);
  auto da = image_data(a), db = image_data(b);
  BinRel r(a, b);
  for (std::size_t x = 0; x < a.size(); ++x) r.insert(static_cast<Element>(x), b.top());
  for (std::size_t y = 0; y < b.size(); ++y) r.insert(a.bottom(), static_cast<Element>(y));
  for (auto x : da.F)
    for (auto y : db.F) r.insert(x, y);
  for (auto x : da.T)
    for (auto y : db.T) r.insert(x, y);
  return r;
}

BinRel make_s_ge(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  require_composable_signature(a, b);
  auto da = image_data(a), db = image_data(b);
  BinRel r(a, b);
  for (std::size_t x = 0; x < a.size(); ++x) r.insert(static_cast<Element>(x), b.bottom());
  for (std::size_t y = 0; y < b.size(); ++y) r.insert(a.top(), static_cast<Element>(y));
  for (auto x : da.F)
    for (auto y : db.F) r.insert(x, y);
  for (auto x : da.T)
    for (auto y : db.T) r.insert(x, y);
  return r;
}

BinRel make_sab(const FiniteAlgebra& a, const FiniteAlgebra& b, Pair ab) {
  require_composable_signature(a, b);
  auto da = image_data(a), db = image_data(b);
  auto [pa, pb] = ab;
  auto in = [](const std::vector<Element>& v, Element x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  auto k = constants_diag(a, b);
  if (!in(da.F, pa) || !in(db.F, pb) || k.contains(pa, pb))
    throw std::invalid_argument("make_sab: pair must lie in (F_A × F_B) \\ K");

  // (du) iff (↓a × ↑b) ∩ K = ∅ inside the F chains
  bool du = true;
  for (std::size_t i = 0; i <= a.n(); ++i) {
    Element x = a.false_constant(i), y = b.false_constant(i);
    if (a.leq_k(x, pa) && b.leq_k(pb, y)) du = false;
  }
  auto excluded = [&](const FiniteAlgebra& alg, Element x, Element pivot, bool down) {
    return down ? alg.leq_k(x, pivot) : alg.leq_k(pivot, x);
  };
  BinRel r(a, b);
  r.insert(a.top(), b.top());
  r.insert(a.bottom(), b.bottom());
  for (auto x : da.F)
    for (auto y : db.F)
      if (!(excluded(a, x, pa, du) && excluded(b, y, pb, !du))) r.insert(x, y);
  Element na = a.neg(pa), nb = b.neg(pb);
  for (auto x : da.T)
    for (auto y : db.T)
      if (!(excluded(a, x, na, du) && excluded(b, y, nb, !du))) r.insert(x, y);
  return r;
}

// ---- Sub(A×B) ----

SubLattice::SubLattice(FiniteAlgebra dom, FiniteAlgebra cod, std::vector<BinRel> members)
    : dom_(std::move(dom)), cod_(std::move(cod)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end(),
            [](const BinRel& x, const BinRel& y) { return canonical_less(x, y); });
  const std::size_t m = members_.size();
  upper_.assign(m, {});
  lower_.assign(m, {});
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::size_t> above;
    for (std::size_t j = i + 1; j < m; ++j)
      if (members_[j].size() > members_[i].size() && members_[i].subset_of(members_[j]))
        above.push_back(j);
    // `above` is in canonical order, so any member below a candidate comes first
    for (std::size_t c = 0; c < above.size(); ++c) {
      bool minimal = true;
      for (std::size_t d = 0; d < c && minimal; ++d)
        if (members_[above[d]].size() < members_[above[c]].size() &&
            members_[above[d]].subset_of(members_[above[c]]))
          minimal = false;
      if (minimal) {
        upper_[i].push_back(above[c]);
        lower_[above[c]].push_back(i);
      }
    }
  }
  for (auto& l : lower_) std::sort(l.begin(), l.end());
}

std::optional<std::size_t> SubLattice::index_of(const BinRel& r) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), r,
                             [](const BinRel& x, const BinRel& y) { return canonical_less(x, y); });
  if (it != members_.end() && *it == r) return static_cast<std::size_t>(it - members_.begin());
  return std::nullopt;
}

SubLattice enumerate_sub(const FiniteAlgebra& a, const FiniteAlgebra& b,
                         const SubLatticeOptions& options) {
  require_composable_signature(a, b);
  const std::size_t nbits = a.size() * b.size();
  if (nbits > options.max_bits)
    throw std::length_error("enumerate_sub: |A|·|B| = " + std::to_string(nbits) +
                            " exceeds the bound " + std::to_string(options.max_bits) +
                            " (set LATTICEFORGE_MAX_BITS to raise it)");
  Bits start = close_from(a, b, Bits(nbits), constant_bits(a, b));
  std::set<Bits> seen{start};
  std::vector<Bits> frontier{start};
  const unsigned threads = std::max(1u, options.threads);

  auto expand = [&](std::size_t lo, std::size_t hi, std::set<Bits>& out) {
    for (std::size_t f = lo; f < hi; ++f) {
      const Bits& s = frontier[f];
      for (std::size_t p = 0; p < nbits; ++p)
        if (!s.test(p)) out.insert(close_from(a, b, s, {p}));
    }
  };

  while (!frontier.empty()) {
    std::vector<std::set<Bits>> found(threads);
    if (threads == 1 || frontier.size() < 2) {
      expand(0, frontier.size(), found[0]);
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (frontier.size() + threads - 1) / threads;
      for (unsigned t = 0; t < threads; ++t) {
        std::size_t lo = t * chunk, hi = std::min(frontier.size(), lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi, t] { expand(lo, hi, found[t]); });
      }
      for (auto& th : pool) th.join();
    }
    std::vector<Bits> next;
    for (auto& part : found)
      for (auto& bits : part)
        if (seen.insert(bits).second) next.push_back(bits);
    frontier = std::move(next);
  }
  std::vector<BinRel> members;
  members.reserve(seen.size());
  for (const auto& bits : seen) members.emplace_back(a, b, bits);
  return SubLattice(a, b, std::move(members));
}

std::vector<BinRel> meet_irreducibles(const SubLattice& lat) {
  std::vector<BinRel> out;
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (lat.upper_covers(i).size() == 1) out.push_back(lat[i]);
  return out;
}

std::vector<BinRel> values_at(const SubLattice& lat, Pair p) {
  std::vector<BinRel> out;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (lat[i].contains(p.first, p.second)) continue;
    bool maximal = true;
    for (auto j : lat.upper_covers(i))
      if (!lat[j].contains(p.first, p.second)) maximal = false;
    if (maximal) out.push_back(lat[i]);
  }
  return out;
}

std::size_t count_up_to_converse(const SubLattice& lat) {
  std::set<Bits> keys;
  for (const auto& r : lat.members()) {
    Bits c = converse(r).bits();
    keys.insert(canonical_less(c, r.bits()) ? c : r.bits());
  }
  return keys.size();
}

std::vector<BinRel> self_converse_members(const SubLattice& lat) {
  std::vector<BinRel> out;
  for (const auto& r : lat.members())
    if (converse(r).bits() == r.bits()) out.push_back(r);
  return out;
}

std::vector<std::pair<std::string, BinRel>> named_relations_jn(std::size_t n) {
  auto jn = make_jn(n);
  std::vector<std::pair<std::string, BinRel>> out;
  auto with_converse = [&](const std::string& name, const BinRel& r) {
    out.emplace_back(name, r);
    auto c = converse(r);
    if (!(c == r)) out.emplace_back(name + "^c", c);
  };
  out.emplace_back("K", constants_diag(jn, jn));
  out.emplace_back("J_" + std::to_string(n) + "^2", full_relation(jn, jn));
  for (std::size_t i = 0; i <= n; ++i)
    with_converse("S_" + std::to_string(n) + "," + std::to_string(i), make_sni(n, i));
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j + 1 <= n; ++j)
      with_converse("R_" + std::to_string(n) + "," + std::to_string(i) + "," + std::to_string(j),
                    make_rnij(n, i, j));
  return out;
}

std::optional<std::string> lookup_name(const std::vector<std::pair<std::string, BinRel>>& names,
                                       const BinRel& r) {
  for (const auto& [name, rel] : names)
    if (rel == r) return name;
  return std::nullopt;
}

std::string pair_name(const BinRel& r, Pair p) {
  return "(" + r.dom().element_name(p.first) + "," + r.cod().element_name(p.second) + ")";
}

}  // namespace latticeforge

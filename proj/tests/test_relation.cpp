#include <doctest.h>

#include <cstdlib>
#include <map>
#include <set>

#include "latticeforge/relation.hpp"
#include "latticeforge/reproduce.hpp"
#include "oracles.hpp"

using namespace latticeforge;
using oracle::PairSet;

namespace {

Element el(int x) { return static_cast<Element>(x); }

// Literal relations between M_j and M_k. M_0: top f t bot; M_k: top 0 f 1 t bot.
struct MSort {
  int size, top, bot;
  std::vector<int> F, T;  // false/true elements, knowledge-increasing
};
MSort mks() { return {6, 0, 5, {2, 1}, {4, 3}}; }

PairSet s_le(const MSort& a, const MSort& b) {
  PairSet s;
  for (int x = 0; x < a.size; ++x) s.insert({x, b.top});
  for (int y = 0; y < b.size; ++y) s.insert({a.bot, y});
  for (int x : a.F)
    for (int y : b.F) s.insert({x, y});
  for (int x : a.T)
    for (int y : b.T) s.insert({x, y});
  return s;
}
PairSet s_ge(const MSort& a, const MSort& b) {
  PairSet s;
  for (int x = 0; x < a.size; ++x) s.insert({x, b.bot});
  for (int y = 0; y < b.size; ++y) s.insert({a.top, y});
  for (int x : a.F)
    for (int y : b.F) s.insert({x, y});
  for (int x : a.T)
    for (int y : b.T) s.insert({x, y});
  return s;
}
// ≤^k and ≤^{jk}: (⊤,⊤),(⊥,⊥),(f,f),(f,0),(0,0),(t,t),(t,1),(1,1)
PairSet leq_k_literal() { return {{0, 0}, {5, 5}, {2, 2}, {2, 1}, {1, 1}, {4, 4}, {4, 3}, {3, 3}}; }
PairSet leq_0_literal() {
  PairSet s{{1, 1}, {2, 2}};
  for (int x = 0; x < 4; ++x) s.insert({x, 0});
  for (int y = 0; y < 4; ++y) s.insert({3, y});
  return s;
}
// S_≤^{0k} as displayed: M_0×{⊤} ∪ {⊥}×M_k ∪ {(f,f),(f,0)} ∪ {(t,t),(t,1)}
PairSet s_le_0k_literal() {
  PairSet s{{1, 2}, {1, 1}, {2, 4}, {2, 3}};
  for (int x = 0; x < 4; ++x) s.insert({x, 0});
  for (int y = 0; y < 6; ++y) s.insert({3, y});
  return s;
}
PairSet s_ge_0k_literal() {
  PairSet s{{1, 2}, {1, 1}, {2, 4}, {2, 3}};
  for (int x = 0; x < 4; ++x) s.insert({x, 5});
  for (int y = 0; y < 6; ++y) s.insert({0, y});
  return s;
}

std::set<PairSet> as_sets(const std::vector<BinRel>& rs) {
  std::set<PairSet> out;
  for (const auto& r : rs) out.insert(oracle::pairs_of(r));
  return out;
}

}  // namespace

TEST_CASE("builders are the literal sets") {
  for (int n = 0; n <= 4; ++n) {
    CHECK(oracle::pairs_of(make_snn(n)) == oracle::literal_snn(n));
    for (int i = 0; i <= n; ++i) CHECK(oracle::pairs_of(make_sni(n, i)) == oracle::literal_sni(n, i));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j <= n - 1; ++j) {
        CHECK(oracle::pairs_of(make_rnij(n, i, j)) == oracle::literal_rnij(n, i, j));
        // defined as a union
        CHECK(make_rnij(n, i, j).bits() == (make_sni(n, i).bits() | make_sni(n, j).bits()));
      }
  }
  CHECK_THROWS(make_rnij(3, 1, 1));
  CHECK_THROWS(make_rnij(3, 0, 3));
  CHECK_THROWS(make_sni(2, 3));
}

TEST_CASE("builders are closed") {
  std::vector<BinRel> all;
  for (std::size_t n = 0; n <= 4; ++n) {
    all.push_back(make_snn(n));
    for (std::size_t i = 0; i <= n; ++i) all.push_back(make_sni(n, i));
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = i + 1; j + 1 <= n; ++j) all.push_back(make_rnij(n, i, j));
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    all.push_back(make_multi_leq(MultiLeq::leq0, n, 0, 0));
    for (std::size_t k = 1; k <= n; ++k) all.push_back(make_multi_leq(MultiLeq::leqk, n, k, k));
    for (std::size_t k = 2; k <= n; ++k)
      for (std::size_t j = 1; j < k; ++j) all.push_back(make_multi_leq(MultiLeq::leqjk, n, j, k));
  }
  for (const auto& r : all) {
    CHECK(close(r) == r);
    CHECK(is_compatible(r));
    CHECK(oracle::compatible(r.dom(), r.cod(), oracle::pairs_of(r)));
  }
}

TEST_CASE("relation sizes") {
  CHECK(make_snn(0).size() == 9);
  // (⊥,⊤) lies in both J_1×{⊤} and {⊥}×J_1, so the union has 19 pairs
  CHECK(make_snn(1).size() == 19);
  CHECK(oracle::literal_snn(1).size() == 19);
  CHECK(make_s_le(make_m0(2), make_mk(2, 1)).size() == 13);
  CHECK(s_le_0k_literal().size() == 13);
}

TEST_CASE("S_0,0 is the knowledge order and S_1,0 is an order") {
  auto j0 = make_jn(0);
  auto s = make_snn(0);
  for (Element x = 0; x < 4; ++x)
    for (Element y = 0; y < 4; ++y) CHECK(s.contains(x, y) == j0.leq_k(x, y));
  auto s10 = make_sni(1, 0);
  for (auto [x, y] : s10.pairs())
    if (x != y) CHECK_FALSE(s10.contains(y, x));
  // S_2,0 is only a quasi-order
  auto s20 = make_sni(2, 0);
  CHECK(s20.contains(el(oracle::f(1)), el(oracle::f(2))));
  CHECK(s20.contains(el(oracle::f(2)), el(oracle::f(1))));
}

TEST_CASE("constants diagonal and generate") {
  auto j2 = make_jn(2);
  auto k = constants_diag(j2, j2);
  CHECK(k.size() == 8);
  for (Element x = 0; x < 8; ++x) CHECK(k.contains(x, x));
  auto m3 = make_mk(3, 2);
  CHECK(constants_diag(m3, m3).size() == 6);
  auto k12 = constants_diag(make_mk(3, 1), make_mk(3, 2));
  CHECK(k12.size() == 8);
  CHECK(k12.contains(2, 1));  // (f, 0)
  CHECK(k12.contains(4, 3));  // (t, 1)
  CHECK(generate(j2, j2, {}) == k);

  // the image of ≤_k generates S_≤ = S_n,n
  for (std::size_t n = 0; n <= 3; ++n) {
    auto a = make_jn(n);
    std::vector<Pair> seed;
    for (Element x = 0; x < a.size(); ++x)
      for (Element y = 0; y < a.size(); ++y)
        if (a.leq_k(x, y)) seed.emplace_back(x, y);
    CHECK(generate(a, a, seed) == make_snn(n));
  }
  auto j0 = make_jn(0);
  CHECK(generate(j0, j0, {{0, 3}, {3, 0}}) == full_relation(j0, j0));
}

TEST_CASE("closure agrees with the naive fixpoint") {
  auto j2 = make_jn(2);
  for (Element x = 0; x < 8; ++x)
    for (Element y = 0; y < 8; ++y) {
      auto r = generate(j2, j2, {{x, y}});
      CHECK(oracle::pairs_of(r) == oracle::naive_close(j2, j2, {{x, y}}));
    }
}

TEST_CASE("S_≤, S_≥ and S_ab") {
  for (std::size_t n = 0; n <= 3; ++n) {
    auto a = make_jn(n);
    CHECK(make_s_le(a, a) == make_snn(n));
    CHECK(make_s_ge(a, a) == converse(make_snn(n)));
  }
  auto m0 = make_m0(2), m1 = make_mk(2, 1), m2 = make_mk(2, 2);
  CHECK(oracle::pairs_of(make_s_le(m0, m1)) == s_le_0k_literal());
  CHECK(oracle::pairs_of(make_s_ge(m0, m1)) == s_ge_0k_literal());
  CHECK(oracle::pairs_of(make_s_le(m1, m2)) == s_le(mks(), mks()));
  CHECK(oracle::pairs_of(make_s_ge(m1, m2)) == s_ge(mks(), mks()));
  CHECK(oracle::pairs_of(make_s_le(m0, m0)) == leq_0_literal());
  CHECK(make_s_ge(m1, m2) == BinRel(m1, m2, converse(make_s_le(m2, m1)).bits()));

  for (std::size_t n = 2; n <= 3; ++n) {
    auto a = make_jn(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) {
        auto sab = make_sab(a, a, {a.false_constant(i), a.false_constant(j)});
        // S_{f_i f_j} = R_{n,i,j-1}, and R_{n,i,i} = S_{n,i}
        CHECK(sab == (j == i + 1 ? make_sni(n, i) : make_rnij(n, i, j - 1)));
        CHECK(is_compatible(sab));
      }
    for (std::size_t i = 0; i < n; ++i)
      CHECK(make_sab(a, a, {a.false_constant(i + 1), a.false_constant(i)}) == converse(make_sni(n, i)));
    CHECK_THROWS(make_sab(a, a, {a.false_constant(0), a.false_constant(0)}));
    CHECK_THROWS(make_sab(a, a, {a.top(), a.false_constant(0)}));
  }
  for (std::size_t k = 1; k <= 2; ++k) {
    auto m = make_mk(2, k);
    CHECK(make_sab(m, m, {1, 2}).bits() == make_multi_leq(MultiLeq::leqk, 2, k, k).bits());
    CHECK(make_sab(m, m, {2, 1}).bits() == converse(make_multi_leq(MultiLeq::leqk, 2, k, k)).bits());
  }
}

TEST_CASE("multi-sorted relations are the literal sets") {
  for (std::size_t n = 1; n <= 3; ++n) {
    CHECK(oracle::pairs_of(make_multi_leq(MultiLeq::leq0, n, 0, 0)) == leq_0_literal());
    for (std::size_t k = 1; k <= n; ++k)
      CHECK(oracle::pairs_of(make_multi_leq(MultiLeq::leqk, n, k, k)) == leq_k_literal());
    for (std::size_t k = 2; k <= n; ++k)
      for (std::size_t j = 1; j < k; ++j)
        CHECK(oracle::pairs_of(make_multi_leq(MultiLeq::leqjk, n, j, k)) == leq_k_literal());
  }
  // ≤^0 is the knowledge order of the four-element bilattice
  auto m0 = make_m0(1);
  auto l0 = make_multi_leq(MultiLeq::leq0, 1, 0, 0);
  for (Element x = 0; x < 4; ++x)
    for (Element y = 0; y < 4; ++y) CHECK(l0.contains(x, y) == m0.leq_k(x, y));
  CHECK_THROWS(make_multi_leq(MultiLeq::leqjk, 2, 2, 2));
  CHECK_THROWS(make_multi_leq(MultiLeq::leqk, 2, 3, 3));
}

TEST_CASE("Sub of tiny products matches brute force over all subsets") {
  // every subset of the 16 pairs, kept when compatible
  for (auto a : {make_jn(0), make_m0(1)}) {
    std::size_t count = 0;
    for (unsigned mask = 0; mask < (1u << 16); ++mask) {
      PairSet s;
      for (int b = 0; b < 16; ++b)
        if (mask >> b & 1) s.insert({b / 4, b % 4});
      if (oracle::compatible(a, a, s)) ++count;
    }
    CHECK(enumerate_sub(a, a).size() == count);
  }
  auto j0 = make_jn(0);
  auto lat = enumerate_sub(j0, j0);
  REQUIRE(lat.size() == 4);
  CHECK(as_sets(lat.members()) ==
        std::set<PairSet>{oracle::pairs_of(constants_diag(j0, j0)), oracle::literal_snn(0),
                          oracle::converse(oracle::literal_snn(0)), oracle::pairs_of(full_relation(j0, j0))});
}

TEST_CASE("Sub(J_n^2) is complete: naive closure certificate") {
  // The family must contain cl(K) and be closed under adding one pair and
  // re-closing; every subuniverse is reached that way from cl(K).
  for (int n = 0; n <= 3; ++n) {
    auto a = make_jn(n);
    auto lat = enumerate_sub(a, a);
    std::set<PairSet> family = as_sets(lat.members());
    CHECK(family.size() == lat.size());
    CHECK(family.count(oracle::naive_close(a, a, {})));
    const int size = 2 * n + 4;
    bool closed = true;
    for (const auto& s : family) {
      CHECK(oracle::compatible(a, a, s));
      if (n == 3) continue;  // the step below is quadratic in pairs; n <= 2 covers it
      for (int x = 0; x < size && closed; ++x)
        for (int y = 0; y < size && closed; ++y) {
          if (s.count({x, y})) continue;
          auto t = s;
          t.insert({x, y});
          closed = family.count(oracle::naive_close(a, a, t)) > 0;
        }
    }
    CHECK(closed);
  }
}

namespace {

// Every intersection of the literal S_n,i, R_n,i,j and their converses.
std::set<PairSet> literal_meets(std::size_t n) {
  std::vector<PairSet> gens;
  for (int i = 0; i <= static_cast<int>(n); ++i) {
    gens.push_back(oracle::literal_sni(n, i));
    gens.push_back(oracle::converse(oracle::literal_sni(n, i)));
  }
  for (int i = 0; i + 1 < static_cast<int>(n); ++i)
    for (int j = i + 1; j <= static_cast<int>(n) - 1; ++j) {
      gens.push_back(oracle::literal_rnij(n, i, j));
      gens.push_back(oracle::converse(oracle::literal_rnij(n, i, j)));
    }
  const int size = 2 * n + 4;
  PairSet full;
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y) full.insert({x, y});
  std::set<PairSet> meets;
  for (std::size_t mask = 0; mask < (std::size_t{1} << gens.size()); ++mask) {
    PairSet s = full;
    for (std::size_t g = 0; g < gens.size(); ++g)
      if (mask >> g & 1) {
        PairSet t;
        for (const auto& p : s)
          if (gens[g].count(p)) t.insert(p);
        s = std::move(t);
      }
    meets.insert(std::move(s));
  }
  return meets;
}

}  // namespace

TEST_CASE("Sub(J_3^2) via intersections of the meet-irreducible list") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto a = make_jn(n);
    CHECK(as_sets(enumerate_sub(a, a).members()) == literal_meets(n));
  }
}

TEST_CASE("Sub(J_n^2) counts") {
  const std::map<std::size_t, std::pair<std::size_t, std::size_t>> expected{
      {0, {4, 3}}, {1, {7, 5}}, {2, {28, 17}}, {3, {199, 107}}};
  for (auto [n, counts] : expected) {
    auto a = make_jn(n);
    auto lat = enumerate_sub(a, a);
    CHECK(lat.size() == counts.first);
    CHECK(count_up_to_converse(lat) == counts.second);
    // classes = (members + self-converse) / 2
    CHECK(2 * count_up_to_converse(lat) == lat.size() + self_converse_members(lat).size());
  }
}

TEST_CASE("self-converse members of Sub(J_3^2)") {
  auto a = make_jn(3);
  auto lat = enumerate_sub(a, a);
  auto sc = self_converse_members(lat);
  std::size_t direct = 0;
  for (const auto& r : lat.members())
    if (oracle::pairs_of(r) == oracle::converse(oracle::pairs_of(r))) ++direct;
  CHECK(sc.size() == direct);
  CHECK(sc.size() == 15);
  // sizes agree with the self-converse sets among the literal intersections
  std::multiset<std::size_t> sizes, expected;
  for (const auto& r : sc) sizes.insert(r.size());
  for (const auto& m : literal_meets(3))
    if (m == oracle::converse(m)) expected.insert(m.size());
  CHECK(sizes == expected);
  CHECK(*sizes.begin() == 10);    // K
  CHECK(*sizes.rbegin() == 100);  // the full relation
}

TEST_CASE("Sub lattice invariants") {
  for (std::size_t n = 0; n <= 2; ++n) {
    auto a = make_jn(n);
    auto lat = enumerate_sub(a, a);
    std::set<Bits> members;
    for (const auto& r : lat.members()) members.insert(r.bits());
    CHECK(members.count(constants_diag(a, a).bits()));
    CHECK(members.count(full_relation(a, a).bits()));
    for (const auto& r : lat.members())
      for (const auto& s : lat.members()) CHECK(members.count(r.bits() & s.bits()));
    // canonical order
    for (std::size_t i = 1; i < lat.size(); ++i) CHECK(canonical_less(lat[i - 1], lat[i]));
    // covers really are covers
    for (std::size_t i = 0; i < lat.size(); ++i)
      for (auto j : lat.upper_covers(i)) {
        CHECK(lat[i].bits().is_proper_subset_of(lat[j].bits()));
        for (std::size_t m = 0; m < lat.size(); ++m)
          CHECK_FALSE((lat[i].bits().is_proper_subset_of(lat[m].bits()) &&
                       lat[m].bits().is_proper_subset_of(lat[j].bits())));
      }
  }
  for (std::size_t n = 0; n <= 1; ++n) {
    auto m = n == 0 ? make_jn(0) : make_mk(1, 1);
    auto lat = enumerate_sub(m, m);
    CHECK(lat.index_of(full_relation(m, m)).has_value());
  }
}

TEST_CASE("enumeration does not depend on the thread count") {
  auto a = make_jn(3);
  auto one = enumerate_sub(a, a, {default_max_bits(), 1});
  auto four = enumerate_sub(a, a, {default_max_bits(), 4});
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) CHECK(one[i] == four[i]);
}

TEST_CASE("size bound") {
  auto a = make_jn(7);  // 18^2 = 324 bits
  CHECK_THROWS_AS(enumerate_sub(a, a), std::length_error);
  CHECK_THROWS_AS(enumerate_sub(a, a, {100, 1}), std::length_error);
}

TEST_CASE("meet-irreducibles: the classification and two computations agree") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto a = make_jn(n);
    auto lat = enumerate_sub(a, a);
    auto mi = meet_irreducibles(lat);
    CHECK(as_sets(mi) == as_sets(expected_meet_irreducibles_jn(n)));
    CHECK(mi.size() == (n == 1 ? 4 : n == 2 ? 8 : 14));
    std::set<PairSet> from_values;
    for (Element x = 0; x < a.size(); ++x)
      for (Element y = 0; y < a.size(); ++y)
        for (const auto& v : values_at(lat, {x, y})) from_values.insert(oracle::pairs_of(v));
    CHECK(from_values == as_sets(mi));
  }
}

TEST_CASE("values_at examples") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto a = make_jn(n);
    auto lat = enumerate_sub(a, a);
    for (Element x = 0; x < a.size(); ++x) CHECK(values_at(lat, {x, x}).empty());
    auto v = values_at(lat, {a.top(), a.bottom()});
    REQUIRE(v.size() == 1);
    CHECK(v[0] == make_snn(n));
  }
  auto j2 = make_jn(2);
  auto v = values_at(enumerate_sub(j2, j2), {j2.false_constant(0), j2.false_constant(1)});
  REQUIRE(v.size() == 1);
  CHECK(v[0] == make_sni(2, 0));
}

TEST_CASE("meet-irreducibles of Sub(M_j × M_k)") {
  const std::size_t n = 3;
  auto m0 = make_m0(n);
  std::vector<FiniteAlgebra> mk{m0};
  for (std::size_t k = 1; k <= n; ++k) mk.push_back(make_mk(n, k));
  CHECK(as_sets(meet_irreducibles(enumerate_sub(m0, m0))) ==
        std::set<PairSet>{leq_0_literal(), oracle::converse(leq_0_literal())});
  for (std::size_t k = 1; k <= n; ++k) {
    CHECK(as_sets(meet_irreducibles(enumerate_sub(mk[k], mk[k]))) ==
          std::set<PairSet>{leq_k_literal(), oracle::converse(leq_k_literal()), s_le(mks(), mks()),
                            s_ge(mks(), mks())});
    CHECK(as_sets(meet_irreducibles(enumerate_sub(m0, mk[k]))) ==
          std::set<PairSet>{s_le_0k_literal(), s_ge_0k_literal()});
    for (std::size_t j = 1; j < k; ++j)
      CHECK(as_sets(meet_irreducibles(enumerate_sub(mk[j], mk[k]))) ==
            std::set<PairSet>{leq_k_literal(), s_le(mks(), mks()), s_ge(mks(), mks())});
  }
}

TEST_CASE("converse, intersection and products") {
  auto a = make_jn(3);
  for (std::size_t i = 0; i <= 3; ++i) CHECK(converse(converse(make_sni(3, i))) == make_sni(3, i));
  CHECK(intersect({make_snn(3), converse(make_snn(3))}).bits() ==
        (make_snn(3).bits() & converse(make_snn(3)).bits()));
  CHECK(is_compatible(intersect({make_sni(3, 0), make_sni(3, 2), converse(make_snn(3))})));
  CHECK(rel_union(make_sni(3, 0), make_sni(3, 1)) == make_rnij(3, 0, 1));

  CHECK(rel_product(make_sni(3, 0), make_sni(3, 1)) == make_rnij(3, 0, 1));
  CHECK(rel_product(make_sni(3, 0), make_sni(3, 2)) == make_rnij(3, 0, 2));
  // brute-force composition
  for (std::size_t i = 0; i <= 3; ++i)
    for (std::size_t j = 0; j <= 3; ++j) {
      auto r = make_sni(3, i), s = make_sni(3, j);
      PairSet expected;
      for (auto [x, c] : r.pairs())
        for (auto [c2, y] : s.pairs())
          if (c == c2) expected.insert({x, y});
      CHECK(oracle::pairs_of(rel_product(r, s)) == expected);
    }
  auto k = constants_diag(a, a);
  for (std::size_t i = 0; i <= 3; ++i) CHECK(make_sni(3, i).subset_of(rel_product(make_sni(3, i), k)));
  CHECK_THROWS(rel_product(make_sni(3, 0), BinRel(make_jn(2), make_jn(2))));
}

TEST_CASE("names") {
  auto names = named_relations_jn(3);
  CHECK(lookup_name(names, make_rnij(3, 0, 2)) == "R_3,0,2");
  CHECK(lookup_name(names, converse(make_sni(3, 1))) == "S_3,1^c");
  CHECK(lookup_name(names, constants_diag(make_jn(3), make_jn(3))) == "K");
  auto r = make_sni(1, 0);
  CHECK(pair_name(r, {r.dom().top(), r.dom().bottom()}) == "(top,bot)");
}

#include <doctest.h>

#include "latticeforge/congruence.hpp"
#include "oracles.hpp"

using namespace latticeforge;

namespace {

std::set<std::vector<std::size_t>> brute_congruences(const FiniteAlgebra& a) {
  std::set<std::vector<std::size_t>> out;
  for (const auto& rgs : oracle::set_partitions(a.size()))
    if (oracle::naive_congruence(a, rgs)) out.insert(Partition(rgs).block_ids());
  return out;
}

std::set<std::vector<std::size_t>> lib_congruences(const ConLattice& con) {
  std::set<std::vector<std::size_t>> out;
  for (const auto& p : con.members()) out.insert(p.block_ids());
  return out;
}

Element el(int x) { return static_cast<Element>(x); }

}  // namespace

TEST_CASE("con_lattice matches brute force over all partitions") {
  for (std::size_t n = 0; n <= 3; ++n) {
    auto a = make_jn(n);
    CHECK(lib_congruences(con_lattice(a)) == brute_congruences(a));
  }
  CHECK(lib_congruences(con_lattice(make_m0(2))) == brute_congruences(make_m0(2)));
  CHECK(lib_congruences(con_lattice(make_mk(2, 1))) == brute_congruences(make_mk(2, 1)));
}

TEST_CASE("every congruence passes the re-check") {
  for (std::size_t n = 0; n <= 4; ++n) {
    auto a = make_jn(n);
    for (auto all = con_lattice(a); const auto& p : all.members()) {
      CHECK(is_congruence(a, p));
      CHECK(oracle::naive_congruence(a, p.block_ids()));
    }
  }
}

TEST_CASE("Con(J_n) is 2^n with a new top") {
  for (std::size_t n = 0; n <= 4; ++n) {
    auto con = con_lattice(make_jn(n));
    CHECK(con.size() == (std::size_t{1} << n) + 1);
    CHECK(poset_isomorphism(poset_of(con), boolean_plus_top(n)).has_value());
    if (n >= 1) CHECK_FALSE(poset_isomorphism(poset_of(con), boolean_plus_top(n - 1)).has_value());
  }
  // 2^2 (+) 1 is not the 5-element chain
  Poset chain(5, std::vector<bool>(5));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i; j < 5; ++j) chain[i][j] = true;
  CHECK_FALSE(poset_isomorphism(chain, boolean_plus_top(2)).has_value());
}

TEST_CASE("non-trivial congruences collapse adjacent f-pairs and the mirrored t-pairs") {
  for (int n = 1; n <= 4; ++n) {
    auto a = make_jn(n);
    auto all = Partition::total(a.size());
    for (auto con = con_lattice(a); const auto& p : con.members()) {
      if (p == all) continue;
      CHECK(p.block_of(el(oracle::top())) != p.block_of(el(oracle::f(0))));
      CHECK(p.num_blocks() >= 4);
      for (int x = 0; x < 2 * n + 4; ++x) {
        for (int y = 0; y < 2 * n + 4; ++y) {
          if (x == y || !p.same_block(el(x), el(y))) continue;
          // only f's with f's and t's with t's
          bool ff = oracle::is_f(n, x) && oracle::is_f(n, y);
          bool tt = oracle::is_t(n, x) && oracle::is_t(n, y);
          CHECK((ff || tt));
          // mirrored through negation
          CHECK(p.same_block(el(oracle::jn_neg(n, x)), el(oracle::jn_neg(n, y))));
          // blocks are intervals of the chain
          int lo = std::min(oracle::index_of(n, x), oracle::index_of(n, y));
          int hi = std::max(oracle::index_of(n, x), oracle::index_of(n, y));
          for (int m = lo; m <= hi; ++m)
            CHECK(p.same_block(el(x), el(ff ? oracle::f(m) : oracle::t(n, m))));
        }
      }
    }
  }
}

TEST_CASE("principal congruences") {
  auto j2 = make_jn(2);
  CHECK(principal_congruence(j2, 3, 3) == Partition::identity(8));
  CHECK(principal_congruence(j2, j2.top(), j2.false_constant(0)) == Partition::total(8));
  auto p = principal_congruence(j2, j2.false_constant(0), j2.false_constant(1));
  CHECK(p == Partition::from_blocks(8, {{j2.false_constant(0), j2.false_constant(1)},
                                        {j2.true_constant(0), j2.true_constant(1)}}));
}

TEST_CASE("subdirect irreducibility") {
  CHECK(is_subdirectly_irreducible(make_jn(0)));
  CHECK_FALSE(is_subdirectly_irreducible(make_jn(2)));
  CHECK(is_subdirectly_irreducible(make_mk(3, 2)));
  CHECK(con_lattice(make_m0(3)).size() == 2);
  for (std::size_t k = 1; k <= 3; ++k) {
    auto con = con_lattice(make_mk(3, k));
    CHECK(con.size() == 3);  // Δ < monolith < ∇
    CHECK(con.upper_covers(0).size() == 1);
  }
}

TEST_CASE("subdirectly irreducible quotients") {
  for (std::size_t n = 0; n <= 4; ++n) {
    auto qs = si_quotients(make_jn(n));
    REQUIRE(qs.size() == n + 1);
    std::vector<FiniteAlgebra> expected{n == 0 ? make_jn(0) : make_m0(n)};
    for (std::size_t k = 1; k <= n; ++k) expected.push_back(make_mk(n, k));
    std::vector<bool> hit(expected.size(), false);
    for (const auto& q : qs) {
      CHECK(is_subdirectly_irreducible(q));
      // every element is a constant, so no proper subalgebras
      CHECK(generated_subuniverse(q, {}).size() == q.size());
      std::size_t matches = 0;
      for (std::size_t e = 0; e < expected.size(); ++e)
        if (is_isomorphic(q, expected[e])) {
          hit[e] = true;
          ++matches;
        }
      CHECK(matches == 1);
    }
    CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
  }
}

TEST_CASE("meet-irreducible congruences") {
  auto con = con_lattice(make_jn(3));
  // the coatom and its n lower covers
  CHECK(meet_irreducible_congruences(con).size() == 4);
}

TEST_CASE("size bound") {
  CHECK_THROWS(con_lattice(make_jn(15)));  // 34 elements
}

#include "latticeforge/reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "latticeforge/congruence.hpp"
#include "latticeforge/duality.hpp"

namespace latticeforge {

namespace {

std::set<Bits> bit_set(const std::vector<BinRel>& rs) {
  std::set<Bits> out;
  for (const auto& r : rs) out.insert(r.bits());
  return out;
}

std::string join_detail(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += "; ";
    s += p;
  }
  return s;
}

CriterionOutcome sub_j3(unsigned threads) {
  auto j3 = make_jn(3);
  auto lat = enumerate_sub(j3, j3, {default_max_bits(), threads});
  auto classes = count_up_to_converse(lat);
  return {lat.size() == 200 && classes == 107,
          "|Sub(J_3^2)|=" + std::to_string(lat.size()) + ", up to converse " +
              std::to_string(classes)};
}

CriterionOutcome sub_j2(unsigned threads) {
  auto j2 = make_jn(2);
  auto lat = enumerate_sub(j2, j2, {default_max_bits(), threads});
  auto mi = meet_irreducibles(lat);
  std::vector<BinRel> expected;
  for (const auto& r : {make_sni(2, 0), make_sni(2, 1), make_sni(2, 2), make_rnij(2, 0, 1)}) {
    expected.push_back(r);
    expected.push_back(converse(r));
  }
  bool ok = lat.size() == 28 && mi.size() == 8 && bit_set(mi) == bit_set(expected);
  return {ok, "|Sub(J_2^2)|=" + std::to_string(lat.size()) + ", meet-irreducibles " +
                  std::to_string(mi.size())};
}

CriterionOutcome mi_classification(unsigned threads) {
  std::vector<std::string> parts;
  bool ok = true;
  for (std::size_t n = 1; n <= 3; ++n) {
    auto jn = make_jn(n);
    auto lat = enumerate_sub(jn, jn, {default_max_bits(), threads});
    auto mi = meet_irreducibles(lat);
    bool match = bit_set(mi) == bit_set(expected_meet_irreducibles_jn(n));
    // values give the same family
    std::set<Bits> from_values;
    for (std::size_t x = 0; x < jn.size(); ++x)
      for (std::size_t y = 0; y < jn.size(); ++y)
        for (const auto& v : values_at(lat, {static_cast<Element>(x), static_cast<Element>(y)}))
          from_values.insert(v.bits());
    match = match && from_values == bit_set(mi);
    ok = ok && match;
    parts.push_back("n=" + std::to_string(n) + ": " + std::to_string(mi.size()) +
                    (match ? " match" : " MISMATCH"));
  }
  return {ok, join_detail(parts)};
}

CriterionOutcome con_shape(unsigned) {
  std::vector<std::string> parts;
  bool ok = true;
  for (std::size_t n = 0; n <= 4; ++n) {
    auto con = con_lattice(make_jn(n));
    bool iso = poset_isomorphism(poset_of(con), boolean_plus_top(n)).has_value();
    ok = ok && iso;
    parts.push_back("n=" + std::to_string(n) + ": |Con|=" + std::to_string(con.size()) +
                    (iso ? " ok" : " not 2^n+1"));
  }
  return {ok, join_detail(parts)};
}

CriterionOutcome si_quotient_check(unsigned) {
  std::vector<std::string> parts;
  bool ok = true;
  for (std::size_t n = 0; n <= 4; ++n) {
    auto qs = si_quotients(make_jn(n));
    std::vector<FiniteAlgebra> expected{n == 0 ? make_jn(0) : make_m0(n)};
    for (std::size_t k = 1; k <= n; ++k) expected.push_back(make_mk(n, k));
    bool good = qs.size() == n + 1;
    // match each quotient to a distinct expected algebra
    std::vector<char> used(expected.size(), 0);
    for (const auto& q : qs) {
      bool matched = false;
      for (std::size_t e = 0; e < expected.size() && !matched; ++e)
        if (!used[e] && is_isomorphic(q, expected[e])) used[e] = matched = true;
      good = good && matched;
      good = good && is_subdirectly_irreducible(q);
      good = good && generated_subuniverse(q, {}).size() == q.size();
    }
    for (std::size_t a = 0; a < qs.size(); ++a)
      for (std::size_t b = a + 1; b < qs.size(); ++b) good = good && !is_isomorphic(qs[a], qs[b]);
    ok = ok && good;
    parts.push_back("n=" + std::to_string(n) + ": " + std::to_string(qs.size()) +
                    (good ? " ok" : " FAIL"));
  }
  return {ok, join_detail(parts)};
}

CriterionOutcome free_v1(unsigned) {
  auto single = free_algebra(single_alter_ego(1), 1);
  auto multi = free_algebra(multi_alter_ego(1), 1);
  auto iso = is_isomorphic(single, multi);
  bool iso_ok = iso && is_homomorphism(single, multi, *iso);
  MultiAlterEgo m0_only;
  auto full = multi_alter_ego(1);
  m0_only.sorts = {full.sorts[0]};
  m0_only.relations = {full.relations[0]};
  auto leq0_maps =
      enumerate_morphisms(power_structure(m0_only, 1), m0_only, ItemMask::all(m0_only)).size();
  bool ok = single.size() == 266 && multi.size() == 266 && iso_ok && leq0_maps == 36;
  return {ok, "single=" + std::to_string(single.size()) + " multi=" +
                  std::to_string(multi.size()) + " isomorphic=" + (iso_ok ? "yes" : "no") +
                  " leq0-maps=" + std::to_string(leq0_maps)};
}

CriterionOutcome duality_all(unsigned threads) {
  std::vector<std::string> parts;
  bool ok = true;
  for (std::size_t n = 0; n <= 2; ++n) {
    auto ego = single_alter_ego(n).as_multi();
    auto jn = ego.sorts[0];
    auto lat = enumerate_sub(jn, jn, {default_max_bits(), threads});
    std::size_t good = 0;
    for (const auto& r : lat.members())
      if (check_duality(algebra_of(r).algebra, ego)) ++good;
    bool base = check_duality(jn, ego);
    ok = ok && good == lat.size() && base;
    parts.push_back("single n=" + std::to_string(n) + ": " + std::to_string(good) + "/" +
                    std::to_string(lat.size()) + (base ? "" : " (J_n fails)"));
  }
  for (std::size_t n = 1; n <= 2; ++n) {
    auto ego = multi_alter_ego(n);
    std::size_t total = 0, good = 0;
    for (const auto& sort : ego.sorts) {
      ++total;
      if (check_duality(sort, ego)) ++good;
    }
    for (const auto& a : ego.sorts)
      for (const auto& b : ego.sorts) {
        auto lat = enumerate_sub(a, b, {default_max_bits(), threads});
        for (const auto& r : lat.members()) {
          ++total;
          if (check_duality(algebra_of(r).algebra, ego)) ++good;
        }
      }
    ok = ok && good == total;
    parts.push_back("multi n=" + std::to_string(n) + ": " + std::to_string(good) + "/" +
                    std::to_string(total));
  }
  return {ok, join_detail(parts)};
}

CriterionOutcome hom_minimality(unsigned) {
  std::vector<std::string> parts;
  bool ok = true;
  for (std::size_t n = 1; n <= 3; ++n) {
    auto snn = make_snn(n);
    auto d = enumerate_homs(algebra_of(snn).algebra, make_jn(n)).size();
    ok = ok && d == 2 && is_hom_minimal(snn);
    parts.push_back("|D(S_" + std::to_string(n) + "," + std::to_string(n) + ")|=" + std::to_string(d));
  }
  auto h00 = enumerate_homs(algebra_of(make_snn(0)).algebra, make_jn(0)).size();
  ok = ok && h00 == 6 && !is_hom_minimal(make_snn(0));
  parts.push_back("|hom(S_0,0, J_0)|=" + std::to_string(h00));
  for (std::size_t j = 2; j <= 2; ++j)
    for (std::size_t i = 0; i + 1 < j; ++i) {
      bool hm = is_hom_minimal(make_rnij(3, i, j));
      ok = ok && hm;
      parts.push_back("R_3," + std::to_string(i) + "," + std::to_string(j) +
                      (hm ? " hom-minimal" : " NOT hom-minimal"));
    }
  return {ok, join_detail(parts)};
}

CriterionOutcome rel_products(unsigned) {
  std::vector<std::string> parts;
  bool ok = true;
  for (std::size_t n = 2; n <= 3; ++n)
    for (std::size_t i = 0; i + 2 <= n; ++i) {
      auto r = make_sni(n, i), s = make_sni(n, i + 1);
      bool eq = rel_product(r, s) == make_rnij(n, i, i + 1);
      auto w = check_hom_rel_product(r, s);
      auto u = midpoint_selector(n, i);
      bool formula = is_homomorphism(u.dom, u.cod, u.table) &&
                     enumerate_homs(u.dom, u.cod).size() > 0 &&
                     [&] {
                       auto homs = enumerate_homs(u.dom, u.cod);
                       return std::find(homs.begin(), homs.end(), u) != homs.end();
                     }();
      ok = ok && eq && w && formula;
      parts.push_back("S_" + std::to_string(n) + "," + std::to_string(i) + "·S_" +
                      std::to_string(n) + "," + std::to_string(i + 1) +
                      (eq && w && formula ? " homomorphic" : " FAIL"));
    }
  auto r = make_sni(3, 0), s = make_sni(3, 2);
  bool eq = rel_product(r, s) == make_rnij(3, 0, 2);
  bool none = !check_hom_rel_product(r, s).has_value();
  ok = ok && eq && none;
  parts.push_back(std::string("S_3,0·S_3,2 = R_3,0,2: ") + (eq ? "yes" : "no") +
                  ", witness: " + (none ? "none" : "FOUND"));
  return {ok, join_detail(parts)};
}

CriterionOutcome optimality(unsigned) {
  std::vector<std::string> parts;
  bool ok = true;
  auto tally = [&](const std::string& tag, const std::vector<OptimalityRecord>& recs) {
    std::size_t good = 0;
    for (const auto& rec : recs)
      if (rec.witness_verified && rec.search_agrees) ++good;
    ok = ok && good == recs.size();
    parts.push_back(tag + ": " + std::to_string(good) + "/" + std::to_string(recs.size()));
  };
  for (std::size_t n = 1; n <= 3; ++n) tally("single n=" + std::to_string(n), single_optimality_suite(n));
  for (std::size_t n = 1; n <= 2; ++n) tally("multi n=" + std::to_string(n), multi_optimality_suite(n));
  return {ok, join_detail(parts)};
}

CriterionOutcome cardinalities(unsigned) {
  bool ok = true;
  std::string detail;
  for (std::size_t n = 1; n <= 5; ++n) {
    auto r = single_alter_ego(n).named_relations.size();
    auto m = multi_alter_ego(n).num_items();
    ok = ok && 2 * r == n * n - n + 4 && 2 * m == n * n + 3 * n + 2;
    detail += (detail.empty() ? "" : " ") + std::to_string(r) + "/" + std::to_string(m);
  }
  return {ok, "|R_(n)|/|S_(n)∪G_(n)| for n=1..5: " + detail};
}

CriterionOutcome sort_homs(unsigned) {
  bool ok = true;
  std::vector<std::string> parts;
  for (std::size_t n = 1; n <= 4; ++n) {
    auto ego = multi_alter_ego(n);
    bool good = true;
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t k = 0; k <= n; ++k) {
        auto homs = enumerate_homs(ego.sorts[j], ego.sorts[k]);
        std::vector<Hom> expected;
        if (j == k) expected.push_back(identity_hom(ego.sorts[j]));
        else if (k == 0) expected.push_back(ego.maps[j - 1].map);
        good = good && homs == expected;
      }
    ok = ok && good;
    parts.push_back("n=" + std::to_string(n) + (good ? " ok" : " FAIL"));
  }
  return {ok, join_detail(parts)};
}

}  // namespace

std::vector<BinRel> expected_meet_irreducibles_jn(std::size_t n) {
  std::vector<BinRel> out;
  auto add = [&](const BinRel& r) {
    out.push_back(r);
    out.push_back(converse(r));
  };
  for (std::size_t i = 0; i <= n; ++i) add(make_sni(n, i));
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j + 1 <= n; ++j) add(make_rnij(n, i, j));
  return out;
}

Hom midpoint_selector(std::size_t n, std::size_t i) {
  auto rel = make_rnij(n, i, i + 1);
  auto sub = algebra_of(rel);
  auto jn = rel.dom();
  Hom u{sub.algebra, jn, std::vector<Element>(sub.algebra.size())};
  for (std::size_t e = 0; e < sub.algebra.size(); ++e) {
    auto x = sub.projections[0](static_cast<Element>(e));
    auto y = sub.projections[1](static_cast<Element>(e));
    if (x == jn.top() || x == jn.bottom()) {
      u.table[e] = x;  // (top,top) and (bot,bot)
      continue;
    }
    // f_k lives at 1+k, t_k at n+2+k
    const std::size_t base = x <= n + 1 ? 1 : n + 2;
    const std::size_t k = x - base, l = y - base;
    std::size_t pick = k < i + 1 ? k : (l <= i + 1 ? i + 1 : l);
    u.table[e] = static_cast<Element>(base + pick);
  }
  return u;
}

std::vector<Criterion> acceptance_criteria() {
  return {
      {1, "subuniverse", "|Sub(J_3^2)| = 200, 107 up to converse", 300, sub_j3},
      {2, "subuniverse", "|Sub(J_2^2)| = 28 with 8 meet-irreducibles", 10, sub_j2},
      {3, "subuniverse", "meet-irreducibles of Sub(J_n^2), n = 1..3", 300, mi_classification},
      {4, "congruence", "Con(J_n) ≅ 2^n (+) 1, n = 0..4", 30, con_shape},
      {5, "congruence", "subdirectly irreducible quotients of J_n, n = 0..4", 60, si_quotient_check},
      {6, "free", "|F_V1(1)| = 266 by both routes, isomorphic; 36 leq0-maps", 120, free_v1},
      {7, "duality", "duality on Sub(J_n^2) (n <= 2) and multi-sorted (n = 1, 2)", 300, duality_all},
      {8, "homs", "hom-minimality", 60, hom_minimality},
      {9, "homs", "homomorphic relational products", 60, rel_products},
      {10, "optimality", "optimality witnesses", 300, optimality},
      {11, "cardinality", "|R_(n)| and |S_(n) ∪ G_(n)|, n = 1..5", 10, cardinalities},
      {12, "homs", "homs between M_0..M_n, n = 1..4", 30, sort_homs},
  };
}

std::vector<std::string> criterion_groups() {
  std::vector<std::string> out;
  for (const auto& c : acceptance_criteria())
    if (std::find(out.begin(), out.end(), c.group) == out.end()) out.push_back(c.group);
  return out;
}

std::vector<CriterionResult> run_criteria(const std::string& only, unsigned threads,
                                          const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (const auto& c : acceptance_criteria()) {
    if (!only.empty() && c.group != only) continue;
    auto start = std::chrono::steady_clock::now();
    CriterionOutcome outcome;
    try {
      outcome = c.run(threads);
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs <= c.budget_seconds;
    if (!in_time) outcome.detail += "; over time budget";
    out.push_back({c.id, c.group, c.title, outcome.pass && in_time, outcome.detail, secs,
                   c.budget_seconds});
    if (on_result) on_result(out.back());
  }
  return out;
}

}  // namespace latticeforge

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "latticeforge/hom.hpp"
#include "latticeforge/relation.hpp"

namespace latticeforge {

struct CriterionOutcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string group;  // filter key for --only
  std::string title;
  double budget_seconds;
  std::function<CriterionOutcome(unsigned threads)> run;
};

struct CriterionResult {
  int id;
  std::string group;
  std::string title;
  bool pass;
  std::string detail;
  double seconds;
  double budget_seconds;
};

std::vector<Criterion> acceptance_criteria();
std::vector<std::string> criterion_groups();

// Runs the criteria whose group equals `only` (all when empty). A criterion
// fails when it exceeds its time budget.
std::vector<CriterionResult> run_criteria(const std::string& only, unsigned threads,
                                          const std::function<void(const CriterionResult&)>& on_result = {});

// The midpoint selector u: R_{n,i,i+1} -> J_n from the homomorphic relational
// product S_{n,i}·S_{n,i+1}, as a table over algebra_of(make_rnij(n,i,i+1)).
Hom midpoint_selector(std::size_t n, std::size_t i);

// The meet-irreducibles of Sub(J_n^2) as described by the classification:
// S_{n,i}, R_{n,i,j} (i<j<n) and their converses.
std::vector<BinRel> expected_meet_irreducibles_jn(std::size_t n);

}  // namespace latticeforge

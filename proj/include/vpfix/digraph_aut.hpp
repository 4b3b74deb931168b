#pragma once

#include <chrono>

#include <boost/multiprecision/cpp_int.hpp>

#include "vpfix/digraph.hpp"
#include "vpfix/perm_group.hpp"

namespace vpfix {

using BigInt = boost::multiprecision::cpp_int;

struct SearchBudget {
  std::chrono::milliseconds time_limit{120'000};
  unsigned long long max_nodes = 50'000'000;
};

struct AutResult {
  // Generated by the automorphisms discovered during the search; not
  // materialized (the closure can be astronomically larger than the
  // generator list, e.g. for complete graphs).
  PermutationGroup group;
  // Exact order, from orbit-stabilizer products along the search tree's
  // first root-to-leaf path.
  BigInt order;
};

// Full automorphism group of a digraph (loops respected) via equitable
// refinement plus backtracking on the first non-singleton cell; discovered
// automorphisms prune sibling branches through orbit stabilization. Exact
// and deterministic. Throws SearchBudgetExceeded when the budget runs out.
AutResult automorphism_group(const Digraph& g, const SearchBudget& budget = {});

bool are_isomorphic(const Digraph& a, const Digraph& b,
                    const SearchBudget& budget = {});

}  // namespace vpfix

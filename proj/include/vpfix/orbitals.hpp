#pragma once

#include <vector>

#include "vpfix/digraph.hpp"
#include "vpfix/perm_group.hpp"

namespace vpfix {

// Orbits of the transitive group g on ordered pairs, returned as arc sets.
// Ordered by their lexicographically smallest arc, so the diagonal orbital
// (the loop graph) always comes first. Throws NotTransitive.
std::vector<Digraph> orbitals(const PermutationGroup& g);

// Number of orbitals (the permutational rank).
int permutational_rank(const PermutationGroup& g);

// An orbital is self-paired when it equals its transpose.
bool is_self_paired(const Digraph& orbital);

}  // namespace vpfix

#pragma once

#include <vector>

#include "vpfix/digraph.hpp"
#include "vpfix/jset.hpp"
#include "vpfix/perm_group.hpp"

namespace vpfix {

// k-subsets of {0, ..., m-1} in colexicographic order.
std::vector<std::vector<int>> colex_ksubsets(int m, int k);

// Distance graph on k-subsets of an m-set: arc when |X n Y| = k - i.
// i = 0 gives the loop graph on C(m,k) vertices.
Digraph johnson_graph(int m, int k, int i);

// Quotient of the middle-layer distance graph on half partitions {X, X^c} of
// a 2m-set. Vertices are the m-subsets containing point 0, in colex order;
// classes are adjacent when min(|X n Y|, m - |X n Y|) = i. Requires
// two_m = 2m and 0 <= i <= m/2.
Digraph squashed_johnson_graph(int two_m, int m, int i);

// Union over tuples (j_1..j_r) in J of the direct products
// factors[j_1] x ... x factors[j_r]. factors[0] must be the loop graph, all
// factors on the same vertex count.
Digraph merged_product_action_graph(int r, const std::vector<Digraph>& factors,
                                    const JSet& j);

// merged_product_action_graph over factors [L_m, K_m]; J must be binary
// (k = 1) and homogeneous.
Digraph generalized_hamming_graph(int r, int m, const JSet& j);

// The standard Hamming graph H(r,m): adjacency = differ in exactly one
// coordinate (J = unit tuples).
Digraph standard_hamming_graph(int r, int m);

// Sym(m) acting on k-subsets in colex order.
PermutationGroup symmetric_group_on_ksubsets(int m, int k);

// Sym(2m) acting on half partitions; representative = m-set containing 0.
PermutationGroup symmetric_group_on_half_partitions(int m);

// One digraph per H-orbit on index tuples X^r (X indexes k_orbitals), each a
// merged product action graph over that orbit; ordered by the lexicographic
// minimum of the orbit. k_orbitals[0] must be the loop graph; H acts on r
// points.
std::vector<Digraph> orbital_digraphs_wreath(
    const std::vector<Digraph>& k_orbitals, const PermutationGroup& h);

// True iff orbitals(g) and orbital_digraphs_wreath(k_orbitals, h) give the
// same partition of the arc space (compared as sets of digraphs). False when
// g is intransitive.
bool orbitals_match(const PermutationGroup& g,
                    const std::vector<Digraph>& k_orbitals,
                    const PermutationGroup& h);

}  // namespace vpfix

#pragma once

#include <optional>
#include <vector>

#include "vpfix/permutation.hpp"

namespace vpfix {

// Cap on the number of distinct elements a BFS closure may materialize.
inline constexpr unsigned long long kDefaultElementCap = 10'000'000ULL;

struct MinimalDegreeResult {
  int mu;                // minimum support size over nonidentity elements
  Permutation witness;   // first element attaining it, in closure order
};

// Finitely generated subgroup of Sym(degree). Orbits are computed from the
// generators at construction; the full element set is materialized lazily by
// deterministic BFS over the Cayley graph (identity first, then products in
// generator order) and cached. Instances are immutable after construction;
// the lazy materialization is not synchronized across threads.
class PermutationGroup {
 public:
  PermutationGroup(int degree, std::vector<Permutation> generators,
                   unsigned long long element_cap = kDefaultElementCap);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  unsigned long long element_cap() const { return cap_; }

  // Orbit partition on points; orbits listed by smallest member, members
  // ascending. Generator-based, no closure needed.
  const std::vector<std::vector<int>>& orbits() const { return orbits_; }
  bool is_transitive() const { return orbits_.size() == 1; }

  // Materializing queries. Throw ClosureExceedsCap when the closure would
  // exceed element_cap().
  unsigned long long order() const;
  bool materialized() const { return elements_.has_value(); }
  // Flat image table, row e holds element e's images; row 0 is the identity.
  const std::vector<unsigned int>& element_table() const;
  Permutation element(unsigned long long index) const;
  std::vector<Permutation> elements() const;
  bool contains(const Permutation& p) const;

 private:
  void materialize() const;

  int degree_;
  std::vector<Permutation> gens_;
  unsigned long long cap_;
  std::vector<std::vector<int>> orbits_;
  mutable std::optional<std::vector<unsigned int>> elements_;
  mutable unsigned long long order_ = 0;
};

// Spec-facing constructor: materializes eagerly so the cap error surfaces at
// generation time.
PermutationGroup generate(int degree, std::vector<Permutation> generators,
                          unsigned long long element_cap = kDefaultElementCap);

bool is_transitive(const PermutationGroup& g);

// True when the action has no nontrivial proper block system. Throws
// NotTransitive for intransitive input. Degree 1 and 2 are primitive.
bool is_primitive(const PermutationGroup& g);

// Transitive and |G| == degree.
bool is_regular(const PermutationGroup& g);

// Minimum support over nonidentity elements, with the first witness in
// closure order. Throws TrivialGroup when |G| == 1.
MinimalDegreeResult minimal_degree(const PermutationGroup& g);

// Finest congruence of the transitive group g that merges points a and b
// (Atkinson's refinement); returns the blocks sorted by smallest member.
std::vector<std::vector<int>> minimal_block_system(const PermutationGroup& g,
                                                   int a, int b);

// Standard groups in their natural actions.
PermutationGroup symmetric_group(int n);
PermutationGroup alternating_group(int n);
PermutationGroup cyclic_group(int n);
PermutationGroup dihedral_group(int n);  // degree n, order 2n, n >= 3
PermutationGroup klein_four_group();     // regular on 4 points
PermutationGroup trivial_group(int n);

}  // namespace vpfix

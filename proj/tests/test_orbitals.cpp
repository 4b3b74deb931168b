#include "vpfix/orbitals.hpp"

#include "doctest.h"
#include "vpfix/errors.hpp"
#include "vpfix/perm_group.hpp"

using namespace vpfix;

TEST_CASE("symmetric group has rank two") {
  auto orbs = orbitals(symmetric_group(4));
  REQUIRE(orbs.size() == 2);
  CHECK(orbs[0].arc(0, 0));
  CHECK(orbs[0].arc_count() == 4);
  CHECK(orbs[1].arc_count() == 12);
  CHECK(permutational_rank(symmetric_group(4)) == 2);
}

TEST_CASE("cyclic group orbitals and pairing") {
  auto orbs = orbitals(cyclic_group(4));
  REQUIRE(orbs.size() == 4);
  // diagonal first, then ordered by smallest arc: (0,1), (0,2), (0,3)
  CHECK(orbs[0].arc(0, 0));
  CHECK(orbs[1].arc(0, 1));
  CHECK(orbs[2].arc(0, 2));
  CHECK(orbs[3].arc(0, 3));
  CHECK(is_self_paired(orbs[0]));
  CHECK_FALSE(is_self_paired(orbs[1]));
  CHECK(is_self_paired(orbs[2]));
  CHECK(transpose(orbs[1]) == orbs[3]);
  for (const auto& o : orbs) CHECK(o.arc_count() == 4);
}

TEST_CASE("dihedral group merges the paired orbitals") {
  auto orbs = orbitals(dihedral_group(4));
  REQUIRE(orbs.size() == 3);
  CHECK(orbs[1].arc(0, 1));
  CHECK(orbs[1].arc(0, 3));
  CHECK(orbs[1].arc_count() == 8);
  CHECK(is_self_paired(orbs[1]));
  CHECK(permutational_rank(dihedral_group(4)) == 3);
}

TEST_CASE("orbitals require transitivity") {
  PermutationGroup g(3, {Permutation::from_cycles(3, {{0, 1}})});
  CHECK_THROWS_AS(orbitals(g), NotTransitive);
}

TEST_CASE("orbital digraphs are invariant under the group") {
  PermutationGroup g = dihedral_group(5);
  for (const auto& o : orbitals(g))
    CHECK(is_vertex_transitive_under(o, g.generators()));
}

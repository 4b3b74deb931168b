#include "vpfix/digraph.hpp"

#include <vector>

#include "doctest.h"
#include "vpfix/errors.hpp"

using namespace vpfix;

namespace {

// Petersen graph: 2-subsets of {0..4}, adjacent when disjoint.
Digraph petersen() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) pairs.push_back({i, j});
  Digraph g(10);
  for (int a = 0; a < 10; ++a)
    for (int b = 0; b < 10; ++b) {
      auto [i, j] = pairs[a];
      auto [k, l] = pairs[b];
      if (i != k && i != l && j != k && j != l) g.set_arc(a, b, true);
    }
  return g;
}

}  // namespace

TEST_CASE("arc bookkeeping") {
  Digraph g(3);
  CHECK(g.arc_count() == 0);
  g.set_arc(0, 1, true);
  g.set_arc(2, 2, true);
  CHECK(g.arc(0, 1));
  CHECK_FALSE(g.arc(1, 0));
  CHECK(g.arc_count() == 2);
  CHECK(g.has_loops());
  CHECK_FALSE(g.is_symmetric());
  CHECK_FALSE(g.is_graph());
  g.set_arc(2, 2, false);
  g.set_arc(1, 0, true);
  CHECK(g.is_graph());
  CHECK(g.arcs() == std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});
  CHECK_THROWS_AS(Digraph(0), DomainError);
}

TEST_CASE("loop and complete graphs") {
  Digraph l = loop_graph(3);
  CHECK(l.arc_count() == 3);
  CHECK(l.has_loops());
  CHECK(l.is_symmetric());
  CHECK_FALSE(l.is_graph());
  Digraph k = complete_graph(4);
  CHECK(k.arc_count() == 12);
  CHECK(out_valency(k) == 3);
  CHECK(k.is_graph());
  CHECK(is_connected(k));
}

TEST_CASE("degrees, transpose, complement") {
  Digraph g(4);
  g.set_arc(0, 1, true);
  g.set_arc(0, 2, true);
  g.set_arc(3, 0, true);
  CHECK(g.out_degree(0) == 2);
  CHECK(g.in_degree(0) == 1);
  Digraph t = transpose(g);
  CHECK(t.arc(1, 0));
  CHECK(t.arc(0, 3));
  CHECK(t.arc_count() == 3);
  Digraph c = complement(g);
  CHECK(c.arc_count() == 12 - 3);
  CHECK_FALSE(c.arc(0, 0));
  CHECK_FALSE(c.arc(0, 1));
  CHECK(c.arc(1, 0));
  CHECK(complement(c) == g);  // involution on loopless digraphs
  CHECK_THROWS_AS(out_valency(g), Irregular);
}

TEST_CASE("direct product multiplies arc sets") {
  Digraph p = direct_product({loop_graph(2), complete_graph(2)});
  CHECK(p.vertex_count() == 4);
  CHECK(p.arc_count() == 4);
  // vertices (a,b) with coordinate 0 most significant
  CHECK(p.arc(0, 1));
  CHECK(p.arc(1, 0));
  CHECK(p.arc(2, 3));
  CHECK_FALSE(p.arc(0, 2));
  CHECK_FALSE(is_connected(p));
}

TEST_CASE("hamming style union of products") {
  Digraph a = direct_product({loop_graph(3), complete_graph(3)});
  Digraph b = direct_product({complete_graph(3), loop_graph(3)});
  Digraph h = graph_union(a, b);
  CHECK(h.vertex_count() == 9);
  CHECK(out_valency(h) == 4);
  CHECK(h.is_graph());
  CHECK(is_connected(h));
}

TEST_CASE("strongly regular parameters") {
  auto p = srg_parameters(petersen());
  REQUIRE(p.has_value());
  CHECK(p->v == 10);
  CHECK(p->d == 3);
  CHECK(p->lambda == 0);
  CHECK(p->mu == 1);
  CHECK_FALSE(srg_parameters(complete_graph(5)).has_value());
  Digraph path(3);
  path.set_arc(0, 1, true);
  path.set_arc(1, 0, true);
  path.set_arc(1, 2, true);
  path.set_arc(2, 1, true);
  CHECK_FALSE(srg_parameters(path).has_value());
  CHECK_THROWS_AS(srg_parameters(loop_graph(2)), NotAGraph);
}

TEST_CASE("vertex transitivity under a generator set") {
  Digraph c4(4);
  for (int i = 0; i < 4; ++i) {
    c4.set_arc(i, (i + 1) % 4, true);
    c4.set_arc((i + 1) % 4, i, true);
  }
  std::vector<Permutation> rot = {Permutation::from_cycles(4, {{0, 1, 2, 3}})};
  CHECK(is_vertex_transitive_under(c4, rot));
  std::vector<Permutation> flip = {Permutation::from_cycles(4, {{1, 3}})};
  CHECK_FALSE(is_vertex_transitive_under(c4, flip));
  Digraph p(4);
  p.set_arc(0, 1, true);
  CHECK_FALSE(is_vertex_transitive_under(p, rot));
}

TEST_CASE("deterministic ordering of digraphs") {
  Digraph a(3), b(3);
  a.set_arc(0, 1, true);
  b.set_arc(0, 2, true);
  CHECK(a < b);
  CHECK_FALSE(b < a);
  CHECK_FALSE(a < a);
}

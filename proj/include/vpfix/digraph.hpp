#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "vpfix/perm_group.hpp"

namespace vpfix {

// Finite digraph on vertices {0, ..., n-1} with loops allowed, stored as a
// bit-packed dense adjacency matrix (row u = out-neighbours of u).
class Digraph {
 public:
  Digraph() : n_(0), words_(0) {}
  explicit Digraph(int n);

  int vertex_count() const { return n_; }
  int words_per_row() const { return words_; }

  bool arc(int u, int v) const {
    return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >>
            (v & 63)) & 1ULL;
  }
  void set_arc(int u, int v, bool present = true) {
    uint64_t& w = bits_[static_cast<size_t>(u) * words_ + (v >> 6)];
    uint64_t bit = 1ULL << (v & 63);
    if (present)
      w |= bit;
    else
      w &= ~bit;
  }

  const uint64_t* row(int u) const {
    return &bits_[static_cast<size_t>(u) * words_];
  }

  long long arc_count() const;
  int out_degree(int u) const;
  int in_degree(int u) const;
  bool has_loops() const;
  bool is_symmetric() const;
  // Loopless and symmetric, i.e. an undirected graph in arc-pair form.
  bool is_graph() const { return !has_loops() && is_symmetric(); }

  // Arcs in ascending (u, v) order.
  std::vector<std::pair<int, int>> arcs() const;

  bool operator==(const Digraph& o) const {
    return n_ == o.n_ && bits_ == o.bits_;
  }
  // Arbitrary but deterministic total order (vertex count, then bit rows).
  bool operator<(const Digraph& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return bits_ < o.bits_;
  }

 private:
  int n_;
  int words_;
  std::vector<uint64_t> bits_;
};

Digraph loop_graph(int m);      // exactly the loops (v, v)
Digraph complete_graph(int m);  // all arcs between distinct vertices

// Direct product: vertex tuples indexed by the shared mixed-radix codec
// (coordinate 0 most significant); arc iff every factor has the coordinate
// arc. Factors may have different vertex counts.
Digraph direct_product(const std::vector<Digraph>& factors);

Digraph graph_union(const Digraph& a, const Digraph& b);  // same vertex set
Digraph complement(const Digraph& g);  // complement on arcs (u,v), u != v;
                                       // the diagonal stays empty
Digraph transpose(const Digraph& g);

// Common out-valency; throws Irregular when out-degrees differ.
int out_valency(const Digraph& g);

// Weak connectivity (arc directions ignored).
bool is_connected(const Digraph& g);

// True when every generator of g preserves arcs and the group is transitive
// on vertices.
bool is_vertex_transitive_under(const Digraph& d,
                                const std::vector<Permutation>& gens);

struct SrgParams {
  long long v, d, lambda, mu;
  bool operator==(const SrgParams&) const = default;
};

// Strong regularity parameters of a loopless symmetric graph; nullopt when
// the graph is not strongly regular (this includes complete and empty graphs,
// for which mu resp. lambda is undefined). Throws NotAGraph on loops or
// asymmetry.
std::optional<SrgParams> srg_parameters(const Digraph& g);

}  // namespace vpfix

#include "vpfix/digraph.hpp"

#include <bit>

#include "vpfix/codec.hpp"
#include "vpfix/errors.hpp"

namespace vpfix {

Digraph::Digraph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 1) throw DomainError("digraph needs at least one vertex");
  bits_.assign(static_cast<size_t>(n_) * words_, 0);
}

long long Digraph::arc_count() const {
  long long c = 0;
  for (uint64_t w : bits_) c += std::popcount(w);
  return c;
}

int Digraph::out_degree(int u) const {
  int c = 0;
  const uint64_t* r = row(u);
  for (int w = 0; w < words_; ++w) c += std::popcount(r[w]);
  return c;
}

int Digraph::in_degree(int u) const {
  int c = 0;
  for (int v = 0; v < n_; ++v) c += arc(v, u) ? 1 : 0;
  return c;
}

bool Digraph::has_loops() const {
  for (int v = 0; v < n_; ++v)
    if (arc(v, v)) return true;
  return false;
}

bool Digraph::is_symmetric() const {
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (arc(u, v) != arc(v, u)) return false;
  return true;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(arc_count());
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v)
      if (arc(u, v)) out.emplace_back(u, v);
  return out;
}

Digraph loop_graph(int m) {
  Digraph g(m);
  for (int v = 0; v < m; ++v) g.set_arc(v, v);
  return g;
}

Digraph complete_graph(int m) {
  Digraph g(m);
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v)
      if (u != v) g.set_arc(u, v);
  return g;
}

Digraph direct_product(const std::vector<Digraph>& factors) {
  if (factors.empty()) throw DomainError("direct product of no factors");
  std::vector<long long> radices;
  for (const auto& f : factors) radices.push_back(f.vertex_count());
  MixedRadixCodec codec(std::move(radices));
  if (codec.size() > 1'000'000)
    throw DomainError("direct product too large");
  const int n = static_cast<int>(codec.size());
  const int r = codec.arity();
  Digraph g(n);
  std::vector<int> du(r), dv(r);
  for (int u = 0; u < n; ++u) {
    codec.decode(u, du);
    for (int v = 0; v < n; ++v) {
      codec.decode(v, dv);
      bool all = true;
      for (int i = 0; i < r && all; ++i) all = factors[i].arc(du[i], dv[i]);
      if (all) g.set_arc(u, v);
    }
  }
  return g;
}

Digraph graph_union(const Digraph& a, const Digraph& b) {
  if (a.vertex_count() != b.vertex_count())
    throw DomainError("union needs a shared vertex set");
  Digraph g = a;
  for (int u = 0; u < b.vertex_count(); ++u)
    for (int v = 0; v < b.vertex_count(); ++v)
      if (b.arc(u, v)) g.set_arc(u, v);
  return g;
}

Digraph complement(const Digraph& g) {
  const int n = g.vertex_count();
  Digraph c(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && !g.arc(u, v)) c.set_arc(u, v);
  return c;
}

Digraph transpose(const Digraph& g) {
  const int n = g.vertex_count();
  Digraph t(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (g.arc(u, v)) t.set_arc(v, u);
  return t;
}

int out_valency(const Digraph& g) {
  const int d = g.out_degree(0);
  for (int v = 1; v < g.vertex_count(); ++v)
    if (g.out_degree(v) != d) throw Irregular("digraph is not out-regular");
  return d;
}

bool is_connected(const Digraph& g) {
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v) {
      if (!seen[v] && (g.arc(u, v) || g.arc(v, u))) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

bool is_vertex_transitive_under(const Digraph& d,
                                const std::vector<Permutation>& gens) {
  for (const auto& gen : gens) {
    if (gen.degree() != d.vertex_count()) return false;
    for (int u = 0; u < d.vertex_count(); ++u)
      for (int v = 0; v < d.vertex_count(); ++v)
        if (d.arc(u, v) != d.arc(gen[u], gen[v])) return false;
  }
  return PermutationGroup(d.vertex_count(), gens).is_transitive();
}

std::optional<SrgParams> srg_parameters(const Digraph& g) {
  if (g.has_loops()) throw NotAGraph("srg parameters need a loopless graph");
  if (!g.is_symmetric()) throw NotAGraph("srg parameters need a symmetric graph");
  const int n = g.vertex_count();
  const int words = g.words_per_row();
  const int d = g.out_degree(0);
  for (int v = 1; v < n; ++v)
    if (g.out_degree(v) != d) return std::nullopt;

  long long lambda = -1, mu = -1;
  for (int u = 0; u < n; ++u) {
    const uint64_t* ru = g.row(u);
    for (int v = u + 1; v < n; ++v) {
      const uint64_t* rv = g.row(v);
      int common = 0;
      for (int w = 0; w < words; ++w) common += std::popcount(ru[w] & rv[w]);
      long long& slot = g.arc(u, v) ? lambda : mu;
      if (slot == -1)
        slot = common;
      else if (slot != common)
        return std::nullopt;
    }
  }
  // Complete or empty graphs leave mu resp. lambda undefined.
  if (lambda == -1 || mu == -1) return std::nullopt;
  return SrgParams{n, d, lambda, mu};
}

}  // namespace vpfix

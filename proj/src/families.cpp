#include "vpfix/families.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>

#include "vpfix/codec.hpp"
#include "vpfix/errors.hpp"
#include "vpfix/orbitals.hpp"

namespace vpfix {

namespace {

uint64_t subset_mask(const std::vector<int>& s) {
  uint64_t m = 0;
  for (int x : s) m |= 1ULL << x;
  return m;
}

long long binomial(int m, int k) {
  if (k < 0 || k > m) return 0;
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * (m - k + i) / i;
  if (r > static_cast<unsigned __int128>(std::numeric_limits<long long>::max()))
    return std::numeric_limits<long long>::max();
  return static_cast<long long>(r);
}

}  // namespace

std::vector<std::vector<int>> colex_ksubsets(int m, int k) {
  if (k < 0 || k > m) throw DomainError("subset size out of range");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // colex order = sort by the reversed sequence; build recursively by
  // choosing the largest element last
  auto rec = [&](auto&& self, int largest, int left) -> void {
    if (left == 0) {
      out.push_back(cur);
      std::reverse(out.back().begin(), out.back().end());
      return;
    }
    for (int x = left - 1; x <= largest; ++x) {
      cur.push_back(x);
      self(self, x - 1, left - 1);
      cur.pop_back();
    }
  };
  rec(rec, m - 1, k);
  return out;
}

Digraph johnson_graph(int m, int k, int i) {
  if (m < 1 || k < 1 || k > m || i < 0 || i > k)
    throw DomainError("johnson parameters out of range");
  if (m > 62) throw DomainError("johnson ground set too large");
  auto subsets = colex_ksubsets(m, k);
  const int n = static_cast<int>(subsets.size());
  std::vector<uint64_t> masks(n);
  for (int v = 0; v < n; ++v) masks[v] = subset_mask(subsets[v]);
  Digraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (std::popcount(masks[u] & masks[v]) == k - i) g.set_arc(u, v, true);
  return g;
}

Digraph squashed_johnson_graph(int two_m, int m, int i) {
  if (m < 2 || two_m != 2 * m || i < 0 || 2 * i > m)
    throw DomainError("squashed johnson parameters out of range");
  if (two_m > 62) throw DomainError("squashed johnson ground set too large");
  // representatives: m-subsets of {0..2m-1} containing 0, in colex order
  std::vector<uint64_t> masks;
  for (const auto& s : colex_ksubsets(two_m - 1, m - 1)) {
    uint64_t mask = 1;
    for (int x : s) mask |= 1ULL << (x + 1);
    masks.push_back(mask);
  }
  const int n = static_cast<int>(masks.size());
  Digraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      int t = std::popcount(masks[u] & masks[v]);
      if (std::min(t, m - t) == i) g.set_arc(u, v, true);
    }
  return g;
}

Digraph merged_product_action_graph(int r, const std::vector<Digraph>& factors,
                                    const JSet& j) {
  if (factors.empty()) throw DomainError("merged product needs factors");
  const int m = factors[0].vertex_count();
  for (const auto& f : factors)
    if (f.vertex_count() != m) throw DomainError("factor size mismatch");
  if (!(factors[0] == loop_graph(m)))
    throw DomainError("factor 0 must be the loop graph");
  if (j.r() != r) throw DomainError("jset arity mismatch");
  if (j.k() != static_cast<int>(factors.size()) - 1)
    throw DomainError("jset index bound does not match factor count");

  Digraph acc(1);
  bool first = true;
  for (const auto& t : j.tuples()) {
    std::vector<Digraph> chosen;
    chosen.reserve(r);
    for (int c = 0; c < r; ++c) chosen.push_back(factors[t[c]]);
    Digraph part = direct_product(chosen);
    if (first) {
      acc = std::move(part);
      first = false;
    } else {
      acc = graph_union(acc, part);
    }
  }
  return acc;
}

Digraph generalized_hamming_graph(int r, int m, const JSet& j) {
  if (j.k() != 1) throw DomainError("hamming jset must be binary");
  if (j.r() != r) throw DomainError("jset arity mismatch");
  if (!is_homogeneous(j))
    throw NotHomogeneous("hamming graph needs a homogeneous jset");
  return merged_product_action_graph(r, {loop_graph(m), complete_graph(m)}, j);
}

Digraph standard_hamming_graph(int r, int m) {
  std::vector<std::vector<int>> units;
  for (int i = 0; i < r; ++i) {
    std::vector<int> t(r, 0);
    t[i] = 1;
    units.push_back(std::move(t));
  }
  return generalized_hamming_graph(r, m, JSet(r, 1, std::move(units)));
}

namespace {

PermutationGroup induced_on_sets(int ground, const PermutationGroup& base,
                                 const std::vector<uint64_t>& rep_masks,
                                 bool take_complement_if_missing,
                                 uint64_t universe) {
  std::map<uint64_t, int> index;
  for (size_t v = 0; v < rep_masks.size(); ++v)
    index[rep_masks[v]] = static_cast<int>(v);
  std::vector<Permutation> gens;
  for (const auto& g : base.generators()) {
    std::vector<int> img(rep_masks.size());
    for (size_t v = 0; v < rep_masks.size(); ++v) {
      uint64_t moved = 0;
      for (int x = 0; x < ground; ++x)
        if (rep_masks[v] >> x & 1) moved |= 1ULL << g[x];
      auto it = index.find(moved);
      if (it == index.end() && take_complement_if_missing)
        it = index.find(universe & ~moved);
      if (it == index.end()) throw DomainError("induced action left the set");
      img[v] = it->second;
    }
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  return PermutationGroup(static_cast<int>(rep_masks.size()), gens);
}

}  // namespace

PermutationGroup symmetric_group_on_ksubsets(int m, int k) {
  if (m < 2 || k < 1 || k > m || m > 62)
    throw DomainError("subset action parameters out of range");
  if (binomial(m, k) > 1'000'000)
    throw DomainError("subset action degree too large");
  std::vector<uint64_t> masks;
  for (const auto& s : colex_ksubsets(m, k)) masks.push_back(subset_mask(s));
  return induced_on_sets(m, symmetric_group(m), masks, false, 0);
}

PermutationGroup symmetric_group_on_half_partitions(int m) {
  if (m < 2 || 2 * m > 62)
    throw DomainError("half partition parameters out of range");
  if (binomial(2 * m, m) / 2 > 1'000'000)
    throw DomainError("half partition degree too large");
  std::vector<uint64_t> masks;
  for (const auto& s : colex_ksubsets(2 * m - 1, m - 1)) {
    uint64_t mask = 1;
    for (int x : s) mask |= 1ULL << (x + 1);
    masks.push_back(mask);
  }
  uint64_t universe = (1ULL << (2 * m)) - 1;
  return induced_on_sets(2 * m, symmetric_group(2 * m), masks, true, universe);
}

std::vector<Digraph> orbital_digraphs_wreath(
    const std::vector<Digraph>& k_orbitals, const PermutationGroup& h) {
  if (k_orbitals.empty()) throw DomainError("need at least one orbital");
  const int m = k_orbitals[0].vertex_count();
  if (!(k_orbitals[0] == loop_graph(m)))
    throw DomainError("orbital 0 must be the diagonal (loop graph)");
  const int r = h.degree();
  const int x_size = static_cast<int>(k_orbitals.size());
  MixedRadixCodec codec = MixedRadixCodec::uniform(r, x_size);
  const long long total = codec.size();

  std::vector<char> seen(total, 0);
  std::vector<Digraph> out;
  for (long long start = 0; start < total; ++start) {
    if (seen[start]) continue;
    // BFS orbit of the index tuple under h
    std::vector<long long> orbit = {start};
    seen[start] = 1;
    for (size_t head = 0; head < orbit.size(); ++head)
      for (const auto& gen : h.generators()) {
        long long next =
            codec.encode(apply_to_tuple(gen, codec.decode(orbit[head])));
        if (!seen[next]) {
          seen[next] = 1;
          orbit.push_back(next);
        }
      }
    std::vector<std::vector<int>> tuples;
    for (long long code : orbit) tuples.push_back(codec.decode(code));
    out.push_back(merged_product_action_graph(
        r, k_orbitals, JSet(r, x_size - 1, std::move(tuples))));
  }
  return out;
}

bool orbitals_match(const PermutationGroup& g,
                    const std::vector<Digraph>& k_orbitals,
                    const PermutationGroup& h) {
  if (k_orbitals.empty()) throw DomainError("need at least one orbital");
  const int m = k_orbitals[0].vertex_count();
  long long expected = 1;
  for (int i = 0; i < h.degree(); ++i) expected *= m;
  if (g.degree() != expected)
    throw DomainError("group degree does not match the product");
  std::vector<Digraph> lhs;
  try {
    lhs = orbitals(g);
  } catch (const NotTransitive&) {
    return false;
  }
  std::vector<Digraph> rhs = orbital_digraphs_wreath(k_orbitals, h);
  if (lhs.size() != rhs.size()) return false;
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  return lhs == rhs;
}

}  // namespace vpfix

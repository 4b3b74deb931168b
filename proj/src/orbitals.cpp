#include "vpfix/orbitals.hpp"

#include "vpfix/errors.hpp"

namespace vpfix {

std::vector<Digraph> orbitals(const PermutationGroup& g) {
  if (!g.is_transitive())
    throw NotTransitive("orbitals require a transitive group");
  const int n = g.degree();
  std::vector<int> orbit_of(static_cast<size_t>(n) * n, -1);
  std::vector<Digraph> out;
  std::vector<long long> stack;

  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      long long start = static_cast<long long>(u) * n + v;
      if (orbit_of[start] != -1) continue;
      const int id = static_cast<int>(out.size());
      out.emplace_back(n);
      Digraph& orb = out.back();
      orbit_of[start] = id;
      orb.set_arc(u, v);
      stack.push_back(start);
      while (!stack.empty()) {
        long long p = stack.back();
        stack.pop_back();
        int a = static_cast<int>(p / n), b = static_cast<int>(p % n);
        for (const auto& gen : g.generators()) {
          long long q = static_cast<long long>(gen[a]) * n + gen[b];
          if (orbit_of[q] == -1) {
            orbit_of[q] = id;
            orb.set_arc(gen[a], gen[b]);
            stack.push_back(q);
          }
        }
      }
    }
  }
  return out;
}

int permutational_rank(const PermutationGroup& g) {
  return static_cast<int>(orbitals(g).size());
}

bool is_self_paired(const Digraph& orbital) {
  return orbital == transpose(orbital);
}

}  // namespace vpfix

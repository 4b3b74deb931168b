#include "vpfix/digraph_aut.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "vpfix/errors.hpp"

namespace vpfix {

namespace {

using Clock = std::chrono::steady_clock;

// Equitable refinement of a coloring. Colors are dense ranks 0..k-1 ordered
// canonically: vertices are re-ranked each round by (old color, per-cell
// out-counts and in-counts), so the color order depends only on the
// isomorphism type of the colored digraph, never on vertex labels.
class Refiner {
 public:
  Refiner(const Digraph& g, const Digraph& gt) : g_(g), gt_(gt), n_(g.vertex_count()) {}

  // Refines in place until stable. When `trace` is non-null, appends an
  // isomorphism-invariant summary of each round (used to prune isomorphism
  // search branches early).
  void refine(std::vector<int>& color_of, std::vector<int>* trace = nullptr) const {
    int k = normalize(color_of);
    const int words = g_.words_per_row();
    std::vector<uint64_t> mask;
    std::vector<std::vector<int>> sig(n_);
    std::vector<int> idx(n_);
    while (true) {
      mask.assign(static_cast<size_t>(k) * words, 0);
      for (int v = 0; v < n_; ++v)
        mask[static_cast<size_t>(color_of[v]) * words + (v >> 6)] |= 1ULL << (v & 63);
      for (int v = 0; v < n_; ++v) {
        auto& s = sig[v];
        s.clear();
        s.reserve(1 + 2 * k);
        s.push_back(color_of[v]);
        const uint64_t* out_row = g_.row(v);
        const uint64_t* in_row = gt_.row(v);
        for (int c = 0; c < k; ++c) {
          const uint64_t* m = &mask[static_cast<size_t>(c) * words];
          int outc = 0, inc = 0;
          for (int w = 0; w < words; ++w) {
            outc += std::popcount(out_row[w] & m[w]);
            inc += std::popcount(in_row[w] & m[w]);
          }
          s.push_back(outc);
          s.push_back(inc);
        }
      }
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (sig[a] != sig[b]) return sig[a] < sig[b];
        return a < b;
      });
      int nk = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++nk;
        color_of[idx[i]] = nk;
      }
      ++nk;
      if (trace) {
        for (int i = 0; i < n_; ++i)
          if (i == 0 || sig[idx[i]] != sig[idx[i - 1]]) {
            trace->insert(trace->end(), sig[idx[i]].begin(), sig[idx[i]].end());
            trace->push_back(-1);
          }
      }
      if (nk == k) return;
      k = nk;
    }
  }

  // Splits {v} off its cell, ordered directly before the remainder.
  static void individualize(std::vector<int>& color_of, int v) {
    const int c = color_of[v];
    for (int& col : color_of)
      if (col > c) ++col;
    for (size_t w = 0; w < color_of.size(); ++w)
      if (static_cast<int>(w) != v && color_of[w] == c) ++color_of[w];
  }

 private:
  static int normalize(std::vector<int>& color_of) {
    int maxc = 0;
    for (int c : color_of) maxc = std::max(maxc, c);
    std::vector<int> used(maxc + 1, -1);
    for (int c : color_of) used[c] = 0;
    int k = 0;
    for (int c = 0; c <= maxc; ++c)
      if (used[c] == 0) used[c] = k++;
    for (int& c : color_of) c = used[c];
    return k;
  }

  const Digraph& g_;
  const Digraph& gt_;
  int n_;
};

std::vector<int> initial_coloring(const Digraph& g) {
  std::vector<int> color(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) color[v] = g.arc(v, v) ? 1 : 0;
  return color;
}

bool preserves_arcs(const Digraph& g, const std::vector<int>& img) {
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (g.arc(u, v) != g.arc(img[u], img[v])) return false;
  return true;
}

struct UnionFind {
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> parent;
};

class AutSearcher {
 public:
  AutSearcher(const Digraph& g, const SearchBudget& budget)
      : g_(g), gt_(transpose(g)), n_(g.vertex_count()),
        refiner_(g_, gt_), budget_(budget), start_(Clock::now()) {}

  AutResult run() {
    std::vector<int> color = initial_coloring(g_);
    refiner_.refine(color);
    std::vector<int> prefix;
    explore(color, prefix);

    // |Aut| as the product of orbit sizes along the first root-to-leaf path;
    // exact because the pointwise stabilizer of the full base is trivial
    // (the leaf coloring is discrete) and the found generators realize the
    // stabilizer-chain orbits.
    BigInt order = 1;
    for (size_t i = 0; i < first_base_.size(); ++i)
      order *= orbit_size(first_base_, i);
    return AutResult{PermutationGroup(n_, found_), order};
  }

 private:
  void tick() {
    if ((++nodes_ & 0xff) == 0 &&
        Clock::now() - start_ > budget_.time_limit)
      throw SearchBudgetExceeded("automorphism search time budget exceeded");
    if (nodes_ > budget_.max_nodes)
      throw SearchBudgetExceeded("automorphism search node budget exceeded");
  }

  // Orbit size of base[level] under the found generators that fix
  // base[0..level-1] pointwise. By the Schreier-style completeness of the
  // search these orbits match the true stabilizer chain.
  long long orbit_size(const std::vector<int>& base, size_t level) {
    UnionFind uf(n_);
    for (const auto& p : found_) {
      bool fixes = true;
      for (size_t j = 0; j < level && fixes; ++j) fixes = p[base[j]] == base[j];
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) uf.unite(x, p[x]);
    }
    int root = uf.find(base[level]);
    long long size = 0;
    for (int x = 0; x < n_; ++x)
      if (uf.find(x) == root) ++size;
    return size;
  }

  // Returns the depth to resume sibling iteration at. A leaf that produces a
  // valid automorphism returns the depth where its path diverged from the
  // first path: everything below that point is already covered, so ancestors
  // deeper than the divergence abandon their remaining siblings.
  size_t explore(const std::vector<int>& color_of, std::vector<int>& prefix) {
    tick();
    const size_t depth = prefix.size();
    int target = -1;
    {
      // first color class with at least two members
      std::vector<int> count(n_, 0);
      for (int v = 0; v < n_; ++v) ++count[color_of[v]];
      for (int v = 0; v < n_; ++v)
        if (count[color_of[v]] >= 2 &&
            (target == -1 || color_of[v] < color_of[target]))
          target = v;
      if (target == -1) return handle_leaf(color_of, prefix);
      target = color_of[target];
    }

    std::vector<int> members;
    for (int v = 0; v < n_; ++v)
      if (color_of[v] == target) members.push_back(v);

    std::vector<int> explored;
    for (int v : members) {
      if (covered_by_found(prefix, explored, v)) continue;
      explored.push_back(v);
      std::vector<int> child = color_of;
      Refiner::individualize(child, v);
      refiner_.refine(child);
      prefix.push_back(v);
      size_t resume = explore(child, prefix);
      prefix.pop_back();
      if (resume < depth) return resume;
    }
    return depth;
  }

  bool covered_by_found(const std::vector<int>& prefix,
                        const std::vector<int>& explored, int v) {
    if (explored.empty()) return false;
    UnionFind uf(n_);
    for (const auto& p : found_) {
      bool fixes = true;
      for (int b : prefix)
        if (p[b] != b) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) uf.unite(x, p[x]);
    }
    int root = uf.find(v);
    for (int e : explored)
      if (uf.find(e) == root) return true;
    return false;
  }

  size_t handle_leaf(const std::vector<int>& color_of,
                     const std::vector<int>& prefix) {
    if (!have_first_) {
      have_first_ = true;
      first_color_ = color_of;
      first_base_ = prefix;
      return prefix.size();
    }
    std::vector<int> vertex_at(n_);
    for (int v = 0; v < n_; ++v) vertex_at[color_of[v]] = v;
    // candidate maps each vertex to the one occupying its first-leaf position
    std::vector<int> img(n_);
    for (int v = 0; v < n_; ++v) img[v] = vertex_at[first_color_[v]];
    bool identity = true;
    for (int v = 0; v < n_ && identity; ++v) identity = img[v] == v;
    if (identity || !preserves_arcs(g_, img)) return prefix.size();
    Permutation p = Permutation::from_images(std::move(img));
    bool fresh = true;
    for (const auto& q : found_)
      if (q == p) fresh = false;
    if (fresh) found_.push_back(std::move(p));
    size_t diverge = 0;
    while (diverge < prefix.size() && diverge < first_base_.size() &&
           prefix[diverge] == first_base_[diverge])
      ++diverge;
    return diverge;
  }

  const Digraph& g_;
  Digraph gt_;
  int n_;
  Refiner refiner_;
  SearchBudget budget_;
  Clock::time_point start_;
  unsigned long long nodes_ = 0;

  std::vector<Permutation> found_;
  bool have_first_ = false;
  std::vector<int> first_color_;
  std::vector<int> first_base_;
};

class IsoSearcher {
 public:
  IsoSearcher(const Digraph& a, const Digraph& b, const SearchBudget& budget)
      : a_(a), b_(b), at_(transpose(a)), bt_(transpose(b)),
        ra_(a_, at_), rb_(b_, bt_), n_(a.vertex_count()), budget_(budget),
        start_(Clock::now()) {}

  bool run() {
    std::vector<int> ca = initial_coloring(a_), cb = initial_coloring(b_);
    std::vector<int> ta, tb;
    ra_.refine(ca, &ta);
    rb_.refine(cb, &tb);
    if (ta != tb) return false;
    return descend(ca, cb);
  }

 private:
  void tick() {
    if ((++nodes_ & 0xff) == 0 &&
        Clock::now() - start_ > budget_.time_limit)
      throw SearchBudgetExceeded("isomorphism search time budget exceeded");
    if (nodes_ > budget_.max_nodes)
      throw SearchBudgetExceeded("isomorphism search node budget exceeded");
  }

  bool descend(const std::vector<int>& ca, const std::vector<int>& cb) {
    tick();
    int target = -1;
    std::vector<int> count(n_, 0);
    for (int v = 0; v < n_; ++v) ++count[ca[v]];
    for (int v = 0; v < n_; ++v)
      if (count[ca[v]] >= 2 && (target == -1 || ca[v] < target)) target = ca[v];

    if (target == -1) {
      // both discrete with matching traces: read the map off the positions
      std::vector<int> vertex_at(n_);
      for (int v = 0; v < n_; ++v) vertex_at[cb[v]] = v;
      std::vector<int> img(n_);
      for (int v = 0; v < n_; ++v) img[v] = vertex_at[ca[v]];
      for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
          if (a_.arc(u, v) != b_.arc(img[u], img[v])) return false;
      return true;
    }

    int va = -1;
    for (int v = 0; v < n_; ++v)
      if (ca[v] == target && (va == -1 || v < va)) va = v;
    std::vector<int> ca2 = ca;
    Refiner::individualize(ca2, va);
    std::vector<int> ta;
    ra_.refine(ca2, &ta);

    for (int vb = 0; vb < n_; ++vb) {
      if (cb[vb] != target) continue;
      std::vector<int> cb2 = cb;
      Refiner::individualize(cb2, vb);
      std::vector<int> tb;
      rb_.refine(cb2, &tb);
      if (ta == tb && descend(ca2, cb2)) return true;
    }
    return false;
  }

  const Digraph& a_;
  const Digraph& b_;
  Digraph at_, bt_;
  Refiner ra_, rb_;
  int n_;
  SearchBudget budget_;
  Clock::time_point start_;
  unsigned long long nodes_ = 0;
};

}  // namespace

AutResult automorphism_group(const Digraph& g, const SearchBudget& budget) {
  return AutSearcher(g, budget).run();
}

bool are_isomorphic(const Digraph& a, const Digraph& b,
                    const SearchBudget& budget) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.arc_count() != b.arc_count()) return false;
  return IsoSearcher(a, b, budget).run();
}

}  // namespace vpfix

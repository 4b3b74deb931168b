#include "vpfix/perm_group.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

#include "vpfix/errors.hpp"

namespace vpfix {

namespace {

// Open-addressing hash set over rows of a flat image table. Rows are width-n
// blocks of the backing buffer; the set stores row ids.
class RowSet {
 public:
  RowSet(const std::vector<unsigned int>& buf, int width)
      : buf_(buf), width_(width), mask_(kInitial - 1), slots_(kInitial, kEmpty) {}

  // Returns the id of the row equal to buf[row*width..), inserting it as a
  // new member when absent. `row` must be the last row of the buffer.
  unsigned long long insert(unsigned long long row, bool& fresh) {
    if (count_ * 2 >= slots_.size()) grow();
    const unsigned int* p = &buf_[row * width_];
    size_t h = hash(p) & mask_;
    while (slots_[h] != kEmpty) {
      const unsigned int* q = &buf_[slots_[h] * width_];
      if (std::memcmp(p, q, width_ * sizeof(unsigned int)) == 0) {
        fresh = false;
        return slots_[h];
      }
      h = (h + 1) & mask_;
    }
    slots_[h] = row;
    ++count_;
    fresh = true;
    return row;
  }

 private:
  static constexpr size_t kInitial = 1024;
  static constexpr unsigned long long kEmpty = ~0ULL;

  size_t hash(const unsigned int* p) const {
    unsigned long long h = 1469598103934665603ULL;
    for (int i = 0; i < width_; ++i) {
      h ^= p[i];
      h *= 1099511628211ULL;
    }
    return static_cast<size_t>(h);
  }

  void grow() {
    std::vector<unsigned long long> old = std::move(slots_);
    slots_.assign(old.size() * 2, kEmpty);
    mask_ = slots_.size() - 1;
    for (unsigned long long r : old) {
      if (r == kEmpty) continue;
      size_t h = hash(&buf_[r * width_]) & mask_;
      while (slots_[h] != kEmpty) h = (h + 1) & mask_;
      slots_[h] = r;
    }
  }

  const std::vector<unsigned int>& buf_;
  int width_;
  size_t mask_;
  std::vector<unsigned long long> slots_;
  unsigned long long count_ = 0;
};

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
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);  // keep the smaller label as root
    parent[b] = a;
    return true;
  }
  std::vector<int> parent;
};

}  // namespace

PermutationGroup::PermutationGroup(int degree,
                                   std::vector<Permutation> generators,
                                   unsigned long long element_cap)
    : degree_(degree), gens_(std::move(generators)), cap_(element_cap) {
  if (degree_ < 1) throw DomainError("group degree must be >= 1");
  if (cap_ < 1) throw DomainError("element cap must be >= 1");
  for (const auto& g : gens_)
    if (g.degree() != degree_)
      throw DomainError("generator degree does not match group degree");

  UnionFind uf(degree_);
  for (const auto& g : gens_)
    for (int x = 0; x < degree_; ++x) uf.unite(x, g[x]);
  std::vector<std::vector<int>> by_root(degree_);
  for (int x = 0; x < degree_; ++x) by_root[uf.find(x)].push_back(x);
  for (auto& o : by_root)
    if (!o.empty()) orbits_.push_back(std::move(o));
}

void PermutationGroup::materialize() const {
  if (elements_) return;
  const int n = degree_;
  std::vector<unsigned int> buf;
  buf.reserve(static_cast<size_t>(n) * std::min<unsigned long long>(cap_, 4096));
  buf.resize(n);
  for (int i = 0; i < n; ++i) buf[i] = i;  // identity

  RowSet seen(buf, n);
  bool fresh = false;
  seen.insert(0, fresh);
  unsigned long long count = 1;

  for (unsigned long long head = 0; head < count; ++head) {
    for (const auto& g : gens_) {
      buf.resize((count + 1) * static_cast<size_t>(n));
      const unsigned int* e = &buf[head * static_cast<size_t>(n)];
      unsigned int* out = &buf[count * static_cast<size_t>(n)];
      for (int x = 0; x < n; ++x) out[x] = g[static_cast<int>(e[x])];
      unsigned long long id = seen.insert(count, fresh);
      if (fresh) {
        if (++count > cap_)
          throw ClosureExceedsCap("group closure exceeds element cap");
      } else {
        (void)id;
        buf.resize(count * static_cast<size_t>(n));
      }
    }
  }
  buf.resize(count * static_cast<size_t>(n));
  elements_ = std::move(buf);
  order_ = count;
}

unsigned long long PermutationGroup::order() const {
  materialize();
  return order_;
}

const std::vector<unsigned int>& PermutationGroup::element_table() const {
  materialize();
  return *elements_;
}

Permutation PermutationGroup::element(unsigned long long index) const {
  materialize();
  std::vector<int> img(degree_);
  const unsigned int* row = &(*elements_)[index * static_cast<size_t>(degree_)];
  for (int i = 0; i < degree_; ++i) img[i] = static_cast<int>(row[i]);
  return Permutation::from_images(std::move(img));
}

std::vector<Permutation> PermutationGroup::elements() const {
  materialize();
  std::vector<Permutation> out;
  out.reserve(order_);
  for (unsigned long long e = 0; e < order_; ++e) out.push_back(element(e));
  return out;
}

bool PermutationGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  materialize();
  const auto& buf = *elements_;
  for (unsigned long long e = 0; e < order_; ++e) {
    const unsigned int* row = &buf[e * static_cast<size_t>(degree_)];
    bool eq = true;
    for (int i = 0; i < degree_ && eq; ++i) eq = row[i] == static_cast<unsigned int>(p[i]);
    if (eq) return true;
  }
  return false;
}

PermutationGroup generate(int degree, std::vector<Permutation> generators,
                          unsigned long long element_cap) {
  PermutationGroup g(degree, std::move(generators), element_cap);
  g.order();  // force closure so cap violations surface here
  return g;
}

bool is_transitive(const PermutationGroup& g) { return g.is_transitive(); }

std::vector<std::vector<int>> minimal_block_system(const PermutationGroup& g,
                                                   int a, int b) {
  const int n = g.degree();
  UnionFind uf(n);
  std::vector<std::pair<int, int>> queue;
  uf.unite(a, b);
  queue.emplace_back(a, b);
  while (!queue.empty()) {
    auto [u, v] = queue.back();
    queue.pop_back();
    for (const auto& gen : g.generators()) {
      int x = uf.find(gen[u]), y = uf.find(gen[v]);
      if (x != y) {
        uf.unite(x, y);
        queue.emplace_back(x, y);
      }
    }
  }
  std::vector<std::vector<int>> by_root(n);
  for (int x = 0; x < n; ++x) by_root[uf.find(x)].push_back(x);
  std::vector<std::vector<int>> blocks;
  for (auto& blk : by_root)
    if (!blk.empty()) blocks.push_back(std::move(blk));
  return blocks;
}

bool is_primitive(const PermutationGroup& g) {
  if (!g.is_transitive())
    throw NotTransitive("is_primitive requires a transitive group");
  const int n = g.degree();
  if (n <= 2) return true;
  for (int beta = 1; beta < n; ++beta) {
    auto blocks = minimal_block_system(g, 0, beta);
    if (blocks.size() != 1) return false;  // nontrivial proper block system
  }
  return true;
}

bool is_regular(const PermutationGroup& g) {
  return g.is_transitive() &&
         g.order() == static_cast<unsigned long long>(g.degree());
}

MinimalDegreeResult minimal_degree(const PermutationGroup& g) {
  const auto& buf = g.element_table();
  const int n = g.degree();
  const unsigned long long count = g.order();
  if (count == 1) throw TrivialGroup("minimal degree of the trivial group");
  int best = n + 1;
  unsigned long long best_row = 0;
  for (unsigned long long e = 1; e < count; ++e) {
    const unsigned int* row = &buf[e * static_cast<size_t>(n)];
    int moved = 0;
    for (int x = 0; x < n; ++x)
      if (row[x] != static_cast<unsigned int>(x)) ++moved;
    if (moved < best) {
      best = moved;
      best_row = e;
    }
  }
  return MinimalDegreeResult{best, g.element(best_row)};
}

PermutationGroup symmetric_group(int n) {
  if (n < 1) throw DomainError("symmetric group degree must be >= 1");
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
  if (n >= 3) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    gens.push_back(Permutation::from_cycles(n, {all}));
  }
  return PermutationGroup(n, std::move(gens));
}

PermutationGroup alternating_group(int n) {
  if (n < 1) throw DomainError("alternating group degree must be >= 1");
  std::vector<Permutation> gens;
  if (n >= 3) {
    gens.push_back(Permutation::from_cycles(n, {{0, 1, 2}}));
    if (n >= 4) {
      std::vector<int> cyc;
      if (n % 2 == 1) {  // (0 1 ... n-1) is even
        for (int i = 0; i < n; ++i) cyc.push_back(i);
      } else {  // (1 2 ... n-1) is even
        for (int i = 1; i < n; ++i) cyc.push_back(i);
      }
      gens.push_back(Permutation::from_cycles(n, {cyc}));
    }
  }
  return PermutationGroup(n, std::move(gens));
}

PermutationGroup cyclic_group(int n) {
  if (n < 1) throw DomainError("cyclic group degree must be >= 1");
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    gens.push_back(Permutation::from_cycles(n, {all}));
  }
  return PermutationGroup(n, std::move(gens));
}

PermutationGroup dihedral_group(int n) {
  if (n < 3) throw DomainError("dihedral group needs degree >= 3");
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> refl(n);
  for (int i = 0; i < n; ++i) refl[i] = (n - i) % n;
  return PermutationGroup(
      n, {Permutation::from_cycles(n, {all}), Permutation::from_images(refl)});
}

PermutationGroup klein_four_group() {
  return PermutationGroup(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                              Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
}

PermutationGroup trivial_group(int n) { return PermutationGroup(n, {}); }

}  // namespace vpfix

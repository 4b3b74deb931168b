#include "vpfix/jset.hpp"

#include <algorithm>
#include <numeric>

#include "vpfix/codec.hpp"
#include "vpfix/errors.hpp"

namespace vpfix {

JSet::JSet(int r, int k, std::vector<std::vector<int>> tuples)
    : r_(r), k_(k), tuples_(std::move(tuples)) {
  if (r_ < 1) throw DomainError("jset arity must be >= 1");
  if (k_ < 0) throw DomainError("jset alphabet bound must be >= 0");
  if (tuples_.empty()) throw DomainError("jset must be nonempty");
  for (const auto& t : tuples_) {
    if (static_cast<int>(t.size()) != r_)
      throw DomainError("jset tuple arity mismatch");
    for (int e : t)
      if (e < 0 || e > k_) throw DomainError("jset tuple entry out of range");
  }
  std::sort(tuples_.begin(), tuples_.end());
  tuples_.erase(std::unique(tuples_.begin(), tuples_.end()), tuples_.end());
}

bool JSet::contains(const std::vector<int>& t) const {
  return std::binary_search(tuples_.begin(), tuples_.end(), t);
}

std::vector<int> apply_to_tuple(const Permutation& h,
                                const std::vector<int>& t) {
  std::vector<int> out(t.size());
  for (size_t i = 0; i < t.size(); ++i) out[h[static_cast<int>(i)]] = t[i];
  return out;
}

namespace {

std::vector<Permutation> all_permutations(int r) {
  std::vector<int> img(r);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

bool stabilizes(const Permutation& h, const JSet& j) {
  for (const auto& t : j.tuples())
    if (!j.contains(apply_to_tuple(h, t))) return false;
  return true;
}

// Tuples of the core (X\{0})^a x X^b x {0}^(r-a-b).
std::vector<std::vector<int>> core_tuples(int r, int k, int a, int b) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(r, 0);
  for (int i = 0; i < a; ++i) t[i] = 1;
  // odometer over the first a+b coordinates with per-position ranges
  while (true) {
    out.push_back(t);
    int i = a + b - 1;
    for (; i >= 0; --i) {
      int lo = i < a ? 1 : 0;
      if (t[i] < k) {
        ++t[i];
        for (int j2 = i + 1; j2 < a + b; ++j2) t[j2] = j2 < a ? 1 : 0;
        break;
      }
      t[i] = lo;
    }
    if (i < 0) break;
  }
  return out;
}

}  // namespace

PermutationGroup jset_stabilizer(const JSet& j) {
  if (j.r() > 8) throw DomainError("jset arity too large for factorial scan");
  std::vector<Permutation> stab;
  for (const auto& h : all_permutations(j.r()))
    if (stabilizes(h, j)) stab.push_back(h);
  return PermutationGroup(j.r(), stab);
}

bool is_homogeneous(const JSet& j) {
  return jset_stabilizer(j).is_transitive();
}

bool is_hamming(const JSet& j) {
  PermutationGroup stab = jset_stabilizer(j);
  if (!stab.is_transitive())
    throw NotHomogeneous("hamming test requires a homogeneous jset");
  const int r = j.r();
  std::vector<Permutation> elems = stab.elements();
  for (int a = 0; a <= r; ++a)
    for (int b = 0; a + b <= r; ++b) {
      if (a > 0 && j.k() < 1) continue;
      std::vector<std::vector<int>> expanded;
      for (const auto& t : core_tuples(r, j.k(), a, b))
        for (const auto& h : elems) expanded.push_back(apply_to_tuple(h, t));
      std::sort(expanded.begin(), expanded.end());
      expanded.erase(std::unique(expanded.begin(), expanded.end()),
                     expanded.end());
      if (expanded == j.tuples()) return true;
    }
  return false;
}

JSet to_binary_jset(const JSet& j) {
  std::vector<std::vector<int>> out;
  for (auto t : j.tuples()) {
    for (int& e : t) e = e == 0 ? 0 : 1;
    out.push_back(std::move(t));
  }
  return JSet(j.r(), 1, std::move(out));
}

TupleSpace::TupleSpace(int r, int k) : r_(r), k_(k) {
  if (r < 1 || r > 8) throw DomainError("tuple space arity out of range");
  if (k < 0) throw DomainError("tuple space alphabet bound must be >= 0");
  long long count = 1;
  for (int i = 0; i < r; ++i) {
    count *= k + 1;
    if (count > 64) throw DomainError("tuple space universe exceeds 64 tuples");
  }
  tuple_count_ = static_cast<int>(count);
  bytes_ = (tuple_count_ + 7) / 8;
  elements_ = all_permutations(r);
  // identity first for a stable element order
  std::stable_partition(elements_.begin(), elements_.end(),
                        [](const Permutation& p) { return p.is_identity(); });

  MixedRadixCodec codec = MixedRadixCodec::uniform(r, k + 1);
  const int g = group_size();
  byte_map_.assign(static_cast<size_t>(g) * bytes_ * 256, 0);
  for (int e = 0; e < g; ++e) {
    std::vector<int> image(tuple_count_);
    for (int t = 0; t < tuple_count_; ++t)
      image[t] = static_cast<int>(
          codec.encode(apply_to_tuple(elements_[e], codec.decode(t))));
    for (int byte = 0; byte < bytes_; ++byte)
      for (int bits = 0; bits < 256; ++bits) {
        uint64_t m = 0;
        for (int b = 0; b < 8; ++b) {
          int t = byte * 8 + b;
          if ((bits >> b & 1) && t < tuple_count_) m |= 1ULL << image[t];
        }
        byte_map_[(static_cast<size_t>(e) * bytes_ + byte) * 256 + bits] = m;
      }
  }

  for (int a = 0; a <= r; ++a)
    for (int b = 0; a + b <= r; ++b) {
      if (a > 0 && k < 1) continue;
      uint64_t m = 0;
      for (const auto& t : core_tuples(r, k, a, b))
        m |= 1ULL << codec.encode(t);
      core_masks_.push_back(m);
    }
  std::sort(core_masks_.begin(), core_masks_.end());
  core_masks_.erase(std::unique(core_masks_.begin(), core_masks_.end()),
                    core_masks_.end());
}

uint64_t TupleSpace::permute(int element_index, uint64_t mask) const {
  const uint64_t* table =
      &byte_map_[static_cast<size_t>(element_index) * bytes_ * 256];
  uint64_t out = 0;
  for (int byte = 0; byte < bytes_; ++byte)
    out |= table[byte * 256 + (mask >> (8 * byte) & 0xff)];
  return out;
}

JSet TupleSpace::to_jset(uint64_t mask) const {
  MixedRadixCodec codec = MixedRadixCodec::uniform(r_, k_ + 1);
  std::vector<std::vector<int>> tuples;
  for (int t = 0; t < tuple_count_; ++t)
    if (mask >> t & 1) tuples.push_back(codec.decode(t));
  return JSet(r_, k_, std::move(tuples));
}

uint64_t TupleSpace::mask_of(const JSet& j) const {
  if (j.r() != r_ || j.k() > k_)
    throw DomainError("jset does not fit this tuple space");
  MixedRadixCodec codec = MixedRadixCodec::uniform(r_, k_ + 1);
  uint64_t mask = 0;
  for (const auto& t : j.tuples()) mask |= 1ULL << codec.encode(t);
  return mask;
}

TupleSpace::Analysis TupleSpace::analyze(uint64_t mask) const {
  const int g = group_size();
  static thread_local std::vector<int> stab_buf;
  stab_buf.clear();
  for (int e = 0; e < g; ++e)
    if (permute(e, mask) == mask) stab_buf.push_back(e);
  const int stab_n = static_cast<int>(stab_buf.size());

  // orbit of coordinate 0 under the stabilizing elements
  uint32_t orbit = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int s = 1; s < stab_n; ++s) {
      const Permutation& h = elements_[stab_buf[s]];
      for (int i = 0; i < r_; ++i)
        if ((orbit >> i & 1) && !(orbit >> h[i] & 1)) {
          orbit |= 1u << h[i];
          grew = true;
        }
    }
  }
  bool homogeneous = orbit == (1u << r_) - 1;
  if (!homogeneous) return {false, false};

  for (uint64_t core : core_masks_) {
    uint64_t expanded = 0;
    for (int s = 0; s < stab_n; ++s) expanded |= permute(stab_buf[s], core);
    if (expanded == mask) return {true, true};
  }
  return {true, false};
}

}  // namespace vpfix

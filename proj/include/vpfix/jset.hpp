#pragma once

#include <cstdint>
#include <vector>

#include "vpfix/perm_group.hpp"
#include "vpfix/permutation.hpp"

namespace vpfix {

// A nonempty set of index tuples in X^r with X = {0, ..., k}. Tuples are kept
// sorted and deduplicated, so equal sets compare equal.
class JSet {
 public:
  JSet(int r, int k, std::vector<std::vector<int>> tuples);

  int r() const { return r_; }
  int k() const { return k_; }
  const std::vector<std::vector<int>>& tuples() const { return tuples_; }
  size_t size() const { return tuples_.size(); }
  bool contains(const std::vector<int>& t) const;

  bool operator==(const JSet&) const = default;

 private:
  int r_;
  int k_;
  std::vector<std::vector<int>> tuples_;
};

// Image of a tuple under h acting on coordinate positions: the entry at
// position i moves to position h(i), matching the rank-r action on points.
std::vector<int> apply_to_tuple(const Permutation& h, const std::vector<int>& t);

// Full setwise stabilizer {h in Sym(r) : J^h = J} by factorial scan; r <= 8.
PermutationGroup jset_stabilizer(const JSet& j);

// True iff the setwise stabilizer is transitive on coordinate positions
// (equivalently, J is invariant under some transitive subgroup of Sym(r)).
bool is_homogeneous(const JSet& j);

// True iff J is the stabilizer-closure of a core (X\{0})^a x X^b x {0}^(r-a-b)
// for some a, b >= 0 with a+b <= r. Requires J homogeneous (NotHomogeneous
// otherwise). Scanning the full stabilizer is equivalent to the existential
// form over transitive subgroups: any witness H lies inside the stabilizer,
// and enlarging H to the stabilizer only adds images of the core that are
// already inside J.
bool is_hamming(const JSet& j);

// Entrywise 0 -> 0, nonzero -> 1, duplicates collapsed; result has k = 1.
JSet to_binary_jset(const JSet& j);

// Bulk variant of the J-set predicates over a universe of at most 64 tuples,
// one bit per tuple, for exhaustive sweeps. Index i encodes the tuple with
// mixed-radix digits of i (coordinate 0 most significant).
class TupleSpace {
 public:
  TupleSpace(int r, int k);

  int r() const { return r_; }
  int k() const { return k_; }
  int tuple_count() const { return tuple_count_; }
  uint64_t full_mask() const {
    return tuple_count_ == 64 ? ~0ULL : (1ULL << tuple_count_) - 1;
  }

  int group_size() const { return static_cast<int>(elements_.size()); }
  // Element 0 is the identity.
  const Permutation& element(int i) const { return elements_[i]; }
  uint64_t permute(int element_index, uint64_t mask) const;

  JSet to_jset(uint64_t mask) const;
  uint64_t mask_of(const JSet& j) const;

  struct Analysis {
    bool homogeneous;
    bool hamming;
  };
  // mask must be nonempty. Same predicates as is_homogeneous / is_hamming.
  Analysis analyze(uint64_t mask) const;

 private:
  int r_;
  int k_;
  int tuple_count_;
  std::vector<Permutation> elements_;
  // per element, per byte of the mask: precomputed image mask of those 8 bits
  std::vector<uint64_t> byte_map_;
  int bytes_;
  std::vector<uint64_t> core_masks_;
};

}  // namespace vpfix

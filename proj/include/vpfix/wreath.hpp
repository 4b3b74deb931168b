#pragma once

#include "vpfix/codec.hpp"
#include "vpfix/perm_group.hpp"

namespace vpfix {

// Action of H <= Sym(r) on X^r by coordinate permutation: the image tuple
// satisfies (x^h)_i = x_{h^{-1}(i)}. Tuples are indexed by the shared
// mixed-radix codec (coordinate 0 most significant). The degree x_size^r must
// stay within element_cap.
PermutationGroup rank_r_action(const PermutationGroup& h, int x_size,
                               unsigned long long element_cap = kDefaultElementCap);

// K wr H in product action on m^r points (K on m points, H on r points).
struct WreathAction {
  PermutationGroup inner;   // K
  PermutationGroup top;     // H
  long long product_degree; // m^r
  MixedRadixCodec codec;
  PermutationGroup group;   // generated by r coordinate copies of K's
                            // generators followed by H's coordinate action
};

WreathAction wreath_product_action(const PermutationGroup& k,
                                   const PermutationGroup& h,
                                   unsigned long long element_cap = kDefaultElementCap);

}  // namespace vpfix

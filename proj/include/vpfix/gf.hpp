#pragma once

#include <array>

#include "vpfix/errors.hpp"

namespace vpfix {

// Arithmetic of GF(q) for q in {2, 3, 4}. Elements are 0..q-1; for q = 4 the
// representatives are {0, 1, w, w+1} = {0, 1, 2, 3} with w^2 = w + 1, so
// addition is XOR and the Frobenius map x -> x^2 swaps 2 and 3.
class GaloisField {
 public:
  explicit GaloisField(int q) : q_(q) {
    if (q != 2 && q != 3 && q != 4)
      throw DomainError("field size must be 2, 3, or 4");
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        if (q == 4) {
          add_[a][b] = a ^ b;
          mul_[a][b] = gf4_mul(a, b);
        } else {
          add_[a][b] = (a + b) % q;
          mul_[a][b] = (a * b) % q;
        }
      }
  }

  int q() const { return q_; }
  int characteristic() const { return q_ == 4 ? 2 : q_; }

  int add(int a, int b) const { return add_[a][b]; }
  int mul(int a, int b) const { return mul_[a][b]; }
  int neg(int a) const {
    for (int b = 0; b < q_; ++b)
      if (add_[a][b] == 0) return b;
    return 0;  // unreachable
  }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int inv(int a) const {
    if (a == 0) throw DomainError("zero has no inverse");
    for (int b = 1; b < q_; ++b)
      if (mul_[a][b] == 1) return b;
    return 0;  // unreachable
  }
  // x -> x^p; the identity on prime fields, conjugation on GF(4).
  int frobenius(int a) const { return mul(a, a); }

 private:
  static constexpr int gf4_mul(int a, int b) {
    if (a == 0 || b == 0) return 0;
    // discrete logs base w: 1 -> 0, w -> 1, w+1 -> 2
    constexpr int log[4] = {-1, 0, 1, 2};
    constexpr int exp[3] = {1, 2, 3};
    return exp[(log[a] + log[b]) % 3];
  }

  int q_;
  std::array<std::array<int, 4>, 4> add_{}, mul_{};
};

}  // namespace vpfix

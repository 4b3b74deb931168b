#pragma once

#include <compare>
#include <vector>

#include "vpfix/errors.hpp"

namespace vpfix {

// Permutation of {0, ..., n-1} stored as an image list. Composition is
// left-to-right: compose(p, q) maps x to q[p[x]] (apply p first).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree) : img_(degree) {
    for (int i = 0; i < degree; ++i) img_[i] = i;
  }

  static Permutation from_images(std::vector<int> images);
  // Cycles use point labels in [0, degree); points left out are fixed.
  static Permutation from_cycles(int degree,
                                 const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation p;
    p.img_.resize(img_.size());
    for (int i = 0; i < degree(); ++i) p.img_[img_[i]] = i;
    return p;
  }

  std::vector<int> support() const {
    std::vector<int> s;
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) s.push_back(i);
    return s;
  }

  int support_size() const {
    int c = 0;
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) ++c;
    return c;
  }

  int fixed_count() const { return degree() - support_size(); }

  friend Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
      throw DomainError("compose: degree mismatch");
    Permutation r;
    r.img_.resize(p.img_.size());
    for (int i = 0; i < p.degree(); ++i) r.img_[i] = q.img_[p.img_[i]];
    return r;
  }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> img_;
};

inline Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) throw DomainError("permutation degree must be >= 1");
  std::vector<char> seen(n, 0);
  for (int v : images) {
    if (v < 0 || v >= n || seen[v])
      throw DomainError("permutation image list is not a bijection");
    seen[v] = 1;
  }
  Permutation p;
  p.img_ = std::move(images);
  return p;
}

inline Permutation Permutation::from_cycles(
    int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation p(degree);
  std::vector<char> seen(degree, 0);
  for (const auto& cyc : cycles) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw DomainError("cycle point out of range");
      if (seen[from]) throw DomainError("cycle point repeated");
      seen[from] = 1;
      p.img_[from] = to;
    }
  }
  return p;
}

}  // namespace vpfix

#include "vpfix/wreath.hpp"

#include <cmath>

#include "vpfix/errors.hpp"

namespace vpfix {

namespace {

long long checked_power(long long base, int exp, unsigned long long cap) {
  long long v = 1;
  for (int i = 0; i < exp; ++i) {
    if (static_cast<unsigned long long>(v) > cap / std::max<long long>(base, 1))
      throw ClosureExceedsCap("product degree exceeds element cap");
    v *= base;
  }
  if (static_cast<unsigned long long>(v) > cap)
    throw ClosureExceedsCap("product degree exceeds element cap");
  return v;
}

}  // namespace

PermutationGroup rank_r_action(const PermutationGroup& h, int x_size,
                               unsigned long long element_cap) {
  if (x_size < 1) throw DomainError("rank_r_action needs x_size >= 1");
  const int r = h.degree();
  const long long deg = checked_power(x_size, r, element_cap);
  MixedRadixCodec codec = MixedRadixCodec::uniform(r, x_size);

  std::vector<Permutation> gens;
  std::vector<int> digits(r), moved(r);
  for (const auto& gen : h.generators()) {
    Permutation inv = gen.inverse();
    std::vector<int> img(deg);
    for (long long t = 0; t < deg; ++t) {
      codec.decode(t, digits);
      for (int i = 0; i < r; ++i) moved[i] = digits[inv[i]];
      img[t] = static_cast<int>(codec.encode(moved));
    }
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  return PermutationGroup(static_cast<int>(deg), std::move(gens), element_cap);
}

WreathAction wreath_product_action(const PermutationGroup& k,
                                   const PermutationGroup& h,
                                   unsigned long long element_cap) {
  const int m = k.degree();
  const int r = h.degree();
  const long long deg = checked_power(m, r, element_cap);
  MixedRadixCodec codec = MixedRadixCodec::uniform(r, m);

  std::vector<Permutation> gens;
  std::vector<int> digits(r);
  // Coordinate copies of K's generators: copy c applies the generator to
  // digit c and leaves the others alone.
  for (int c = 0; c < r; ++c) {
    for (const auto& gen : k.generators()) {
      std::vector<int> img(deg);
      for (long long t = 0; t < deg; ++t) {
        codec.decode(t, digits);
        digits[c] = gen[digits[c]];
        img[t] = static_cast<int>(codec.encode(digits));
      }
      gens.push_back(Permutation::from_images(std::move(img)));
    }
  }
  PermutationGroup top_action = rank_r_action(h, m, element_cap);
  for (const auto& gen : top_action.generators()) gens.push_back(gen);

  return WreathAction{k, h, deg, codec,
                      PermutationGroup(static_cast<int>(deg), std::move(gens),
                                       element_cap)};
}

}  // namespace vpfix

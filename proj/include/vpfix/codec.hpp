#pragma once

#include <vector>

#include "vpfix/errors.hpp"

namespace vpfix {

// Mixed-radix tuple/index codec. Coordinate 0 is the most significant digit,
// so for uniform radix m the tuple (t0, ..., t_{r-1}) encodes to
// t0*m^(r-1) + t1*m^(r-2) + ... + t_{r-1}. Every product construction in this
// project (direct products, product actions, index tuples) shares this codec.
class MixedRadixCodec {
 public:
  explicit MixedRadixCodec(std::vector<long long> radices)
      : radices_(std::move(radices)), strides_(radices_.size()) {
    if (radices_.empty()) throw DomainError("codec needs at least one radix");
    size_ = 1;
    for (long long r : radices_) {
      if (r < 1) throw DomainError("codec radix must be >= 1");
      if (size_ > (1LL << 62) / r) throw DomainError("codec size overflow");
      size_ *= r;
    }
    long long s = 1;
    for (int i = static_cast<int>(radices_.size()) - 1; i >= 0; --i) {
      strides_[i] = s;
      s *= radices_[i];
    }
  }

  static MixedRadixCodec uniform(int r, long long m) {
    return MixedRadixCodec(std::vector<long long>(r, m));
  }

  int arity() const { return static_cast<int>(radices_.size()); }
  long long size() const { return size_; }
  long long radix(int i) const { return radices_[i]; }

  long long encode(const std::vector<int>& digits) const {
    if (static_cast<int>(digits.size()) != arity())
      throw DomainError("codec arity mismatch");
    long long x = 0;
    for (int i = 0; i < arity(); ++i) {
      if (digits[i] < 0 || digits[i] >= radices_[i])
        throw DomainError("codec digit out of range");
      x += digits[i] * strides_[i];
    }
    return x;
  }

  void decode(long long index, std::vector<int>& out) const {
    if (index < 0 || index >= size_)
      throw DomainError("codec index out of range");
    out.resize(radices_.size());
    for (int i = 0; i < arity(); ++i) {
      out[i] = static_cast<int>(index / strides_[i]);
      index %= strides_[i];
    }
  }

  std::vector<int> decode(long long index) const {
    std::vector<int> out;
    decode(index, out);
    return out;
  }

 private:
  std::vector<long long> radices_;
  std::vector<long long> strides_;
  long long size_;
};

}  // namespace vpfix

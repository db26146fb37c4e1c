#ifndef RFORGE_BITSET_HPP
#define RFORGE_BITSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace rforge {

// Fixed-width bit row. The pair-counting kernels live on and_count, which is
// a word-wise AND + popcount; keep it inlined and branch-free.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  int size() const { return nbits_; }

  void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  long long count() const {
    long long c = 0;
    for (uint64_t x : w_) c += std::popcount(x);
    return c;
  }

  friend long long and_count(const Bitset& a, const Bitset& b) {
    long long c = 0;
    for (size_t i = 0; i < a.w_.size(); ++i) c += std::popcount(a.w_[i] & b.w_[i]);
    return c;
  }

  // lowest set bit >= from, or -1
  int next(int from) const {
    if (from >= nbits_) return -1;
    int word = from >> 6;
    uint64_t cur = w_[word] & (~uint64_t{0} << (from & 63));
    while (true) {
      if (cur != 0) {
        int bit = (word << 6) + std::countr_zero(cur);
        return bit < nbits_ ? bit : -1;
      }
      if (++word >= static_cast<int>(w_.size())) return -1;
      cur = w_[word];
    }
  }

  friend Bitset operator&(const Bitset& a, const Bitset& b) {
    Bitset r(a.nbits_);
    for (size_t i = 0; i < a.w_.size(); ++i) r.w_[i] = a.w_[i] & b.w_[i];
    return r;
  }

  bool operator==(const Bitset&) const = default;

 private:
  int nbits_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace rforge

#endif

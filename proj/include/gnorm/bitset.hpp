#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace gnorm {

// Fixed-universe bit set used for element membership. The universe is the
// parent group's element range [0, n); words beyond the last used bit are
// kept zero so equality and hashing can work word-wise.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}

  static Bitset full(int universe) {
    Bitset b(universe);
    for (auto& w : b.words_) w = ~std::uint64_t{0};
    b.mask_tail();
    return b;
  }

  int universe() const noexcept { return n_; }

  bool test(int i) const { return (words_[std::size_t(i) >> 6] >> (i & 63)) & 1u; }
  void set(int i) { words_[std::size_t(i) >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[std::size_t(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (auto w : words_) if (w) return true;
    return false;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { a &= b; return a; }

  bool operator==(const Bitset& o) const = default;

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  // Ascending member iteration; returns -1 when exhausted.
  int find_first() const { return find_from(0); }
  int find_next(int i) const { return find_from(i + 1); }

  template <typename F>
  void for_each(F&& f) const {
    for (int i = find_first(); i >= 0; i = find_next(i)) f(i);
  }

  std::vector<std::int32_t> to_vector() const {
    std::vector<std::int32_t> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto w : words_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h ^ std::size_t(n_);
  }

 private:
  void mask_tail() {
    if (n_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }

  int find_from(int i) const {
    if (i >= n_) return -1;
    std::size_t w = std::size_t(i) >> 6;
    std::uint64_t cur = words_[w] >> (i & 63);
    if (cur) return i + std::countr_zero(cur);
    for (++w; w < words_.size(); ++w)
      if (words_[w]) return int(w * 64) + std::countr_zero(words_[w]);
    return -1;
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace gnorm

#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace gpdom {

/// Fixed-size bitmap over vertex slots, 64 slots per word.
class SlotSet {
 public:
  SlotSet() = default;
  explicit SlotSet(int size) : size_(size), words_((size + 63) / 64, 0) {}

  int size() const { return size_; }
  bool test(int s) const { return (words_[s >> 6] >> (s & 63)) & 1u; }
  void set(int s) { words_[s >> 6] |= std::uint64_t{1} << (s & 63); }
  void reset(int s) { words_[s >> 6] &= ~(std::uint64_t{1} << (s & 63)); }
  void assign(int s, bool on) { on ? set(s) : reset(s); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Lowest set slot at or after `from`, or -1.
  int next(int from) const {
    if (from >= size_) return -1;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return static_cast<int>(wi * 64 + std::countr_zero(w));
      if (++wi >= words_.size()) return -1;
      w = words_[wi];
    }
  }
  int first() const { return next(0); }

  template <class F>
  void for_each(F&& fn) const {
    for (int s = first(); s >= 0; s = next(s + 1)) fn(s);
  }

  SlotSet& operator|=(const SlotSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  SlotSet& operator&=(const SlotSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// this &= ~o
  SlotSet& subtract(const SlotSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  bool intersects(const SlotSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool subset_of(const SlotSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  std::span<std::uint64_t> words() { return words_; }
  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const SlotSet&, const SlotSet&) = default;

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace gpdom

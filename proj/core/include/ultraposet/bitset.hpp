#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "ultraposet/error.hpp"

namespace upo {

/// A subset of a fixed finite carrier {0..n-1}, stored as a bit-set.
/// Comparison is numeric on the bit pattern (bit i has weight 2^i), which is
/// the canonical enumeration order used throughout the library.
class SubsetMask {
 public:
  SubsetMask() = default;
  explicit SubsetMask(int universe) : universe_(universe), words_(word_count(universe), 0) {}

  static SubsetMask full(int universe) {
    SubsetMask m(universe);
    for (int i = 0; i < universe; ++i) m.set(i);
    return m;
  }

  static SubsetMask singleton(int i, int universe) {
    SubsetMask m(universe);
    m.set(i);
    return m;
  }

  int universe() const { return universe_; }

  bool test(int i) const {
    check_index(i);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(int i) {
    check_index(i);
    words_[i >> 6] |= uint64_t{1} << (i & 63);
  }

  void reset(int i) {
    check_index(i);
    words_[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += __builtin_popcountll(w);
    return c;
  }

  bool empty() const {
    for (uint64_t w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  bool is_full() const { return count() == universe_; }

  bool subset_of(const SubsetMask& other) const {
    check_same(other);
    for (size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & ~other.words_[k]) return false;
    }
    return true;
  }

  bool intersects(const SubsetMask& other) const {
    check_same(other);
    for (size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & other.words_[k]) return true;
    }
    return false;
  }

  SubsetMask operator&(const SubsetMask& other) const {
    check_same(other);
    SubsetMask r(universe_);
    for (size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] & other.words_[k];
    return r;
  }

  SubsetMask operator|(const SubsetMask& other) const {
    check_same(other);
    SubsetMask r(universe_);
    for (size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] | other.words_[k];
    return r;
  }

  SubsetMask complement() const {
    SubsetMask r(universe_);
    for (size_t k = 0; k < words_.size(); ++k) r.words_[k] = ~words_[k];
    r.trim();
    return r;
  }

  SubsetMask minus(const SubsetMask& other) const {
    check_same(other);
    SubsetMask r(universe_);
    for (size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] & ~other.words_[k];
    return r;
  }

  /// Smallest member, or -1 when empty.
  int first() const {
    for (size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] != 0) return static_cast<int>(k * 64 + __builtin_ctzll(words_[k]));
    }
    return -1;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(count());
    for (int i = 0; i < universe_; ++i) {
      if (test(i)) out.push_back(i);
    }
    return out;
  }

  bool operator==(const SubsetMask& other) const {
    return universe_ == other.universe_ && words_ == other.words_;
  }

  /// Numeric order on the bit pattern; only meaningful within one universe.
  std::strong_ordering operator<=>(const SubsetMask& other) const {
    check_same(other);
    for (size_t k = words_.size(); k-- > 0;) {
      if (words_[k] != other.words_[k]) {
        return words_[k] < other.words_[k] ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
      }
    }
    return std::strong_ordering::equal;
  }

  uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

 private:
  static size_t word_count(int universe) { return (static_cast<size_t>(universe) + 63) / 64; }

  void check_index(int i) const {
    if (i < 0 || i >= universe_) fail(errc::index, "bit index out of range");
  }

  void check_same(const SubsetMask& other) const {
    if (universe_ != other.universe_) fail(errc::shape, "subset masks over different carriers");
  }

  void trim() {
    if (words_.empty()) return;
    int spare = static_cast<int>(words_.size() * 64) - universe_;
    if (spare > 0) words_.back() &= ~uint64_t{0} >> spare;
  }

  int universe_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace upo

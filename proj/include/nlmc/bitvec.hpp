#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace nlmc {

/// Fixed-length bit vector over F2, packed little-endian into 64-bit words.
/// Bit i lives in word i/64 at position i%64. Unused high bits of the last
/// word are always zero.
class BitVec {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVec() = default;
  explicit BitVec(std::size_t nbits) : nbits_(nbits), words_(word_count(nbits), 0) {}

  static constexpr std::size_t word_count(std::size_t nbits) {
    return (nbits + kWordBits - 1) / kWordBits;
  }

  /// Parses a string over {0,1}; character i becomes bit i.
  static BitVec from_string(const std::string& bits);

  std::size_t size() const { return nbits_; }
  bool empty() const { return nbits_ == 0; }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  void set(std::size_t i, bool value = true) {
    const Word mask = Word{1} << (i % kWordBits);
    if (value)
      words_[i / kWordBits] |= mask;
    else
      words_[i / kWordBits] &= ~mask;
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }
  void reset() { std::fill(words_.begin(), words_.end(), Word{0}); }

  /// Sets every bit to one (respecting the tail invariant).
  void fill();

  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    for (Word w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  /// Index of the lowest set bit, or size() when none is set.
  std::size_t find_first() const;

  std::span<Word> words() { return words_; }
  std::span<const Word> words() const { return words_; }

  BitVec& operator^=(const BitVec& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
  }
  BitVec& operator&=(const BitVec& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  BitVec& operator|=(const BitVec& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }

  /// Complements every bit.
  void invert();

  /// True iff every set bit of *this is also set in other.
  bool is_subset_of(const BitVec& other) const;

  std::string to_string() const;

  friend bool operator==(const BitVec&, const BitVec&) = default;
  friend auto operator<=>(const BitVec&, const BitVec&) = default;

 private:
  void clear_tail();

  std::size_t nbits_ = 0;
  std::vector<Word> words_;
};

/// Hamming weight of a ^ b.
std::size_t hamming_distance(const BitVec& a, const BitVec& b);

}  // namespace nlmc

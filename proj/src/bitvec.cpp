#include "nlmc/bitvec.hpp"

#include <stdexcept>

namespace nlmc {

BitVec BitVec::from_string(const std::string& bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i);
    else if (bits[i] != '0')
      throw std::invalid_argument("bit string contains a character other than 0/1");
  }
  return v;
}

void BitVec::fill() {
  std::fill(words_.begin(), words_.end(), ~Word{0});
  clear_tail();
}

std::size_t BitVec::find_first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return nbits_;
}

void BitVec::invert() {
  for (Word& w : words_) w = ~w;
  clear_tail();
}

bool BitVec::is_subset_of(const BitVec& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

std::string BitVec::to_string() const {
  std::string s(nbits_, '0');
  for (std::size_t i = 0; i < nbits_; ++i)
    if (test(i)) s[i] = '1';
  return s;
}

void BitVec::clear_tail() {
  const std::size_t rem = nbits_ % kWordBits;
  if (rem != 0 && !words_.empty()) words_.back() &= (Word{1} << rem) - 1;
}

std::size_t hamming_distance(const BitVec& a, const BitVec& b) {
  std::size_t d = 0;
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i)
    d += static_cast<std::size_t>(std::popcount(wa[i] ^ wb[i]));
  return d;
}

}  // namespace nlmc

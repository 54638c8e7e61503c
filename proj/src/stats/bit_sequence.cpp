#include "inru/stats/bit_sequence.hpp"

#include <bit>
#include <stdexcept>

namespace inru::stats {

BitSequence::BitSequence(std::size_t n)
  : n_(n)
  , words_((n + 63) / 64, 0)
{}

void BitSequence::set(std::size_t i, bool v)
{
  const std::uint64_t mask = std::uint64_t{1} << (63 - (i & 63));
  if (v) {
    words_[i >> 6] |= mask;
  } else {
    words_[i >> 6] &= ~mask;
  }
}

BitSequence BitSequence::from_string(std::string_view zeros_and_ones)
{
  BitSequence s(zeros_and_ones.size());
  for (std::size_t i = 0; i < zeros_and_ones.size(); i++) {
    const char ch = zeros_and_ones[i];
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("bit string may only contain '0' and '1'");
    }
    s.set(i, ch == '1');
  }
  return s;
}

BitSequence BitSequence::from_bytes(std::span<const std::uint8_t> bytes, std::size_t nbits)
{
  if (nbits > bytes.size() * 8) {
    throw std::invalid_argument("not enough bytes for the requested bit count");
  }
  BitSequence s(nbits);
  for (std::size_t i = 0; i < nbits; i++) {
    s.set(i, (bytes[i / 8] >> (7 - i % 8)) & 1u);
  }
  return s;
}

BitSequence BitSequence::from_bits(std::span<const std::uint8_t> bits)
{
  BitSequence s(bits.size());
  for (std::size_t i = 0; i < bits.size(); i++) {
    s.set(i, bits[i] != 0);
  }
  return s;
}

std::size_t BitSequence::count_ones() const
{
  std::size_t total = 0;
  for (auto w : words_) {
    total += static_cast<std::size_t>(std::popcount(w));
  }
  return total;
}

std::vector<std::uint8_t> BitSequence::unpacked() const
{
  std::vector<std::uint8_t> out(n_);
  for (std::size_t i = 0; i < n_; i++) {
    out[i] = (*this)[i];
  }
  return out;
}

std::string BitSequence::to_string() const
{
  std::string out(n_, '0');
  for (std::size_t i = 0; i < n_; i++) {
    if ((*this)[i]) {
      out[i] = '1';
    }
  }
  return out;
}

} // namespace inru::stats

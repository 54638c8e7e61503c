#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace inru::stats {

// Packed binary sequence. Bit i lives in word i / 64 at bit 63 - i % 64, so
// byte input keeps its most-significant-bit-first order.
class BitSequence
{
public:
  BitSequence() = default;
  explicit BitSequence(std::size_t n);

  static BitSequence from_string(std::string_view zeros_and_ones);
  // Takes the first nbits bits of bytes, MSB first within each byte.
  static BitSequence from_bytes(std::span<const std::uint8_t> bytes, std::size_t nbits);
  static BitSequence from_bits(std::span<const std::uint8_t> bits);

  std::size_t size() const { return n_; }

  bool operator[](std::size_t i) const { return (words_[i >> 6] >> (63 - (i & 63))) & 1u; }
  void set(std::size_t i, bool v);

  std::size_t count_ones() const;
  std::vector<std::uint8_t> unpacked() const;
  std::string to_string() const;

  friend bool operator==(const BitSequence&, const BitSequence&) = default;

private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

} // namespace inru::stats

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace inru {

// A 64-bit cipher block m_0..m_15.
//
// Packing: nibble m_{2j} is the high half of byte j and m_{2j+1} the low half;
// bit i of the 64-bit string is bit (i mod 4), counted from the top, of nibble
// floor(i/4). Read as a big-endian integer, bit i is therefore bit 63-i and
// nibble j occupies bits 63-4j..60-4j.
class Block
{
public:
  constexpr Block() = default;
  constexpr explicit Block(std::uint64_t value)
    : value_(value)
  {}

  static Block from_bytes(std::span<const std::uint8_t, 8> bytes);
  static Block from_nibbles(std::span<const std::uint8_t> nibbles);
  static Block from_hex(std::string_view hex);

  constexpr std::uint64_t value() const { return value_; }

  constexpr std::uint8_t nibble(int j) const
  {
    return static_cast<std::uint8_t>((value_ >> (60 - 4 * j)) & 0xf);
  }

  constexpr void set_nibble(int j, std::uint8_t v)
  {
    const int shift = 60 - 4 * j;
    value_ = (value_ & ~(std::uint64_t{0xf} << shift)) | (std::uint64_t{v & 0xfu} << shift);
  }

  constexpr bool bit(int i) const { return (value_ >> (63 - i)) & 1u; }

  constexpr Block with_bit_flipped(int i) const
  {
    return Block(value_ ^ (std::uint64_t{1} << (63 - i)));
  }

  std::array<std::uint8_t, 8> to_bytes() const;
  std::array<std::uint8_t, 16> to_nibbles() const;
  std::string to_hex() const;

  friend constexpr bool operator==(Block, Block) = default;

private:
  std::uint64_t value_ = 0;
};

} // namespace inru

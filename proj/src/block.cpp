#include "inru/block.hpp"

#include "inru/hex.hpp"

#include <stdexcept>

namespace inru {

Block Block::from_bytes(std::span<const std::uint8_t, 8> bytes)
{
  std::uint64_t v = 0;
  for (auto b : bytes) {
    v = v << 8 | b;
  }
  return Block(v);
}

Block Block::from_nibbles(std::span<const std::uint8_t> nibbles)
{
  if (nibbles.size() != 16) {
    throw std::invalid_argument("a block has exactly 16 nibbles");
  }
  std::uint64_t v = 0;
  for (auto n : nibbles) {
    if (n > 0xf) {
      throw std::invalid_argument("nibble value out of range");
    }
    v = v << 4 | n;
  }
  return Block(v);
}

Block Block::from_hex(std::string_view hex)
{
  return from_nibbles(parse_hex_nibbles(hex, 16));
}

std::array<std::uint8_t, 8> Block::to_bytes() const
{
  std::array<std::uint8_t, 8> out{};
  for (int j = 0; j < 8; j++) {
    out[j] = static_cast<std::uint8_t>(value_ >> (56 - 8 * j));
  }
  return out;
}

std::array<std::uint8_t, 16> Block::to_nibbles() const
{
  std::array<std::uint8_t, 16> out{};
  for (int j = 0; j < 16; j++) {
    out[j] = nibble(j);
  }
  return out;
}

std::string Block::to_hex() const
{
  const auto n = to_nibbles();
  return nibbles_to_hex(n);
}

} // namespace inru

#include "inru/hex.hpp"

namespace inru {

namespace {

int digit_value(char ch)
{
  if (ch >= '0' && ch <= '9') {
    return ch - '0';
  }
  if (ch >= 'a' && ch <= 'f') {
    return ch - 'a' + 10;
  }
  if (ch >= 'A' && ch <= 'F') {
    return ch - 'A' + 10;
  }
  return -1;
}

constexpr char k_digits[] = "0123456789abcdef";

} // namespace

std::vector<std::uint8_t> parse_hex_nibbles(std::string_view hex, std::size_t expected_digits)
{
  if (expected_digits != 0 && hex.size() != expected_digits) {
    throw HexError("expected " + std::to_string(expected_digits) + " hex digits, got " +
                   std::to_string(hex.size()));
  }
  std::vector<std::uint8_t> out;
  out.reserve(hex.size());
  for (char ch : hex) {
    const int v = digit_value(ch);
    if (v < 0) {
      throw HexError(std::string("invalid hex digit '") + ch + "'");
    }
    out.push_back(static_cast<std::uint8_t>(v));
  }
  return out;
}

std::string nibbles_to_hex(std::span<const std::uint8_t> nibbles)
{
  std::string out;
  out.reserve(nibbles.size());
  for (auto n : nibbles) {
    out += k_digits[n & 0xf];
  }
  return out;
}

std::vector<std::uint8_t> parse_hex_bytes(std::string_view hex)
{
  if (hex.size() % 2 != 0) {
    throw HexError("odd number of hex digits");
  }
  const auto nibbles = parse_hex_nibbles(hex);
  std::vector<std::uint8_t> out(nibbles.size() / 2);
  for (std::size_t i = 0; i < out.size(); i++) {
    out[i] = static_cast<std::uint8_t>(nibbles[2 * i] << 4 | nibbles[2 * i + 1]);
  }
  return out;
}

std::string bytes_to_hex(std::span<const std::uint8_t> bytes)
{
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out += k_digits[b >> 4];
    out += k_digits[b & 0xf];
  }
  return out;
}

} // namespace inru

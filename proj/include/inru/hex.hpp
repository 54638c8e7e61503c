#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace inru {

class HexError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

// One nibble per hex digit, most significant digit first. Upper and lower
// case are accepted; expected_digits == 0 disables the length check.
std::vector<std::uint8_t> parse_hex_nibbles(std::string_view hex, std::size_t expected_digits = 0);
std::string nibbles_to_hex(std::span<const std::uint8_t> nibbles);

std::vector<std::uint8_t> parse_hex_bytes(std::string_view hex);
std::string bytes_to_hex(std::span<const std::uint8_t> bytes);

} // namespace inru

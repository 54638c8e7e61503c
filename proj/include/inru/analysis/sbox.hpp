#pragma once

#include "inru/quasigroup.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace inru::analysis {

// Two Sbox views of a quasigroup of order 16:
//
//   row  S_l : x -> l * x                      (4 -> 4, one per leader l)
//   wide S   : (l, x) -> l * x, input l << 4 | x (8 -> 4)
//
// The wide view is the confusion step of one nibble position with the chain
// nibble treated as a second input.
enum class SboxKind
{
  row,
  wide
};

struct SboxView
{
  SboxKind kind = SboxKind::row;
  int leader = 0;  // meaningful for row views only
  int input_bits = 4;
  int output_bits = 4;
  std::vector<std::uint8_t> table;  // output per input

  static SboxView row(const qg::Quasigroup& q, qg::Element leader);
  static SboxView wide(const qg::Quasigroup& q);

  std::size_t input_size() const { return table.size(); }
  std::size_t output_size() const { return std::size_t{1} << output_bits; }
};

// counts[din * output_size + dout] = #{x : S(x) ^ S(x ^ din) = dout}
struct DDT
{
  int input_bits = 0;
  int output_bits = 0;
  std::vector<std::uint32_t> counts;

  std::uint32_t at(std::uint32_t din, std::uint32_t dout) const
  {
    return counts[(din << output_bits) | dout];
  }
  // Largest entry over nonzero input differences.
  std::uint32_t max_nontrivial() const;
};

// Signed bias: bias(a, b) = #{x : a.x = b.S(x)} - input_size / 2. So the
// (0, 0) entry is +input_size / 2 and a perfectly balanced approximation is 0.
struct LAT
{
  int input_bits = 0;
  int output_bits = 0;
  std::vector<std::int32_t> bias;

  std::int32_t at(std::uint32_t a, std::uint32_t b) const { return bias[(a << output_bits) | b]; }
  // Largest |bias| over (a, b) != (0, 0).
  std::uint32_t max_abs_nontrivial() const;
};

DDT build_ddt(const SboxView& s);
LAT build_lat(const SboxView& s);

// Plain-text tables, one row per input difference / mask, with a header
// explaining the convention. Entries are in decimal.
std::string render_ddt(const DDT& d, const std::string& title);
std::string render_lat(const LAT& l, const std::string& title);

} // namespace inru::analysis

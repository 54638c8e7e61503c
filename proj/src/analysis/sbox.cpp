#include "inru/analysis/sbox.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace inru::analysis {

namespace {

void require_order16(const qg::Quasigroup& q)
{
  if (q.order() != 16) {
    throw std::invalid_argument("Sbox views need a quasigroup of order 16");
  }
}

int parity(std::uint32_t v)
{
  return std::popcount(v) & 1;
}

} // namespace

SboxView SboxView::row(const qg::Quasigroup& q, qg::Element leader)
{
  require_order16(q);
  if (leader >= 16) {
    throw std::invalid_argument("leader out of range");
  }
  SboxView s;
  s.kind = SboxKind::row;
  s.leader = leader;
  s.input_bits = 4;
  s.table.resize(16);
  for (int x = 0; x < 16; x++) {
    s.table[static_cast<std::size_t>(x)] = q.mul(leader, static_cast<qg::Element>(x));
  }
  return s;
}

SboxView SboxView::wide(const qg::Quasigroup& q)
{
  require_order16(q);
  SboxView s;
  s.kind = SboxKind::wide;
  s.input_bits = 8;
  s.table.resize(256);
  for (int v = 0; v < 256; v++) {
    s.table[static_cast<std::size_t>(v)] =
      q.mul(static_cast<qg::Element>(v >> 4), static_cast<qg::Element>(v & 15));
  }
  return s;
}

std::uint32_t DDT::max_nontrivial() const
{
  const std::size_t row = std::size_t{1} << output_bits;
  return *std::max_element(counts.begin() + static_cast<std::ptrdiff_t>(row), counts.end());
}

std::uint32_t LAT::max_abs_nontrivial() const
{
  std::uint32_t best = 0;
  for (std::size_t i = 1; i < bias.size(); i++) {
    best = std::max(best, static_cast<std::uint32_t>(std::abs(bias[i])));
  }
  return best;
}

DDT build_ddt(const SboxView& s)
{
  DDT d;
  d.input_bits = s.input_bits;
  d.output_bits = s.output_bits;
  const std::uint32_t n = static_cast<std::uint32_t>(s.input_size());
  d.counts.assign(static_cast<std::size_t>(n) << s.output_bits, 0);
  for (std::uint32_t din = 0; din < n; din++) {
    for (std::uint32_t x = 0; x < n; x++) {
      const std::uint32_t dout = s.table[x] ^ s.table[x ^ din];
      d.counts[(din << s.output_bits) | dout]++;
    }
  }
  return d;
}

LAT build_lat(const SboxView& s)
{
  LAT l;
  l.input_bits = s.input_bits;
  l.output_bits = s.output_bits;
  const std::uint32_t n = static_cast<std::uint32_t>(s.input_size());
  const std::uint32_t m = static_cast<std::uint32_t>(s.output_size());
  l.bias.assign(static_cast<std::size_t>(n) * m, 0);
  for (std::uint32_t a = 0; a < n; a++) {
    for (std::uint32_t b = 0; b < m; b++) {
      std::int32_t agree = 0;
      for (std::uint32_t x = 0; x < n; x++) {
        agree += parity(a & x) == parity(b & s.table[x]);
      }
      l.bias[a * m + b] = agree - static_cast<std::int32_t>(n / 2);
    }
  }
  return l;
}

std::string render_ddt(const DDT& d, const std::string& title)
{
  std::ostringstream out;
  const std::size_t cols = std::size_t{1} << d.output_bits;
  const std::size_t rows = d.counts.size() / cols;
  out << "# " << title << '\n';
  out << "# DDT: row = input difference, column = output difference (hex),"
      << " entry = number of inputs\n";
  out << "# max over nonzero input differences: " << d.max_nontrivial() << '\n';
  out << "  ";
  for (std::size_t c = 0; c < cols; c++) {
    out << std::setw(4) << std::hex << c;
  }
  out << std::dec << '\n';
  for (std::size_t r = 0; r < rows; r++) {
    out << std::setw(2) << std::setfill('0') << std::hex << r << std::setfill(' ') << std::dec;
    for (std::size_t c = 0; c < cols; c++) {
      out << std::setw(4) << d.counts[r * cols + c];
    }
    out << '\n';
  }
  return out.str();
}

std::string render_lat(const LAT& l, const std::string& title)
{
  std::ostringstream out;
  const std::size_t cols = std::size_t{1} << l.output_bits;
  const std::size_t rows = l.bias.size() / cols;
  out << "# " << title << '\n';
  out << "# LAT: row = input mask a, column = output mask b (hex),"
      << " entry = #{x : a.x = b.S(x)} - " << rows / 2 << " (signed bias count)\n";
  out << "# max |bias| over (a, b) != (0, 0): " << l.max_abs_nontrivial() << '\n';
  out << "  ";
  for (std::size_t c = 0; c < cols; c++) {
    out << std::setw(5) << std::hex << c;
  }
  out << std::dec << '\n';
  for (std::size_t r = 0; r < rows; r++) {
    out << std::setw(2) << std::setfill('0') << std::hex << r << std::setfill(' ') << std::dec;
    for (std::size_t c = 0; c < cols; c++) {
      out << std::setw(5) << l.bias[r * cols + c];
    }
    out << '\n';
  }
  return out.str();
}

} // namespace inru::analysis

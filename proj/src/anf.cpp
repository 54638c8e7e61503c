#include "inru/anf.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace inru::qg {

bool BooleanFunctionANF::evaluate(std::uint32_t input) const
{
  bool acc = false;
  for (auto m : monomials) {
    acc ^= (input & m) == m;
  }
  return acc;
}

int BooleanFunctionANF::degree() const
{
  int d = 0;
  for (auto m : monomials) {
    d = std::max(d, std::popcount(m));
  }
  return d;
}

bool BooleanFunctionANF::contains(std::uint32_t monomial) const
{
  return std::binary_search(monomials.begin(), monomials.end(), monomial);
}

BooleanFunctionANF anf_from_truth_table(std::span<const std::uint8_t> truth_table)
{
  const std::size_t size = truth_table.size();
  if (size == 0 || !std::has_single_bit(size) || size > (std::size_t{1} << 24)) {
    throw std::invalid_argument("truth table size must be a power of two");
  }
  std::vector<std::uint8_t> coeffs(truth_table.begin(), truth_table.end());
  for (auto& c : coeffs) {
    c &= 1;
  }
  for (std::size_t step = 1; step < size; step <<= 1) {
    for (std::size_t i = 0; i < size; i++) {
      if (i & step) {
        coeffs[i] ^= coeffs[i ^ step];
      }
    }
  }
  BooleanFunctionANF f;
  f.num_vars = std::countr_zero(size);
  for (std::size_t i = 0; i < size; i++) {
    if (coeffs[i]) {
      f.monomials.push_back(static_cast<std::uint32_t>(i));
    }
  }
  return f;
}

std::vector<std::uint8_t> truth_table_from_anf(const BooleanFunctionANF& f)
{
  std::vector<std::uint8_t> table(std::size_t{1} << f.num_vars);
  for (std::size_t x = 0; x < table.size(); x++) {
    table[x] = f.evaluate(static_cast<std::uint32_t>(x));
  }
  return table;
}

int element_bits(const Quasigroup& q)
{
  const std::size_t n = q.order();
  if (n < 2 || !std::has_single_bit(n) || n > 256) {
    throw std::invalid_argument("Boolean representation needs order 2^d, 1 <= d <= 8");
  }
  return std::countr_zero(n);
}

namespace {

// Packs (x, x') into the variable encoding of coordinate_anf: variable v is
// input bit v, variables 0..d-1 are x MSB-first, d..2d-1 are x' MSB-first.
std::uint32_t encode_inputs(std::uint32_t x, std::uint32_t xp, int d)
{
  std::uint32_t in = 0;
  for (int j = 0; j < d; j++) {
    in |= ((x >> (d - 1 - j)) & 1u) << j;
    in |= ((xp >> (d - 1 - j)) & 1u) << (d + j);
  }
  return in;
}

template <typename OutputBit>
BooleanFunctionANF anf_of(const Quasigroup& q, OutputBit bit_of)
{
  const int d = element_bits(q);
  const std::uint32_t n = 1u << d;
  std::vector<std::uint8_t> table(std::size_t{1} << (2 * d));
  for (std::uint32_t x = 0; x < n; x++) {
    for (std::uint32_t xp = 0; xp < n; xp++) {
      const Element p = q.mul(static_cast<Element>(x), static_cast<Element>(xp));
      table[encode_inputs(x, xp, d)] = bit_of(p);
    }
  }
  return anf_from_truth_table(table);
}

} // namespace

BooleanFunctionANF coordinate_anf(const Quasigroup& q, int coordinate)
{
  const int d = element_bits(q);
  if (coordinate < 0 || coordinate >= d) {
    throw std::out_of_range("coordinate index out of range");
  }
  return anf_of(q, [&](Element p) { return static_cast<std::uint8_t>((p >> (d - 1 - coordinate)) & 1u); });
}

BooleanFunctionANF component_anf(const Quasigroup& q, unsigned mask)
{
  const int d = element_bits(q);
  if (mask == 0 || mask >= (1u << d)) {
    throw std::out_of_range("component mask must be nonzero and fit the element width");
  }
  return anf_of(q, [&](Element p) { return static_cast<std::uint8_t>(std::popcount(p & mask) & 1); });
}

int algebraic_degree(const Quasigroup& q, unsigned mask)
{
  return component_anf(q, mask).degree();
}

std::string render_quasigroup_anf(const BooleanFunctionANF& f, int bits_per_element)
{
  auto sorted = f.monomials;
  std::stable_sort(sorted.begin(), sorted.end(), [](std::uint32_t a, std::uint32_t b) {
    if (std::popcount(a) != std::popcount(b)) {
      return std::popcount(a) > std::popcount(b);
    }
    return a < b;
  });
  std::string out;
  for (auto m : sorted) {
    if (!out.empty()) {
      out += '+';
    }
    if (m == 0) {
      out += '1';
      continue;
    }
    bool first = true;
    for (int v = 0; v < f.num_vars; v++) {
      if (!(m >> v & 1u)) {
        continue;
      }
      if (!first) {
        out += '*';
      }
      first = false;
      out += v < bits_per_element ? "x_" + std::to_string(v)
                                  : "x'_" + std::to_string(v - bits_per_element);
    }
  }
  return out.empty() ? "0" : out;
}

BooleanFunctionANF parse_quasigroup_anf(const std::string& text, int bits_per_element)
{
  BooleanFunctionANF f;
  f.num_vars = 2 * bits_per_element;
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) {
      compact += ch;
    }
  }
  std::vector<std::uint32_t> terms;
  std::istringstream in(compact);
  std::string term;
  while (std::getline(in, term, '+')) {
    if (term == "1") {
      terms.push_back(0);
      continue;
    }
    if (term == "0") {
      continue;
    }
    std::uint32_t m = 0;
    std::istringstream factors(term);
    std::string var;
    while (std::getline(factors, var, '*')) {
      const bool primed = var.rfind("x'_", 0) == 0;
      if (!primed && var.rfind("x_", 0) != 0) {
        throw std::invalid_argument("bad variable '" + var + "'");
      }
      const int idx = std::stoi(var.substr(primed ? 3 : 2));
      if (idx < 0 || idx >= bits_per_element) {
        throw std::invalid_argument("variable index out of range in '" + var + "'");
      }
      m |= 1u << (idx + (primed ? bits_per_element : 0));
    }
    terms.push_back(m);
  }
  // a monomial listed twice cancels over GF(2)
  std::sort(terms.begin(), terms.end());
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) {
      j++;
    }
    if ((j - i) % 2 == 1) {
      f.monomials.push_back(terms[i]);
    }
    i = j;
  }
  return f;
}

} // namespace inru::qg

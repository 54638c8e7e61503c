#pragma once

#include "inru/quasigroup.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace inru::qg {

// Algebraic normal form of a Boolean function in num_vars variables. Each
// monomial is a bitmask over variable indices; bit v set means variable v
// occurs. The empty mask is the constant 1. Monomials are kept sorted.
struct BooleanFunctionANF
{
  int num_vars = 0;
  std::vector<std::uint32_t> monomials;

  // input bit v is the value of variable v
  bool evaluate(std::uint32_t input) const;
  int degree() const;
  bool contains(std::uint32_t monomial) const;

  friend bool operator==(const BooleanFunctionANF&, const BooleanFunctionANF&) = default;
};

// Binary Moebius transform; truth_table[x] is f(x) with x encoded as above.
BooleanFunctionANF anf_from_truth_table(std::span<const std::uint8_t> truth_table);

// Inverse direction, mostly for tests.
std::vector<std::uint8_t> truth_table_from_anf(const BooleanFunctionANF& f);

// Bit convention for an order-2^d quasigroup (d = 4 for the cipher): inside
// an element, coordinate 0 is the most significant bit. Variables 0..d-1 are
// the bits of the left operand x (x_0 first), variables d..2d-1 the bits of
// the right operand x'. coordinate_anf(q, i) is bit i of x * x' under the
// same convention.
//
// The reference f_0..f_3 of the INRU square number output bits from the
// least significant end: f_k == coordinate_anf(inru, 3 - k).
BooleanFunctionANF coordinate_anf(const Quasigroup& q, int coordinate);

// Component function x, x' -> <mask, x * x'> where mask is read as an element
// value (bit i of the value selects the output bit of weight 2^i).
BooleanFunctionANF component_anf(const Quasigroup& q, unsigned mask);

int algebraic_degree(const Quasigroup& q, unsigned mask);

int element_bits(const Quasigroup& q);

// Renders e.g. "x_0*x'_1+x_2+1" in the variable naming of coordinate_anf,
// highest degree first. Used to compare against reference polynomials.
std::string render_quasigroup_anf(const BooleanFunctionANF& f, int bits_per_element);

// Parses the same syntax back into monomial form.
BooleanFunctionANF parse_quasigroup_anf(const std::string& text, int bits_per_element);

} // namespace inru::qg

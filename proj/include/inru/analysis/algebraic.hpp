#pragma once

#include "inru/cipher.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace inru::analysis {

// A polynomial over GF(2) in named bit variables. A term is a sorted list of
// variable ids; the empty term is the constant 1. Every equation reads
// "polynomial = 0".
struct Polynomial
{
  std::vector<std::vector<std::uint32_t>> terms;

  int degree() const;
  bool is_linear() const { return degree() <= 1; }
};

// Boolean model of a reduced-round encryption.
//
// Variables, in id order:
//   x0..x63, c0..c63          plaintext and ciphertext bits (known)
//   per round r = 1..R:
//     k{r}_i                  round key rk_{r-1}
//     y{r}_i                  after the key xor
//     z{r}_i                  after the quasigroup layer
//     u{r}_i                  after the diffusion layer (rounds with one)
//   k{R+1}_i                  final whitening key rk_R
//
// Equations per round: 64 linear key-xor equations, 64 quasigroup equations
// z = f_j(chain nibble, y nibble) of degree 6, and 64 linear diffusion
// equations where the round has diffusion. One final block of 64 linear
// equations ties c to the last state and k{R+1}.
struct AlgebraicSystem
{
  int rounds = 0;
  std::vector<std::string> variable_names;
  std::vector<Polynomial> equations;

  std::uint32_t variable(const std::string& name) const;
  std::size_t nonlinear_equations() const;
  std::size_t linear_equations() const;

  std::string render_equation(const Polynomial& p) const;
  // Header comments (counts, naming, ordering), then one equation per line.
  std::string render() const;
};

AlgebraicSystem emit_algebraic_system(int rounds);

// Values for every variable of the system, taken from an instrumented
// encryption with round keys rk.
std::vector<std::uint8_t> trace_assignment(const AlgebraicSystem& system,
                                           const RoundKeys& rk,
                                           const EncryptionTrace& trace);

bool evaluate(const Polynomial& p, const std::vector<std::uint8_t>& assignment);
// Number of equations that do not vanish under the assignment.
std::size_t count_unsatisfied(const AlgebraicSystem& system,
                              const std::vector<std::uint8_t>& assignment);

struct SystemSize
{
  int rounds = 0;
  std::size_t equations = 0;
  std::size_t nonlinear_equations = 0;
  std::size_t linear_equations = 0;
  std::size_t variables = 0;  // all named variables, x and c included
  std::size_t unknowns = 0;   // everything except the known x and c
  // unknowns minus the GF(2) rank of the linear equations: the variables
  // left once every linearly defined one is substituted away
  std::size_t variables_after_elimination = 0;
};

// rounds in 0..16. Zero rounds is the bare whitening c = x + k1.
SystemSize count_system_size(int rounds);

} // namespace inru::analysis

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace inru::qg {

// Elements of a quasigroup of order n are the integers 0..n-1. For the
// order-16 square used by the cipher an element is a nibble.
using Element = std::uint8_t;
using Grid = std::vector<std::vector<int>>;

class LatinSquareError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

// A finite quasigroup (Q, *) stored as its Cayley table together with the
// precomputed left and right division tables:
//
//   mul(r, c)  = r * c
//   ldiv(r, v) = the unique c with r * c = v      (r \ v)
//   rdiv(v, c) = the unique r with r * c = v      (v / c)
//
// Values are immutable after construction and safe to share between threads.
class Quasigroup
{
public:
  // Validates the Latin-square property and derives both division tables.
  // Throws LatinSquareError naming the first offending row or column.
  static Quasigroup from_table(const Grid& rows);

  // The order-16 square the cipher is built on.
  static const Quasigroup& inru();

  std::size_t order() const { return n_; }

  Element mul(Element a, Element b) const { return mul_[a * n_ + b]; }
  Element ldiv(Element a, Element v) const { return ldiv_[a * n_ + v]; }
  Element rdiv(Element v, Element b) const { return rdiv_[v * n_ + b]; }

  // Row-major n*n tables; entry (r, c) at index r * order() + c.
  const std::vector<Element>& mul_table() const { return mul_; }
  const std::vector<Element>& ldiv_table() const { return ldiv_; }
  const std::vector<Element>& rdiv_table() const { return rdiv_; }

  Grid grid() const;

  friend bool operator==(const Quasigroup&, const Quasigroup&) = default;

private:
  Quasigroup() = default;

  std::size_t n_ = 0;
  std::vector<Element> mul_;
  std::vector<Element> ldiv_;
  std::vector<Element> rdiv_;
};

// Text form: one row per line, entries as lowercase hex digits separated by
// single spaces. Only orders up to 16 have a text form.
Quasigroup parse_square(std::istream& in);
Quasigroup parse_square(const std::string& text);
std::string format_square(const Quasigroup& q);

enum class Conjugate
{
  left_division,
  right_division
};

// The parastrophe whose multiplication is q's left (or right) division.
Quasigroup conjugate(const Quasigroup& q, Conjugate which);

// Structure checks.
//
// check_latin on a raw grid accepts anything square; a Quasigroup is Latin by
// construction, the overload re-verifies the stored table.
bool check_latin(const Grid& rows);
bool check_latin(const Quasigroup& q);

// A non-empty subset closed under * is a subquasigroup when Q is finite
// (left and right translations restricted to it are injective, hence onto).
// Any proper subquasigroup contains the *-closure of each of its elements, so
// Q has a proper subquasigroup iff the closure of some singleton is proper.
// Checking the n singleton closures is therefore complete.
bool has_proper_subquasigroup(const Quasigroup& q);

struct MedialityResult
{
  bool medial = true;
  // (x, y, u, v) with (x*y)*(u*v) != (x*u)*(y*v), present iff !medial.
  std::optional<std::array<Element, 4>> witness;
};

// Exhaustive check of (x*y)*(u*v) = (x*u)*(y*v). By Toyoda's theorem a
// quasigroup is medial iff it is affine over an abelian group, so a false
// result certifies non-affinity.
MedialityResult is_medial(const Quasigroup& q);

// True iff the congruence generated by every pair (a, b), a != b, is the full
// relation. Each principal congruence is built by union-find closure under
// the left and right translations of *, \ and /.
bool is_simple(const Quasigroup& q);

} // namespace inru::qg

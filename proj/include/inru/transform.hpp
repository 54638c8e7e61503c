#pragma once

#include "inru/quasigroup.hpp"

#include <span>
#include <vector>

namespace inru::qg {

using NibbleString = std::vector<Element>;

// Elementary string transformations with leader l. All of them preserve the
// length of the string and reject the empty string.
//
//   e_left : b_0 = l * a_0,         b_i = b_{i-1} * a_i
//   e_right: b_{r-1} = l * a_{r-1}, b_i = b_{i+1} * a_i
//   d_left : b_0 = l \ a_0,         b_i = a_{i-1} \ a_i
//   d_right: b_{r-1} = l \ a_{r-1}, b_i = a_{i+1} \ a_i
//
// d_left inverts e_left and d_right inverts e_right for the same leader.
NibbleString e_left(const Quasigroup& q, Element leader, std::span<const Element> s);
NibbleString e_right(const Quasigroup& q, Element leader, std::span<const Element> s);
NibbleString d_left(const Quasigroup& q, Element leader, std::span<const Element> s);
NibbleString d_right(const Quasigroup& q, Element leader, std::span<const Element> s);

// In-place variants used on the key-schedule hot path.
void e_left_inplace(const Quasigroup& q, Element leader, std::span<Element> s);
void e_right_inplace(const Quasigroup& q, Element leader, std::span<Element> s);

enum class Direction
{
  left,
  right
};

struct LeaderSchedule
{
  std::vector<Element> leaders;
};

// Applies e-transformations in order: step k uses leaders[k] and
// directions[k]. An empty schedule is the identity.
NibbleString apply_chain(const Quasigroup& q,
                         const LeaderSchedule& schedule,
                         std::span<const Direction> directions,
                         std::span<const Element> s);

// Undoes apply_chain with the matching d-transformations in reverse order.
NibbleString invert_chain(const Quasigroup& q,
                          const LeaderSchedule& schedule,
                          std::span<const Direction> directions,
                          std::span<const Element> s);

} // namespace inru::qg

#include "inru/transform.hpp"

#include <algorithm>
#include <stdexcept>

namespace inru::qg {

namespace {

void require_nonempty(std::span<const Element> s)
{
  if (s.empty()) {
    throw std::invalid_argument("string transformation of an empty string");
  }
}

} // namespace

void e_left_inplace(const Quasigroup& q, Element leader, std::span<Element> s)
{
  require_nonempty(s);
  Element prev = leader;
  for (auto& a : s) {
    prev = q.mul(prev, a);
    a = prev;
  }
}

void e_right_inplace(const Quasigroup& q, Element leader, std::span<Element> s)
{
  require_nonempty(s);
  Element prev = leader;
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    prev = q.mul(prev, *it);
    *it = prev;
  }
}

NibbleString e_left(const Quasigroup& q, Element leader, std::span<const Element> s)
{
  NibbleString out(s.begin(), s.end());
  e_left_inplace(q, leader, out);
  return out;
}

NibbleString e_right(const Quasigroup& q, Element leader, std::span<const Element> s)
{
  NibbleString out(s.begin(), s.end());
  e_right_inplace(q, leader, out);
  return out;
}

NibbleString d_left(const Quasigroup& q, Element leader, std::span<const Element> s)
{
  require_nonempty(s);
  NibbleString out(s.size());
  Element prev = leader;
  for (std::size_t i = 0; i < s.size(); i++) {
    out[i] = q.ldiv(prev, s[i]);
    prev = s[i];
  }
  return out;
}

NibbleString d_right(const Quasigroup& q, Element leader, std::span<const Element> s)
{
  require_nonempty(s);
  NibbleString out(s.size());
  Element prev = leader;
  for (std::size_t i = s.size(); i-- > 0;) {
    out[i] = q.ldiv(prev, s[i]);
    prev = s[i];
  }
  return out;
}

NibbleString apply_chain(const Quasigroup& q,
                         const LeaderSchedule& schedule,
                         std::span<const Direction> directions,
                         std::span<const Element> s)
{
  if (schedule.leaders.size() != directions.size()) {
    throw std::invalid_argument("leader schedule and direction list differ in length");
  }
  NibbleString out(s.begin(), s.end());
  for (std::size_t k = 0; k < directions.size(); k++) {
    if (directions[k] == Direction::left) {
      e_left_inplace(q, schedule.leaders[k], out);
    } else {
      e_right_inplace(q, schedule.leaders[k], out);
    }
  }
  return out;
}

NibbleString invert_chain(const Quasigroup& q,
                          const LeaderSchedule& schedule,
                          std::span<const Direction> directions,
                          std::span<const Element> s)
{
  if (schedule.leaders.size() != directions.size()) {
    throw std::invalid_argument("leader schedule and direction list differ in length");
  }
  NibbleString out(s.begin(), s.end());
  for (std::size_t k = directions.size(); k-- > 0;) {
    out = directions[k] == Direction::left ? d_left(q, schedule.leaders[k], out)
                                           : d_right(q, schedule.leaders[k], out);
  }
  return out;
}

} // namespace inru::qg

#include "inru/cipher.hpp"

#include "inru/hex.hpp"
#include "inru/quasigroup.hpp"
#include "inru/transform.hpp"

#include <algorithm>

namespace inru {

MasterKey MasterKey::from_hex(std::string_view hex)
{
  const auto n = parse_hex_nibbles(hex, 32);
  MasterKey k;
  std::copy(n.begin(), n.end(), k.nibbles.begin());
  return k;
}

std::string MasterKey::to_hex() const
{
  return nibbles_to_hex(nibbles);
}

MasterKey MasterKey::with_bit_flipped(int i) const
{
  MasterKey k = *this;
  k.nibbles[i / 4] ^= static_cast<std::uint8_t>(1u << (3 - i % 4));
  return k;
}

Diversifier Diversifier::from_hex(std::string_view hex)
{
  const auto n = parse_hex_nibbles(hex, 16);
  Diversifier v;
  std::copy(n.begin(), n.end(), v.nibbles.begin());
  return v;
}

std::string Diversifier::to_hex() const
{
  return nibbles_to_hex(nibbles);
}

std::string MixedKeyState::to_hex() const
{
  return nibbles_to_hex(nibbles);
}

MixedKeyState key_mixing(const MasterKey& key, const Diversifier& iv)
{
  const auto& q = qg::Quasigroup::inru();

  std::array<std::uint8_t, 64> s{};
  std::copy(key.nibbles.begin(), key.nibbles.end(), s.begin());
  std::copy(iv.nibbles.begin(), iv.nibbles.end(), s.begin() + 32);
  for (int j = 0; j < 16; j++) {
    s[48 + j] = static_cast<std::uint8_t>(15 - j);
  }

  MixedKeyState a;
  a.nibbles = s;
  for (int i = 1; i <= 64; i++) {
    const std::uint8_t leader = s[64 - i];
    if (i % 2 == 1) {
      qg::e_left_inplace(q, leader, a.nibbles);
    } else {
      qg::e_right_inplace(q, leader, a.nibbles);
    }
  }
  return a;
}

RoundKeys round_key_generation(const MixedKeyState& a)
{
  const auto& q = qg::Quasigroup::inru();

  constexpr std::size_t length = 16 * 34;
  std::vector<std::uint8_t> l(length);
  for (std::size_t i = 0; i < length; i++) {
    l[i] = static_cast<std::uint8_t>(i % 16);
  }
  for (int i = 1; i <= 64; i++) {
    const std::uint8_t leader = a.nibbles[i - 1];
    if (i % 2 == 1) {
      qg::e_left_inplace(q, leader, l);
    } else {
      qg::e_right_inplace(q, leader, l);
    }
  }

  RoundKeys rk;
  for (int i = 0; i < k_round_keys; i++) {
    std::array<std::uint8_t, 16> n{};
    for (int j = 0; j < 16; j++) {
      n[j] = l[32 * i + 2 * j];
    }
    rk[i] = Block::from_nibbles(n);
  }
  return rk;
}

RoundKeys expand_key(const MasterKey& key, const Diversifier& iv)
{
  return round_key_generation(key_mixing(key, iv));
}

} // namespace inru

#pragma once

#include "inru/block.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace inru {

inline constexpr int k_rounds = 16;
inline constexpr int k_round_keys = 17;

// 128-bit master key k_0..k_31.
struct MasterKey
{
  std::array<std::uint8_t, 32> nibbles{};

  static MasterKey from_hex(std::string_view hex);
  std::string to_hex() const;
  bool bit(int i) const { return (nibbles[i / 4] >> (3 - i % 4)) & 1u; }
  MasterKey with_bit_flipped(int i) const;

  friend bool operator==(const MasterKey&, const MasterKey&) = default;
};

// Public 64-bit key-schedule parameter v_0..v_15 (all-zero by default). It is
// mixed into the key schedule only and has nothing to do with mode IVs.
struct Diversifier
{
  std::array<std::uint8_t, 16> nibbles{};

  static Diversifier from_hex(std::string_view hex);
  std::string to_hex() const;

  friend bool operator==(const Diversifier&, const Diversifier&) = default;
};

// Output of key mixing, a_0..a_63.
struct MixedKeyState
{
  std::array<std::uint8_t, 64> nibbles{};

  std::string to_hex() const;
  friend bool operator==(const MixedKeyState&, const MixedKeyState&) = default;
};

struct RoundKeys
{
  std::array<Block, k_round_keys> keys{};

  const Block& operator[](std::size_t i) const { return keys[i]; }
  Block& operator[](std::size_t i) { return keys[i]; }

  friend bool operator==(const RoundKeys&, const RoundKeys&) = default;
};

// Key schedule. Both passes read their leaders from the initial strings,
// never from the evolving state.
//
//   key_mixing:           s = key || iv || f,e,...,0;  a = s
//                         pass i = 1..64: a = e_{left|right}(s_{64-i}, a)
//   round_key_generation: l = (0,1,...,15) x 34 (544 nibbles)
//                         pass i = 1..64: l = e_{left|right}(a_{i-1}, l)
//                         rk_i = l_{32i}, l_{32i+2}, ..., l_{32i+30}
//
// Odd passes use e_left, even passes e_right.
MixedKeyState key_mixing(const MasterKey& key, const Diversifier& iv);
RoundKeys round_key_generation(const MixedKeyState& a);
RoundKeys expand_key(const MasterKey& key, const Diversifier& iv = {});

// Round building blocks on the 64-bit view.
constexpr Block kxor(Block k, Block a)
{
  return Block(k.value() ^ a.value());
}

// e-transformation over (F2, xor) with leader 1 from bit 0:
// z_j = 1 ^ y_0 ^ ... ^ y_j.
constexpr Block diffuse_left(Block b)
{
  std::uint64_t z = b.value();
  z ^= z >> 1;
  z ^= z >> 2;
  z ^= z >> 4;
  z ^= z >> 8;
  z ^= z >> 16;
  z ^= z >> 32;
  return Block(~z);
}

// e-transformation over (F2, xor) with leader 0 from bit 63:
// z_j = y_j ^ ... ^ y_63.
constexpr Block diffuse_right(Block b)
{
  std::uint64_t z = b.value();
  z ^= z << 1;
  z ^= z << 2;
  z ^= z << 4;
  z ^= z << 8;
  z ^= z << 16;
  z ^= z << 32;
  return Block(z);
}

// m_0 = 1 ^ c_0, m_i = c_{i-1} ^ c_i
constexpr Block undiffuse_left(Block c)
{
  const std::uint64_t v = c.value();
  return Block(v ^ ((v >> 1) | (std::uint64_t{1} << 63)));
}

// m_63 = c_63, m_i = c_{i+1} ^ c_i
constexpr Block undiffuse_right(Block c)
{
  const std::uint64_t v = c.value();
  return Block(v ^ (v << 1));
}

// Nibble-level layers over the cipher's quasigroup.
Block confuse_left(Block b, std::uint8_t leader);
Block confuse_right(Block b, std::uint8_t leader);
Block unconfuse_left(Block b, std::uint8_t leader);
Block unconfuse_right(Block b, std::uint8_t leader);

// Leader of encryption round i (1-based): odd rounds take the first nibble
// of rk_{i-1}, even rounds the last one.
std::uint8_t round_leader(const RoundKeys& rk, int round);

// Encryption with `rounds` rounds (1..16). Round i xors rk_{i-1}, applies the
// confusion layer (e_left for odd i, e_right for even i) and then the
// diffusion layer (diffuse_right after odd rounds, diffuse_left after even
// rounds except round 16). The result is whitened with rk_rounds.
Block encrypt_block(Block m, const RoundKeys& rk, int rounds = k_rounds);

// Decryption undoes the rounds in reverse order. Decryption step i inverts
// encryption round r+1-i, so it reads its leader from the same key and the
// same end of it as that round, and uses the d-transformation running in the
// same direction: d_right where encryption used e_right, d_left where it used
// e_left. With r = 16 this is "d_right with the last nibble of rk_{16-i}" for
// odd i and "d_left with the first nibble of rk_{16-i}" for even i; any other
// choice breaks decrypt(encrypt(m)) = m.
Block decrypt_block(Block c, const RoundKeys& rk, int rounds = k_rounds);

// Intermediate values of one encryption round, for instrumentation.
struct RoundTrace
{
  int round = 0;
  std::uint8_t leader = 0;
  Block input;            // state entering the round
  Block after_key_xor;    // y
  Block after_confusion;  // z
  Block after_diffusion;  // u (equals z when the round has no diffusion)
};

struct EncryptionTrace
{
  Block plaintext;
  Block ciphertext;
  std::vector<RoundTrace> rounds;
};

EncryptionTrace encrypt_block_traced(Block m, const RoundKeys& rk, int rounds = k_rounds);

bool round_has_diffusion(int round);

// Convenience value bundling expanded keys with a round count.
class BlockCipher
{
public:
  explicit BlockCipher(const RoundKeys& rk, int rounds = k_rounds);
  BlockCipher(const MasterKey& key, const Diversifier& iv, int rounds = k_rounds);

  Block encrypt(Block m) const { return encrypt_block(m, rk_, rounds_); }
  Block decrypt(Block c) const { return decrypt_block(c, rk_, rounds_); }

  const RoundKeys& round_keys() const { return rk_; }
  int rounds() const { return rounds_; }

private:
  RoundKeys rk_;
  int rounds_;
};

} // namespace inru

#pragma once

#include "inru/block.hpp"
#include "inru/cipher.hpp"
#include "inru/stats/bit_sequence.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace inru::modes {

enum class Mode
{
  cbc,
  cfb,
  ofb,
  ctr
};

enum class Padding
{
  pkcs7,
  none
};

// Fill pattern of the message whose ciphertext forms a test sequence.
enum class Fill
{
  zeros,
  ones
};

class ModeError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class PaddingError : public ModeError
{
public:
  using ModeError::ModeError;
};

class LengthError : public ModeError
{
public:
  using ModeError::ModeError;
};

// iv seeds CBC/CFB/OFB. CTR counter blocks are nonce (bits 0..31) followed by
// a 32-bit big-endian block counter starting at 0 (bits 32..63). Padding only
// applies to CBC; CFB, OFB and CTR are stream-like with full 64-bit feedback
// and handle any length without expansion.
struct ModeConfig
{
  Mode mode = Mode::ctr;
  Block iv;
  std::uint32_t nonce = 0;
  Padding padding = Padding::pkcs7;
};

Mode parse_mode(std::string_view name);
std::string_view mode_name(Mode mode);

Block counter_block(std::uint32_t nonce, std::uint32_t counter);

std::vector<std::uint8_t> mode_encrypt(const ModeConfig& cfg,
                                       const BlockCipher& cipher,
                                       std::span<const std::uint8_t> msg);
std::vector<std::uint8_t> mode_decrypt(const ModeConfig& cfg,
                                       const BlockCipher& cipher,
                                       std::span<const std::uint8_t> ct);

inline std::vector<std::uint8_t> mode_encrypt(const ModeConfig& cfg,
                                              const RoundKeys& rk,
                                              std::span<const std::uint8_t> msg)
{
  return mode_encrypt(cfg, BlockCipher(rk), msg);
}

inline std::vector<std::uint8_t> mode_decrypt(const ModeConfig& cfg,
                                              const RoundKeys& rk,
                                              std::span<const std::uint8_t> ct)
{
  return mode_decrypt(cfg, BlockCipher(rk), ct);
}

// Ciphertext of the constant message (all-zero or all-one bytes) under the
// mode, without padding, truncated to nbits. For OFB and CTR with zeros this
// is the raw keystream. The bit order is the block packing order, byte by
// byte from the most significant bit.
std::vector<std::uint8_t> fill_sequence_bytes(const ModeConfig& cfg,
                                              const BlockCipher& cipher,
                                              std::uint64_t nbits,
                                              Fill fill);

// The same sequence as a BitSequence; nbits must be positive.
stats::BitSequence keystream(const ModeConfig& cfg,
                             const BlockCipher& cipher,
                             std::int64_t nbits,
                             Fill fill = Fill::zeros);

} // namespace inru::modes

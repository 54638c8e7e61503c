#include "inru/modes.hpp"

#include <algorithm>

namespace inru::modes {

namespace {

constexpr std::size_t k_block_bytes = 8;

Block load(std::span<const std::uint8_t> bytes, std::size_t offset)
{
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < k_block_bytes; i++) {
    v = v << 8 | bytes[offset + i];
  }
  return Block(v);
}

// Stores the first n bytes of b at out[offset..].
void store(Block b, std::vector<std::uint8_t>& out, std::size_t offset, std::size_t n = k_block_bytes)
{
  const std::uint64_t v = b.value();
  for (std::size_t i = 0; i < n; i++) {
    out[offset + i] = static_cast<std::uint8_t>(v >> (56 - 8 * i));
  }
}

// Loads a possibly partial block, zero-extended on the right.
Block load_partial(std::span<const std::uint8_t> bytes, std::size_t offset)
{
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < k_block_bytes; i++) {
    const std::uint8_t b = offset + i < bytes.size() ? bytes[offset + i] : 0;
    v = v << 8 | b;
  }
  return Block(v);
}

std::size_t block_count(std::size_t bytes)
{
  return (bytes + k_block_bytes - 1) / k_block_bytes;
}

void check_ctr_length(std::size_t bytes)
{
  if (block_count(bytes) > (std::uint64_t{1} << 32)) {
    throw LengthError("CTR message longer than 2^32 blocks");
  }
}

// CFB/OFB/CTR share the same shape: keystream block i xored into data block i.
// For CFB the feedback depends on the ciphertext, which is `out` when
// encrypting and `in` when decrypting.
std::vector<std::uint8_t> stream_mode(const ModeConfig& cfg,
                                      const BlockCipher& cipher,
                                      std::span<const std::uint8_t> in,
                                      bool encrypting)
{
  std::vector<std::uint8_t> out(in.size());
  if (cfg.mode == Mode::ctr) {
    check_ctr_length(in.size());
  }
  Block feedback = cfg.iv;
  for (std::size_t blk = 0, off = 0; off < in.size(); blk++, off += k_block_bytes) {
    const std::size_t n = std::min(k_block_bytes, in.size() - off);
    Block ks;
    switch (cfg.mode) {
      case Mode::ctr:
        ks = cipher.encrypt(counter_block(cfg.nonce, static_cast<std::uint32_t>(blk)));
        break;
      case Mode::ofb:
        feedback = cipher.encrypt(feedback);
        ks = feedback;
        break;
      case Mode::cfb:
        ks = cipher.encrypt(feedback);
        break;
      case Mode::cbc:
        throw ModeError("CBC is not a stream mode");
    }
    const Block data = load_partial(in, off);
    const Block result = kxor(ks, data);
    store(result, out, off, n);
    if (cfg.mode == Mode::cfb) {
      feedback = encrypting ? result : data;
    }
  }
  return out;
}

} // namespace

Mode parse_mode(std::string_view name)
{
  if (name == "cbc") {
    return Mode::cbc;
  }
  if (name == "cfb") {
    return Mode::cfb;
  }
  if (name == "ofb") {
    return Mode::ofb;
  }
  if (name == "ctr") {
    return Mode::ctr;
  }
  throw std::invalid_argument("unknown mode '" + std::string(name) + "'");
}

std::string_view mode_name(Mode mode)
{
  switch (mode) {
    case Mode::cbc:
      return "cbc";
    case Mode::cfb:
      return "cfb";
    case Mode::ofb:
      return "ofb";
    case Mode::ctr:
      return "ctr";
  }
  return "?";
}

Block counter_block(std::uint32_t nonce, std::uint32_t counter)
{
  return Block(std::uint64_t{nonce} << 32 | counter);
}

std::vector<std::uint8_t> mode_encrypt(const ModeConfig& cfg,
                                       const BlockCipher& cipher,
                                       std::span<const std::uint8_t> msg)
{
  if (cfg.mode != Mode::cbc) {
    return stream_mode(cfg, cipher, msg, true);
  }

  std::vector<std::uint8_t> padded(msg.begin(), msg.end());
  if (cfg.padding == Padding::pkcs7) {
    const std::size_t pad = k_block_bytes - msg.size() % k_block_bytes;
    padded.insert(padded.end(), pad, static_cast<std::uint8_t>(pad));
  } else if (msg.size() % k_block_bytes != 0) {
    throw LengthError("CBC without padding needs a multiple of 8 bytes");
  }

  std::vector<std::uint8_t> out(padded.size());
  Block chain = cfg.iv;
  for (std::size_t off = 0; off < padded.size(); off += k_block_bytes) {
    chain = cipher.encrypt(kxor(chain, load(padded, off)));
    store(chain, out, off);
  }
  return out;
}

std::vector<std::uint8_t> mode_decrypt(const ModeConfig& cfg,
                                       const BlockCipher& cipher,
                                       std::span<const std::uint8_t> ct)
{
  if (cfg.mode != Mode::cbc) {
    return stream_mode(cfg, cipher, ct, false);
  }

  if (ct.size() % k_block_bytes != 0) {
    throw LengthError("CBC ciphertext length is not a multiple of 8 bytes");
  }
  std::vector<std::uint8_t> out(ct.size());
  Block chain = cfg.iv;
  for (std::size_t off = 0; off < ct.size(); off += k_block_bytes) {
    const Block c = load(ct, off);
    store(kxor(chain, cipher.decrypt(c)), out, off);
    chain = c;
  }
  if (cfg.padding == Padding::pkcs7) {
    if (out.empty()) {
      throw PaddingError("empty CBC ciphertext has no padding block");
    }
    const std::uint8_t pad = out.back();
    if (pad == 0 || pad > k_block_bytes) {
      throw PaddingError("invalid padding length byte");
    }
    for (std::size_t i = out.size() - pad; i < out.size(); i++) {
      if (out[i] != pad) {
        throw PaddingError("inconsistent padding bytes");
      }
    }
    out.resize(out.size() - pad);
  }
  return out;
}

std::vector<std::uint8_t> fill_sequence_bytes(const ModeConfig& cfg,
                                              const BlockCipher& cipher,
                                              std::uint64_t nbits,
                                              Fill fill)
{
  if (nbits == 0) {
    throw std::invalid_argument("sequence length must be positive");
  }
  const std::size_t nbytes = static_cast<std::size_t>((nbits + 7) / 8);
  const std::size_t whole = block_count(nbytes) * k_block_bytes;
  const std::vector<std::uint8_t> msg(whole, fill == Fill::zeros ? 0x00 : 0xff);
  ModeConfig raw = cfg;
  raw.padding = Padding::none;
  auto out = mode_encrypt(raw, cipher, msg);
  out.resize(nbytes);
  if (nbits % 8 != 0) {
    out.back() &= static_cast<std::uint8_t>(0xff << (8 - nbits % 8));
  }
  return out;
}

stats::BitSequence keystream(const ModeConfig& cfg,
                             const BlockCipher& cipher,
                             std::int64_t nbits,
                             Fill fill)
{
  if (nbits <= 0) {
    throw std::invalid_argument("sequence length must be positive");
  }
  const auto n = static_cast<std::uint64_t>(nbits);
  return stats::BitSequence::from_bytes(fill_sequence_bytes(cfg, cipher, n, fill), n);
}

} // namespace inru::modes

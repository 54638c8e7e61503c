#include "inru/cipher.hpp"

#include "inru/quasigroup.hpp"

#include <stdexcept>

namespace inru {

namespace {

const std::uint8_t* mul_table()
{
  static const std::uint8_t* const table = qg::Quasigroup::inru().mul_table().data();
  return table;
}

const std::uint8_t* ldiv_table()
{
  static const std::uint8_t* const table = qg::Quasigroup::inru().ldiv_table().data();
  return table;
}

void check_rounds(int rounds)
{
  if (rounds < 1 || rounds > k_rounds) {
    throw std::invalid_argument("round count must be in 1..16");
  }
}

} // namespace

Block confuse_left(Block b, std::uint8_t leader)
{
  const auto* mul = mul_table();
  const std::uint64_t v = b.value();
  std::uint64_t out = 0;
  unsigned prev = leader;
  for (int shift = 60; shift >= 0; shift -= 4) {
    prev = mul[prev << 4 | ((v >> shift) & 0xf)];
    out |= std::uint64_t{prev} << shift;
  }
  return Block(out);
}

Block confuse_right(Block b, std::uint8_t leader)
{
  const auto* mul = mul_table();
  const std::uint64_t v = b.value();
  std::uint64_t out = 0;
  unsigned prev = leader;
  for (int shift = 0; shift <= 60; shift += 4) {
    prev = mul[prev << 4 | ((v >> shift) & 0xf)];
    out |= std::uint64_t{prev} << shift;
  }
  return Block(out);
}

Block unconfuse_left(Block b, std::uint8_t leader)
{
  const auto* ldiv = ldiv_table();
  const std::uint64_t v = b.value();
  std::uint64_t out = 0;
  unsigned prev = leader;
  for (int shift = 60; shift >= 0; shift -= 4) {
    const unsigned cur = (v >> shift) & 0xf;
    out |= std::uint64_t{ldiv[prev << 4 | cur]} << shift;
    prev = cur;
  }
  return Block(out);
}

Block unconfuse_right(Block b, std::uint8_t leader)
{
  const auto* ldiv = ldiv_table();
  const std::uint64_t v = b.value();
  std::uint64_t out = 0;
  unsigned prev = leader;
  for (int shift = 0; shift <= 60; shift += 4) {
    const unsigned cur = (v >> shift) & 0xf;
    out |= std::uint64_t{ldiv[prev << 4 | cur]} << shift;
    prev = cur;
  }
  return Block(out);
}

std::uint8_t round_leader(const RoundKeys& rk, int round)
{
  const Block& k = rk[round - 1];
  return round % 2 == 1 ? k.nibble(0) : k.nibble(15);
}

bool round_has_diffusion(int round)
{
  return round != k_rounds;
}

Block encrypt_block(Block m, const RoundKeys& rk, int rounds)
{
  check_rounds(rounds);
  Block c = m;
  for (int i = 1; i <= rounds; i++) {
    c = kxor(rk[i - 1], c);
    if (i % 2 == 1) {
      c = diffuse_right(confuse_left(c, rk[i - 1].nibble(0)));
    } else {
      c = confuse_right(c, rk[i - 1].nibble(15));
      if (i != k_rounds) {
        c = diffuse_left(c);
      }
    }
  }
  return kxor(rk[rounds], c);
}

Block decrypt_block(Block c, const RoundKeys& rk, int rounds)
{
  check_rounds(rounds);
  Block m = kxor(rk[rounds], c);
  for (int i = rounds; i >= 1; i--) {
    if (i % 2 == 1) {
      m = unconfuse_left(undiffuse_right(m), rk[i - 1].nibble(0));
    } else {
      if (i != k_rounds) {
        m = undiffuse_left(m);
      }
      m = unconfuse_right(m, rk[i - 1].nibble(15));
    }
    m = kxor(rk[i - 1], m);
  }
  return m;
}

EncryptionTrace encrypt_block_traced(Block m, const RoundKeys& rk, int rounds)
{
  check_rounds(rounds);
  EncryptionTrace trace;
  trace.plaintext = m;
  Block c = m;
  for (int i = 1; i <= rounds; i++) {
    RoundTrace rt;
    rt.round = i;
    rt.leader = round_leader(rk, i);
    rt.input = c;
    rt.after_key_xor = kxor(rk[i - 1], c);
    if (i % 2 == 1) {
      rt.after_confusion = confuse_left(rt.after_key_xor, rt.leader);
      rt.after_diffusion = diffuse_right(rt.after_confusion);
    } else {
      rt.after_confusion = confuse_right(rt.after_key_xor, rt.leader);
      rt.after_diffusion =
        round_has_diffusion(i) ? diffuse_left(rt.after_confusion) : rt.after_confusion;
    }
    c = rt.after_diffusion;
    trace.rounds.push_back(rt);
  }
  trace.ciphertext = kxor(rk[rounds], c);
  return trace;
}

BlockCipher::BlockCipher(const RoundKeys& rk, int rounds)
  : rk_(rk)
  , rounds_(rounds)
{
  check_rounds(rounds);
}

BlockCipher::BlockCipher(const MasterKey& key, const Diversifier& iv, int rounds)
  : BlockCipher(expand_key(key, iv), rounds)
{}

} // namespace inru

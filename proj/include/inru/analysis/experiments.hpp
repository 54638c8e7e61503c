#pragma once

#include "inru/block.hpp"
#include "inru/cipher.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace inru::analysis {

// Randomised experiments on the cipher. Each one is deterministic for a given
// seed, whatever the job count: work is cut into fixed chunks, every chunk
// draws from its own generator (see random.hpp), and results are summed in
// chunk order.

struct Range
{
  double low = 0.0;
  double high = 0.0;

  bool contains(double v) const { return low <= v && v <= high; }
};

// Central interval holding `coverage` of the sorted values (linear
// interpolation between order statistics). values must be non-empty.
Range central_range(std::vector<double> values, double coverage);

// ---------------------------------------------------------------- differences

struct DiffPropagationResult
{
  int rounds = 0;
  Block delta;
  std::uint64_t trials = 0;
  // [round - 1][position]: trials in which the Sbox at that position had a
  // nonzero input difference on (chain nibble, data nibble); this is the
  // activation count.
  std::vector<std::array<std::uint64_t, 16>> active;
  // [round - 1][position]: trials with a nonzero output nibble difference.
  std::vector<std::array<std::uint64_t, 16>> output_nonzero;

  double activation(int round, int position) const;
  double output_frequency(int round, int position) const;
};

// Encrypts pairs (m, m ^ delta) under fresh random master keys (zero
// diversifier) through a `rounds`-round cipher and records which Sboxes see a
// difference. Throws std::invalid_argument for delta = 0, rounds outside
// 1..16 or trials = 0.
DiffPropagationResult diff_propagation_experiment(int rounds,
                                                  Block delta,
                                                  std::uint64_t trials,
                                                  std::uint64_t seed = 1,
                                                  int jobs = 1);

std::string render_diff_propagation(const DiffPropagationResult& r);

// ----------------------------------------------------------------- avalanche

struct AvalancheSummary
{
  double mean = 0.0;  // percent
  Range range95;
  Range range98;
  Range range99;
};

// One experiment is one random plaintext under one key: the 64 single-bit
// flips of the plaintext are applied in turn and the percentage of flipped
// ciphertext bits is averaged over them. The summary ranges are taken over
// all trials * keys experiments.
struct AvalancheReport
{
  std::uint64_t trials = 0;
  int keys = 0;
  int rounds = k_rounds;
  std::array<double, 64> per_bit{};  // mean flip percent when plaintext bit i flips
  AvalancheSummary summary;
};

AvalancheReport avalanche_plaintext(std::uint64_t trials,
                                    int keys,
                                    std::uint64_t seed = 1,
                                    int jobs = 1,
                                    int rounds = k_rounds);

// entry (i, j) is the frequency with which ciphertext bit j flips when
// plaintext bit i flips; the summary ranges (in percent) run over all 4096
// entries.
struct SacReport
{
  std::uint64_t trials = 0;
  int keys = 0;
  int rounds = k_rounds;
  std::vector<double> matrix;  // row-major 64 x 64

  double at(int i, int j) const { return matrix[static_cast<std::size_t>(i * 64 + j)]; }
  AvalancheSummary summary;
};

SacReport sac_matrix(std::uint64_t trials,
                     int keys,
                     std::uint64_t seed = 1,
                     int jobs = 1,
                     int rounds = k_rounds);

// For every master-key bit, flip it and compare the 17 round keys and the
// ciphertext of a random plaintext with those of the original key.
struct KeyBitStats
{
  std::uint64_t min_round_key_flips = 0;  // over trials, out of 17 * 64 bits
  std::uint64_t trials_round_keys_unchanged = 0;
  std::uint64_t trials_ciphertext_unchanged = 0;
  double mean_round_key_percent = 0.0;
  double mean_ciphertext_percent = 0.0;
};

struct KeyAvalancheReport
{
  std::uint64_t trials = 0;
  std::array<KeyBitStats, 128> bits{};
  double mean_ciphertext_percent = 0.0;
  double mean_round_key_percent = 0.0;
};

KeyAvalancheReport avalanche_key(std::uint64_t trials, std::uint64_t seed = 1, int jobs = 1);

std::string render_avalanche(const AvalancheReport& r);
std::string render_sac(const SacReport& r);
std::string render_key_avalanche(const KeyAvalancheReport& r);

} // namespace inru::analysis

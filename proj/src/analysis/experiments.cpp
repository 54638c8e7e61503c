#include "inru/analysis/experiments.hpp"

#include "inru/random.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace inru::analysis {

namespace {

constexpr std::uint64_t k_chunk = 64;

// Generator streams: chunk c of key k draws from stream (k << 32 | c); the key
// itself from stream (1 << 63 | k), so the two never collide.
constexpr std::uint64_t key_stream(std::uint64_t k)
{
  return std::uint64_t{1} << 63 | k;
}

MasterKey random_key(std::mt19937_64& rng)
{
  MasterKey key;
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < key.nibbles.size(); i++) {
    if (i % 16 == 0) {
      bits = rng();
    }
    key.nibbles[i] = static_cast<std::uint8_t>(bits & 0xf);
    bits >>= 4;
  }
  return key;
}

std::uint64_t chunks_for(std::uint64_t trials)
{
  return (trials + k_chunk - 1) / k_chunk;
}

void check_rounds(int rounds)
{
  if (rounds < 1 || rounds > k_rounds) {
    throw std::invalid_argument("rounds must be in 1..16");
  }
}

std::string format_range(const Range& r)
{
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << '(' << r.low << ", " << r.high << ')';
  return out.str();
}

struct AvalancheData
{
  std::vector<double> experiment_percent;  // key-major, then trial
  std::array<std::uint64_t, 64> flips_per_bit{};
  std::vector<std::uint64_t> sac;  // 64 x 64 when requested
};

AvalancheData run_avalanche(std::uint64_t trials,
                            int keys,
                            std::uint64_t seed,
                            int jobs,
                            int rounds,
                            bool want_sac)
{
  if (trials == 0 || keys < 1) {
    throw std::invalid_argument("avalanche needs trials >= 1 and keys >= 1");
  }
  check_rounds(rounds);
  const std::uint64_t chunks = chunks_for(trials);
  const std::size_t items = static_cast<std::size_t>(chunks * static_cast<std::uint64_t>(keys));

  std::vector<RoundKeys> round_keys(static_cast<std::size_t>(keys));
  for (int k = 0; k < keys; k++) {
    auto rng = make_rng(seed, key_stream(static_cast<std::uint64_t>(k)));
    round_keys[static_cast<std::size_t>(k)] = expand_key(random_key(rng));
  }

  AvalancheData data;
  data.experiment_percent.resize(static_cast<std::size_t>(trials) * static_cast<std::size_t>(keys));
  std::vector<std::array<std::uint64_t, 64>> per_item_bits(items);
  std::vector<std::vector<std::uint64_t>> per_item_sac(items);

  parallel_for(items, jobs, [&](std::size_t item) {
    const std::uint64_t k = item / chunks;
    const std::uint64_t c = item % chunks;
    auto rng = make_rng(seed, k << 32 | c);
    const RoundKeys& rk = round_keys[static_cast<std::size_t>(k)];
    auto& bits = per_item_bits[item];
    auto& sac = per_item_sac[item];
    if (want_sac) {
      sac.assign(64 * 64, 0);
    }
    const std::uint64_t end = std::min(trials, (c + 1) * k_chunk);
    for (std::uint64_t t = c * k_chunk; t < end; t++) {
      const Block m(rng());
      const std::uint64_t base = encrypt_block(m, rk, rounds).value();
      std::uint64_t total = 0;
      for (int i = 0; i < 64; i++) {
        std::uint64_t diff = base ^ encrypt_block(m.with_bit_flipped(i), rk, rounds).value();
        const int flipped = std::popcount(diff);
        total += static_cast<std::uint64_t>(flipped);
        bits[static_cast<std::size_t>(i)] += static_cast<std::uint64_t>(flipped);
        if (want_sac) {
          while (diff) {
            const int j = 63 - std::countr_zero(diff);  // bit index, MSB = bit 0
            sac[static_cast<std::size_t>(i * 64 + j)]++;
            diff &= diff - 1;
          }
        }
      }
      data.experiment_percent[static_cast<std::size_t>(k * trials + t)] =
        100.0 * static_cast<double>(total) / (64.0 * 64.0);
    }
  });

  if (want_sac) {
    data.sac.assign(64 * 64, 0);
  }
  for (std::size_t item = 0; item < items; item++) {
    for (std::size_t i = 0; i < 64; i++) {
      data.flips_per_bit[i] += per_item_bits[item][i];
    }
    for (std::size_t e = 0; e < data.sac.size(); e++) {
      data.sac[e] += per_item_sac[item][e];
    }
  }
  return data;
}

AvalancheSummary summarize(const std::vector<double>& values)
{
  AvalancheSummary s;
  double sum = 0.0;
  for (double v : values) {
    sum += v;
  }
  s.mean = sum / static_cast<double>(values.size());
  s.range95 = central_range(values, 0.95);
  s.range98 = central_range(values, 0.98);
  s.range99 = central_range(values, 0.99);
  return s;
}

void render_summary(std::ostringstream& out, const AvalancheSummary& s)
{
  out << "mean " << std::fixed << std::setprecision(3) << s.mean << "%\n";
  out << "95% range " << format_range(s.range95) << '\n';
  out << "98% range " << format_range(s.range98) << '\n';
  out << "99% range " << format_range(s.range99) << '\n';
}

} // namespace

Range central_range(std::vector<double> values, double coverage)
{
  if (values.empty()) {
    throw std::invalid_argument("central_range of an empty sample");
  }
  if (!(coverage > 0.0 && coverage <= 1.0)) {
    throw std::invalid_argument("coverage must lie in (0, 1]");
  }
  std::sort(values.begin(), values.end());
  const auto quantile = [&](double p) {
    const double pos = p * static_cast<double>(values.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return values[lo] + frac * (values[hi] - values[lo]);
  };
  const double tail = (1.0 - coverage) / 2.0;
  return {quantile(tail), quantile(1.0 - tail)};
}

double DiffPropagationResult::activation(int round, int position) const
{
  return static_cast<double>(active.at(static_cast<std::size_t>(round - 1))
                               .at(static_cast<std::size_t>(position))) /
         static_cast<double>(trials);
}

double DiffPropagationResult::output_frequency(int round, int position) const
{
  return static_cast<double>(output_nonzero.at(static_cast<std::size_t>(round - 1))
                               .at(static_cast<std::size_t>(position))) /
         static_cast<double>(trials);
}

DiffPropagationResult diff_propagation_experiment(int rounds,
                                                  Block delta,
                                                  std::uint64_t trials,
                                                  std::uint64_t seed,
                                                  int jobs)
{
  check_rounds(rounds);
  if (delta.value() == 0) {
    throw std::invalid_argument("input difference must be nonzero");
  }
  if (trials == 0) {
    throw std::invalid_argument("trials must be >= 1");
  }
  using Counts = std::vector<std::array<std::uint64_t, 16>>;
  const std::uint64_t chunks = chunks_for(trials);
  std::vector<Counts> item_active(chunks, Counts(static_cast<std::size_t>(rounds)));
  std::vector<Counts> item_output(chunks, Counts(static_cast<std::size_t>(rounds)));

  parallel_for(static_cast<std::size_t>(chunks), jobs, [&](std::size_t c) {
    auto rng = make_rng(seed, c);
    const std::uint64_t end = std::min<std::uint64_t>(trials, (c + 1) * k_chunk);
    for (std::uint64_t t = c * k_chunk; t < end; t++) {
      const RoundKeys rk = expand_key(random_key(rng));
      const Block m(rng());
      const auto a = encrypt_block_traced(m, rk, rounds);
      const auto b = encrypt_block_traced(Block(m.value() ^ delta.value()), rk, rounds);
      for (int r = 0; r < rounds; r++) {
        const RoundTrace& ra = a.rounds[static_cast<std::size_t>(r)];
        const RoundTrace& rb = b.rounds[static_cast<std::size_t>(r)];
        const bool left = (r + 1) % 2 == 1;
        for (int p = 0; p < 16; p++) {
          const bool data_diff = ra.after_key_xor.nibble(p) != rb.after_key_xor.nibble(p);
          // chain input: the leader at the start of the chain (same key, so
          // no difference), otherwise the previous output nibble
          const int prev = left ? p - 1 : p + 1;
          const bool chain_diff = prev >= 0 && prev < 16 &&
                                  ra.after_confusion.nibble(prev) != rb.after_confusion.nibble(prev);
          const bool out_diff = ra.after_confusion.nibble(p) != rb.after_confusion.nibble(p);
          item_active[c][static_cast<std::size_t>(r)][static_cast<std::size_t>(p)] +=
            data_diff || chain_diff;
          item_output[c][static_cast<std::size_t>(r)][static_cast<std::size_t>(p)] += out_diff;
        }
      }
    }
  });

  DiffPropagationResult result;
  result.rounds = rounds;
  result.delta = delta;
  result.trials = trials;
  result.active.assign(static_cast<std::size_t>(rounds), {});
  result.output_nonzero.assign(static_cast<std::size_t>(rounds), {});
  for (std::size_t c = 0; c < chunks; c++) {
    for (std::size_t r = 0; r < static_cast<std::size_t>(rounds); r++) {
      for (std::size_t p = 0; p < 16; p++) {
        result.active[r][p] += item_active[c][r][p];
        result.output_nonzero[r][p] += item_output[c][r][p];
      }
    }
  }
  return result;
}

std::string render_diff_propagation(const DiffPropagationResult& r)
{
  std::ostringstream out;
  out << "# difference propagation: delta " << r.delta.to_hex() << ", " << r.rounds
      << " rounds, " << r.trials << " trials\n";
  out << "# active = nonzero difference on the Sbox input (chain nibble, data nibble)\n";
  out << "# columns: round position active_freq output_diff_freq\n";
  out << std::fixed << std::setprecision(4);
  for (int round = 1; round <= r.rounds; round++) {
    int all = 0;
    for (int p = 0; p < 16; p++) {
      out << round << ' ' << p << ' ' << r.activation(round, p) << ' '
          << r.output_frequency(round, p) << '\n';
      all += r.active[static_cast<std::size_t>(round - 1)][static_cast<std::size_t>(p)] == r.trials;
    }
    out << "# round " << round << ": " << all << "/16 positions active in every trial\n";
  }
  return out.str();
}

AvalancheReport avalanche_plaintext(std::uint64_t trials,
                                    int keys,
                                    std::uint64_t seed,
                                    int jobs,
                                    int rounds)
{
  const AvalancheData data = run_avalanche(trials, keys, seed, jobs, rounds, false);
  AvalancheReport report;
  report.trials = trials;
  report.keys = keys;
  report.rounds = rounds;
  const double experiments = static_cast<double>(trials) * keys;
  for (std::size_t i = 0; i < 64; i++) {
    report.per_bit[i] = 100.0 * static_cast<double>(data.flips_per_bit[i]) / (64.0 * experiments);
  }
  report.summary = summarize(data.experiment_percent);
  return report;
}

SacReport sac_matrix(std::uint64_t trials, int keys, std::uint64_t seed, int jobs, int rounds)
{
  const AvalancheData data = run_avalanche(trials, keys, seed, jobs, rounds, true);
  SacReport report;
  report.trials = trials;
  report.keys = keys;
  report.rounds = rounds;
  const double experiments = static_cast<double>(trials) * keys;
  report.matrix.resize(64 * 64);
  std::vector<double> percent(64 * 64);
  for (std::size_t e = 0; e < report.matrix.size(); e++) {
    report.matrix[e] = static_cast<double>(data.sac[e]) / experiments;
    percent[e] = 100.0 * report.matrix[e];
  }
  report.summary = summarize(percent);
  return report;
}

KeyAvalancheReport avalanche_key(std::uint64_t trials, std::uint64_t seed, int jobs)
{
  if (trials == 0) {
    throw std::invalid_argument("trials must be >= 1");
  }
  struct Partial
  {
    std::array<std::uint64_t, 128> min_rk;
    std::array<std::uint64_t, 128> rk_unchanged{};
    std::array<std::uint64_t, 128> ct_unchanged{};
    std::array<std::uint64_t, 128> rk_flips{};
    std::array<std::uint64_t, 128> ct_flips{};
  };
  const std::uint64_t chunks = chunks_for(trials);
  std::vector<Partial> partial(chunks);

  parallel_for(static_cast<std::size_t>(chunks), jobs, [&](std::size_t c) {
    Partial& p = partial[c];
    p.min_rk.fill(~std::uint64_t{0});
    auto rng = make_rng(seed, c);
    const std::uint64_t end = std::min<std::uint64_t>(trials, (c + 1) * k_chunk);
    for (std::uint64_t t = c * k_chunk; t < end; t++) {
      const MasterKey key = random_key(rng);
      const Block m(rng());
      const RoundKeys rk = expand_key(key);
      const std::uint64_t ct = encrypt_block(m, rk).value();
      for (std::size_t b = 0; b < 128; b++) {
        const RoundKeys rk2 = expand_key(key.with_bit_flipped(static_cast<int>(b)));
        std::uint64_t rk_flips = 0;
        for (std::size_t i = 0; i < rk.keys.size(); i++) {
          rk_flips += static_cast<std::uint64_t>(std::popcount(rk[i].value() ^ rk2[i].value()));
        }
        const auto ct_flips =
          static_cast<std::uint64_t>(std::popcount(ct ^ encrypt_block(m, rk2).value()));
        p.min_rk[b] = std::min(p.min_rk[b], rk_flips);
        p.rk_unchanged[b] += rk_flips == 0;
        p.ct_unchanged[b] += ct_flips == 0;
        p.rk_flips[b] += rk_flips;
        p.ct_flips[b] += ct_flips;
      }
    }
  });

  KeyAvalancheReport report;
  report.trials = trials;
  const double n = static_cast<double>(trials);
  double rk_total = 0.0;
  double ct_total = 0.0;
  for (std::size_t b = 0; b < 128; b++) {
    KeyBitStats& s = report.bits[b];
    s.min_round_key_flips = ~std::uint64_t{0};
    std::uint64_t rk_flips = 0;
    std::uint64_t ct_flips = 0;
    for (const Partial& p : partial) {
      s.min_round_key_flips = std::min(s.min_round_key_flips, p.min_rk[b]);
      s.trials_round_keys_unchanged += p.rk_unchanged[b];
      s.trials_ciphertext_unchanged += p.ct_unchanged[b];
      rk_flips += p.rk_flips[b];
      ct_flips += p.ct_flips[b];
    }
    s.mean_round_key_percent = 100.0 * static_cast<double>(rk_flips) / (n * 64.0 * k_round_keys);
    s.mean_ciphertext_percent = 100.0 * static_cast<double>(ct_flips) / (n * 64.0);
    rk_total += s.mean_round_key_percent;
    ct_total += s.mean_ciphertext_percent;
  }
  report.mean_round_key_percent = rk_total / 128.0;
  report.mean_ciphertext_percent = ct_total / 128.0;
  return report;
}

std::string render_avalanche(const AvalancheReport& r)
{
  std::ostringstream out;
  out << "# plaintext avalanche: " << r.trials << " plaintexts x " << r.keys << " keys, " << r.rounds
      << " rounds\n";
  out << "# ranges are central intervals of the per-plaintext flip percentage\n";
  render_summary(out, r.summary);
  out << "# per plaintext bit: bit mean_flip_percent\n";
  for (std::size_t i = 0; i < 64; i++) {
    out << i << ' ' << std::setprecision(3) << r.per_bit[i] << '\n';
  }
  return out.str();
}

std::string render_sac(const SacReport& r)
{
  std::ostringstream out;
  out << "# strict avalanche: " << r.trials << " plaintexts x " << r.keys << " keys, " << r.rounds
      << " rounds\n";
  out << "# entry (i, j): frequency ciphertext bit j flips when plaintext bit i flips\n";
  out << "# ranges are central intervals over all 4096 entries (percent)\n";
  render_summary(out, r.summary);
  out << std::setprecision(4);
  for (int i = 0; i < 64; i++) {
    for (int j = 0; j < 64; j++) {
      out << (j ? " " : "") << r.at(i, j);
    }
    out << '\n';
  }
  return out.str();
}

std::string render_key_avalanche(const KeyAvalancheReport& r)
{
  std::ostringstream out;
  out << "# master-key avalanche: " << r.trials << " random keys and plaintexts\n";
  out << std::fixed << std::setprecision(3);
  out << "mean round-key flip " << r.mean_round_key_percent << "%\n";
  out << "mean ciphertext flip " << r.mean_ciphertext_percent << "%\n";
  std::uint64_t rk_unchanged = 0;
  std::uint64_t ct_unchanged = 0;
  for (const auto& s : r.bits) {
    rk_unchanged += s.trials_round_keys_unchanged;
    ct_unchanged += s.trials_ciphertext_unchanged;
  }
  out << "flips leaving all round keys unchanged " << rk_unchanged << '\n';
  out << "flips leaving the ciphertext unchanged " << ct_unchanged << '\n';
  out << "# per key bit: bit min_round_key_bits rk_percent ct_percent\n";
  for (std::size_t b = 0; b < r.bits.size(); b++) {
    const auto& s = r.bits[b];
    out << b << ' ' << s.min_round_key_flips << ' ' << s.mean_round_key_percent << ' '
        << s.mean_ciphertext_percent << '\n';
  }
  return out.str();
}

} // namespace inru::analysis

#include "inru/stats/nist_tests.hpp"

#include "inru/stats/special_functions.hpp"

#include <fftw3.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <memory>
#include <mutex>
#include <sstream>

namespace inru::stats {

namespace {

void require_length(const BitSequence& s, std::size_t minimum, const char* test)
{
  if (s.size() < minimum) {
    throw SequenceTooShort(std::string(test) + " needs at least " + std::to_string(minimum) +
                           " bits, got " + std::to_string(s.size()));
  }
}

// Counts of every overlapping m-bit pattern, the sequence wrapped around by
// m-1 bits. Patterns are read MSB first.
std::vector<std::uint32_t> pattern_counts(const std::vector<std::uint8_t>& bits, int m)
{
  std::vector<std::uint32_t> counts(std::size_t{1} << m, 0);
  if (m == 0) {
    return counts;
  }
  const std::size_t n = bits.size();
  const std::uint32_t mask = (1u << m) - 1;
  std::uint32_t window = 0;
  for (int i = 0; i < m - 1; i++) {
    window = (window << 1 | bits[static_cast<std::size_t>(i) % n]) & mask;
  }
  for (std::size_t i = 0; i < n; i++) {
    window = (window << 1 | bits[(i + static_cast<std::size_t>(m) - 1) % n]) & mask;
    counts[window]++;
  }
  return counts;
}

double psi_squared(const std::vector<std::uint8_t>& bits, int m)
{
  if (m <= 0) {
    return 0.0;
  }
  const auto counts = pattern_counts(bits, m);
  const double n = static_cast<double>(bits.size());
  double sum = 0.0;
  for (auto c : counts) {
    sum += static_cast<double>(c) * static_cast<double>(c);
  }
  return std::ldexp(sum, m) / n - n;
}

double apen_phi(const std::vector<std::uint8_t>& bits, int m)
{
  if (m <= 0) {
    return 0.0;
  }
  const auto counts = pattern_counts(bits, m);
  const double n = static_cast<double>(bits.size());
  double sum = 0.0;
  for (auto c : counts) {
    if (c != 0) {
      const double p = c / n;
      sum += p * std::log(p);
    }
  }
  return sum;
}

double chi_square_p(const std::vector<std::uint32_t>& observed,
                    std::span<const double> probabilities,
                    double total)
{
  double chi = 0.0;
  for (std::size_t i = 0; i < observed.size(); i++) {
    const double expected = total * probabilities[i];
    const double diff = observed[i] - expected;
    chi += diff * diff / expected;
  }
  return igamc(static_cast<double>(observed.size() - 1) / 2.0, chi / 2.0);
}

// Probability that a random rows x cols GF(2) matrix has rank r.
double rank_probability(int r, int rows, int cols)
{
  double product = 1.0;
  for (int i = 0; i < r; i++) {
    product *= (1.0 - std::ldexp(1.0, i - rows)) * (1.0 - std::ldexp(1.0, i - cols)) /
               (1.0 - std::ldexp(1.0, i - r));
  }
  return std::ldexp(product, r * (rows + cols - r) - rows * cols);
}

std::mutex& fftw_planner_mutex()
{
  static std::mutex m;
  return m;
}

} // namespace

std::string_view test_abbreviation(TestId id)
{
  switch (id) {
    case TestId::approximate_entropy:
      return "AE";
    case TestId::block_frequency:
      return "BF";
    case TestId::cusum_forward:
      return "CSF";
    case TestId::cusum_backward:
      return "CSB";
    case TestId::dft_spectral:
      return "DFT";
    case TestId::frequency:
      return "Freq";
    case TestId::longest_run:
      return "LRO";
    case TestId::matrix_rank:
      return "Rank";
    case TestId::runs:
      return "Run";
    case TestId::serial:
      return "Srl";
  }
  return "?";
}

std::string_view test_name(TestId id)
{
  switch (id) {
    case TestId::approximate_entropy:
      return "Approximate Entropy";
    case TestId::block_frequency:
      return "Block Frequency";
    case TestId::cusum_forward:
      return "Cumulative Sum Forward";
    case TestId::cusum_backward:
      return "Cumulative Sum Backward";
    case TestId::dft_spectral:
      return "Discrete Fourier Transform";
    case TestId::frequency:
      return "Frequency";
    case TestId::longest_run:
      return "Longest Run of Ones in a Block";
    case TestId::matrix_rank:
      return "Binary Matrix Rank";
    case TestId::runs:
      return "Runs";
    case TestId::serial:
      return "Serial";
  }
  return "?";
}

double frequency_test(const BitSequence& s)
{
  require_length(s, 100, "frequency test");
  const double n = static_cast<double>(s.size());
  const double sum = 2.0 * static_cast<double>(s.count_ones()) - n;
  return std::erfc(std::fabs(sum) / std::sqrt(n) / std::sqrt(2.0));
}

double block_frequency_test(const BitSequence& s, int block_size)
{
  if (block_size < 2) {
    throw std::invalid_argument("block frequency block size must be >= 2");
  }
  require_length(s, std::max<std::size_t>(100, static_cast<std::size_t>(block_size)),
                 "block frequency test");
  const std::size_t m = static_cast<std::size_t>(block_size);
  const std::size_t blocks = s.size() / m;
  double chi = 0.0;
  for (std::size_t b = 0; b < blocks; b++) {
    std::size_t ones = 0;
    for (std::size_t j = 0; j < m; j++) {
      ones += s[b * m + j];
    }
    const double pi = static_cast<double>(ones) / static_cast<double>(m) - 0.5;
    chi += pi * pi;
  }
  chi *= 4.0 * static_cast<double>(m);
  return igamc(static_cast<double>(blocks) / 2.0, chi / 2.0);
}

TestResult runs_test(const BitSequence& s)
{
  require_length(s, 100, "runs test");
  TestResult result{TestId::runs, {}, true};
  const double n = static_cast<double>(s.size());
  const double pi = static_cast<double>(s.count_ones()) / n;
  if (std::fabs(pi - 0.5) >= 2.0 / std::sqrt(n)) {
    result.applicable = false;
    return result;
  }
  std::size_t runs = 1;
  for (std::size_t k = 0; k + 1 < s.size(); k++) {
    runs += s[k] != s[k + 1];
  }
  const double num = std::fabs(static_cast<double>(runs) - 2.0 * n * pi * (1.0 - pi));
  const double den = 2.0 * std::sqrt(2.0 * n) * pi * (1.0 - pi);
  result.p_values.push_back(std::erfc(num / den));
  return result;
}

double longest_run_test(const BitSequence& s)
{
  require_length(s, 128, "longest run test");

  struct Table
  {
    std::size_t block;
    int low;  // runs <= low fall in class 0
    std::vector<double> pi;
  };
  static const Table small{8, 1, {0.2148, 0.3672, 0.2305, 0.1875}};
  static const Table medium{128, 4, {0.1174, 0.2430, 0.2493, 0.1752, 0.1027, 0.1124}};
  static const Table large{10000, 10, {0.0882, 0.2092, 0.2483, 0.1933, 0.1208, 0.0675, 0.0727}};
  const Table& t = s.size() >= 750000 ? large : s.size() >= 6272 ? medium : small;

  const std::size_t blocks = s.size() / t.block;
  const int classes = static_cast<int>(t.pi.size());
  std::vector<std::uint32_t> counts(t.pi.size(), 0);
  for (std::size_t b = 0; b < blocks; b++) {
    int run = 0;
    int longest = 0;
    for (std::size_t j = 0; j < t.block; j++) {
      run = s[b * t.block + j] ? run + 1 : 0;
      longest = std::max(longest, run);
    }
    const int cls = std::clamp(longest - t.low, 0, classes - 1);
    counts[static_cast<std::size_t>(cls)]++;
  }
  return chi_square_p(counts, t.pi, static_cast<double>(blocks));
}

double cumulative_sums_test(const BitSequence& s, bool forward)
{
  require_length(s, 100, "cumulative sums test");
  const long n = static_cast<long>(s.size());
  long sum = 0;
  long z = 0;
  for (long k = 0; k < n; k++) {
    const std::size_t idx = static_cast<std::size_t>(forward ? k : n - 1 - k);
    sum += s[idx] ? 1 : -1;
    z = std::max(z, std::labs(sum));
  }
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  const double zd = static_cast<double>(z);
  // integer bounds as in the reference implementation (C truncating division)
  double sum1 = 0.0;
  for (long k = (-n / z + 1) / 4; k <= (n / z - 1) / 4; k++) {
    sum1 += normal_cdf((4.0 * k + 1.0) * zd / sqrt_n) - normal_cdf((4.0 * k - 1.0) * zd / sqrt_n);
  }
  double sum2 = 0.0;
  for (long k = (-n / z - 3) / 4; k <= (n / z - 1) / 4; k++) {
    sum2 += normal_cdf((4.0 * k + 3.0) * zd / sqrt_n) - normal_cdf((4.0 * k + 1.0) * zd / sqrt_n);
  }
  return std::clamp(1.0 - sum1 + sum2, 0.0, 1.0);
}

std::vector<double> serial_test(const BitSequence& s, int m)
{
  if (m < 2 || m > 24) {
    throw std::invalid_argument("serial test block length must be in 2..24");
  }
  require_length(s, std::max<std::size_t>(std::size_t{1} << m, 8), "serial test");
  const auto bits = s.unpacked();
  const double p0 = psi_squared(bits, m);
  const double p1 = psi_squared(bits, m - 1);
  const double p2 = psi_squared(bits, m - 2);
  const double del1 = p0 - p1;
  const double del2 = p0 - 2.0 * p1 + p2;
  return {igamc(std::ldexp(1.0, m - 2), del1 / 2.0), igamc(std::ldexp(1.0, m - 3), del2 / 2.0)};
}

double approximate_entropy_test(const BitSequence& s, int m)
{
  if (m < 1 || m > 23) {
    throw std::invalid_argument("approximate entropy block length must be in 1..23");
  }
  require_length(s, static_cast<std::size_t>(m) + 2, "approximate entropy test");
  const auto bits = s.unpacked();
  const double apen = apen_phi(bits, m) - apen_phi(bits, m + 1);
  const double chi = 2.0 * static_cast<double>(bits.size()) * (std::log(2.0) - apen);
  return igamc(std::ldexp(1.0, m - 1), chi / 2.0);
}

double dft_spectral_test(const BitSequence& s)
{
  require_length(s, 1000, "DFT spectral test");
  const std::size_t n = s.size();

  std::unique_ptr<double, decltype(&fftw_free)> in(fftw_alloc_real(n), &fftw_free);
  std::unique_ptr<fftw_complex, decltype(&fftw_free)> out(fftw_alloc_complex(n / 2 + 1), &fftw_free);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), in.get(), out.get(), FFTW_ESTIMATE);
  }
  for (std::size_t i = 0; i < n; i++) {
    in.get()[i] = s[i] ? 1.0 : -1.0;
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    fftw_destroy_plan(plan);
  }

  const double nd = static_cast<double>(n);
  const double threshold = std::sqrt(std::log(1.0 / 0.05) * nd);
  std::size_t below = 0;
  for (std::size_t k = 0; k < n / 2; k++) {
    const double re = out.get()[k][0];
    const double im = out.get()[k][1];
    below += std::hypot(re, im) < threshold;
  }
  const double expected = 0.95 * nd / 2.0;
  const double d = (static_cast<double>(below) - expected) / std::sqrt(nd * 0.95 * 0.05 / 4.0);
  return std::erfc(std::fabs(d) / std::sqrt(2.0));
}

int gf2_rank(std::vector<std::uint64_t> rows)
{
  int rank = 0;
  for (int col = 63; col >= 0 && rank < static_cast<int>(rows.size()); col--) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    auto pivot = std::find_if(rows.begin() + rank, rows.end(),
                              [bit](std::uint64_t r) { return (r & bit) != 0; });
    if (pivot == rows.end()) {
      continue;
    }
    std::iter_swap(rows.begin() + rank, pivot);
    for (std::size_t r = 0; r < rows.size(); r++) {
      if (r != static_cast<std::size_t>(rank) && (rows[r] & bit)) {
        rows[r] ^= rows[static_cast<std::size_t>(rank)];
      }
    }
    rank++;
  }
  return rank;
}

double matrix_rank_test(const BitSequence& s)
{
  constexpr int dim = 32;
  constexpr std::size_t bits_per_matrix = dim * dim;
  require_length(s, 38 * bits_per_matrix, "matrix rank test");
  const std::size_t matrices = s.size() / bits_per_matrix;

  std::vector<std::uint32_t> counts(3, 0);  // full, full-1, lower
  std::vector<std::uint64_t> rows(dim);
  for (std::size_t k = 0; k < matrices; k++) {
    for (int r = 0; r < dim; r++) {
      std::uint64_t row = 0;
      for (int c = 0; c < dim; c++) {
        row = row << 1 | s[k * bits_per_matrix + static_cast<std::size_t>(r * dim + c)];
      }
      rows[static_cast<std::size_t>(r)] = row;
    }
    const int rank = gf2_rank(rows);
    counts[rank == dim ? 0 : rank == dim - 1 ? 1 : 2]++;
  }
  const double p_full = rank_probability(dim, dim, dim);
  const double p_minus = rank_probability(dim - 1, dim, dim);
  const std::array<double, 3> probs{p_full, p_minus, 1.0 - p_full - p_minus};
  double chi = 0.0;
  for (std::size_t i = 0; i < 3; i++) {
    const double expected = probs[i] * static_cast<double>(matrices);
    chi += (counts[i] - expected) * (counts[i] - expected) / expected;
  }
  return std::exp(-chi / 2.0);
}

BatteryParams BatteryParams::defaults_for(std::size_t n)
{
  BatteryParams p;
  const int log2n = static_cast<int>(std::bit_width(n)) - 1;
  p.block_frequency_m = 128;
  p.serial_m = std::clamp(log2n - 3, 2, 16);
  p.approximate_entropy_m = std::clamp(log2n - 6, 1, 10);
  return p;
}

std::string BatteryParams::describe() const
{
  std::ostringstream out;
  out << "BF M=" << block_frequency_m << ", Srl m=" << serial_m << ", AE m=" << approximate_entropy_m
      << ", LRO M by length (8/128/10000), Rank 32x32, DFT threshold 0.95";
  return out.str();
}

TestResult run_test(TestId id, const BitSequence& s, const BatteryParams& params)
{
  switch (id) {
    case TestId::approximate_entropy:
      return {id, {approximate_entropy_test(s, params.approximate_entropy_m)}, true};
    case TestId::block_frequency:
      return {id, {block_frequency_test(s, params.block_frequency_m)}, true};
    case TestId::cusum_forward:
      return {id, {cumulative_sums_test(s, true)}, true};
    case TestId::cusum_backward:
      return {id, {cumulative_sums_test(s, false)}, true};
    case TestId::dft_spectral:
      return {id, {dft_spectral_test(s)}, true};
    case TestId::frequency:
      return {id, {frequency_test(s)}, true};
    case TestId::longest_run:
      return {id, {longest_run_test(s)}, true};
    case TestId::matrix_rank:
      return {id, {matrix_rank_test(s)}, true};
    case TestId::runs:
      return runs_test(s);
    case TestId::serial:
      return {id, serial_test(s, params.serial_m), true};
  }
  throw std::invalid_argument("unknown test id");
}

double ks_uniform_statistic(std::vector<double> values)
{
  if (values.empty()) {
    throw std::invalid_argument("KS statistic of an empty sample");
  }
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  double d = 0.0;
  for (std::size_t i = 0; i < values.size(); i++) {
    const double v = std::clamp(values[i], 0.0, 1.0);
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - v, v - static_cast<double>(i) / n});
  }
  return d;
}

double ks_critical_value(std::size_t n, double alpha)
{
  if (n == 0 || !(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("KS critical value needs n >= 1 and alpha in (0, 1)");
  }
  const double c = std::sqrt(-0.5 * std::log(alpha / 2.0));
  const double rn = std::sqrt(static_cast<double>(n));
  return c / (rn + 0.12 + 0.11 / rn);
}

} // namespace inru::stats

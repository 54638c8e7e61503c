#include "inru/stats/battery.hpp"

#include "inru/random.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace inru::stats {

const TestSummary& TestReport::summary(TestId id) const
{
  for (const auto& t : tests) {
    if (t.id == id) {
      return t;
    }
  }
  throw std::out_of_range("test not present in report");
}

TestReport run_battery(const std::vector<BitSequence>& sequences,
                       double alpha,
                       const BatteryParams* params,
                       int jobs)
{
  if (sequences.empty()) {
    throw std::invalid_argument("battery needs at least one sequence");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1)");
  }
  TestReport report;
  report.alpha = alpha;
  report.sequences = sequences.size();
  report.bits_per_sequence = sequences.front().size();
  report.params = params ? *params : BatteryParams::defaults_for(report.bits_per_sequence);

  constexpr std::size_t num_tests = std::size(k_all_tests);
  // results[seq][test]
  std::vector<std::vector<TestResult>> results(sequences.size());
  parallel_for(sequences.size(), jobs, [&](std::size_t i) {
    auto& row = results[i];
    row.reserve(num_tests);
    for (TestId id : k_all_tests) {
      row.push_back(run_test(id, sequences[i], report.params));
    }
  });

  for (std::size_t t = 0; t < num_tests; t++) {
    TestSummary summary;
    summary.id = k_all_tests[t];
    double total = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < sequences.size(); i++) {
      const TestResult& r = results[i][t];
      summary.per_sequence.push_back(r);
      if (!r.applicable) {
        continue;
      }
      bool pass = true;
      for (double p : r.p_values) {
        total += p;
        count++;
        pass = pass && p >= alpha;
      }
      summary.passed += pass;
    }
    summary.mean_p = count ? total / static_cast<double>(count) : 0.0;
    summary.pass_proportion =
      static_cast<double>(summary.passed) / static_cast<double>(sequences.size());
    report.tests.push_back(std::move(summary));
  }
  return report;
}

ExperimentReport nist_experiment(const ExperimentSpec& spec)
{
  if (spec.keys < 1) {
    throw std::invalid_argument("experiment needs at least one key");
  }
  std::vector<BitSequence> sequences(static_cast<std::size_t>(spec.keys));
  parallel_for(sequences.size(), spec.jobs, [&](std::size_t i) {
    auto rng = make_rng(spec.seed, i);
    MasterKey key;
    for (auto& nib : key.nibbles) {
      nib = static_cast<std::uint8_t>(rng() & 0xf);
    }
    modes::ModeConfig cfg;
    cfg.mode = spec.mode;
    cfg.padding = modes::Padding::none;
    cfg.iv = Block(rng());
    cfg.nonce = static_cast<std::uint32_t>(rng());
    const BlockCipher cipher(key, Diversifier{});
    sequences[i] = modes::keystream(cfg, cipher, static_cast<std::int64_t>(spec.bits_per_sequence),
                                    spec.input);
  });
  ExperimentReport out;
  out.spec = spec;
  out.report = run_battery(sequences, spec.alpha, nullptr, spec.jobs);
  return out;
}

namespace {

std::string_view fill_name(modes::Fill f)
{
  return f == modes::Fill::zeros ? "zeros" : "ones";
}

} // namespace

std::string render_table(const std::vector<ExperimentReport>& experiments)
{
  std::ostringstream out;
  out << std::fixed;
  for (const auto& e : experiments) {
    const TestReport& r = e.report;
    out << "mode " << modes::mode_name(e.spec.mode) << ", input " << fill_name(e.spec.input) << ", "
        << r.sequences << " sequences x " << r.bits_per_sequence << " bits, alpha " << r.alpha
        << '\n';
    out << "  parameters: " << r.params.describe() << '\n';
    out << "  " << std::left << std::setw(6) << "test" << std::right << std::setw(10) << "mean p"
        << std::setw(10) << "passed" << '\n';
    for (const auto& t : r.tests) {
      out << "  " << std::left << std::setw(6) << test_abbreviation(t.id) << std::right
          << std::setw(10) << std::setprecision(4) << t.mean_p << std::setw(6) << t.passed << '/'
          << std::setw(3) << std::left << r.sequences << std::right << '\n';
    }
    out << '\n';
  }
  return out.str();
}

std::string render_records(const std::vector<ExperimentReport>& experiments)
{
  std::ostringstream out;
  out << std::setprecision(6) << std::fixed;
  for (const auto& e : experiments) {
    for (const auto& t : e.report.tests) {
      out << modes::mode_name(e.spec.mode) << ',' << fill_name(e.spec.input) << ','
          << test_abbreviation(t.id) << ',' << t.mean_p << ',' << t.pass_proportion << '\n';
    }
  }
  return out.str();
}

} // namespace inru::stats

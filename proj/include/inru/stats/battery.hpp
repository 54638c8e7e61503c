#pragma once

#include "inru/modes.hpp"
#include "inru/stats/nist_tests.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace inru::stats {

struct TestSummary
{
  TestId id{};
  // one entry per sequence, in input order
  std::vector<TestResult> per_sequence;
  double mean_p = 0.0;
  double pass_proportion = 0.0;
  std::size_t passed = 0;
};

// Pass criterion: a sequence passes a test iff the test applied and every
// p-value it produced is >= alpha. mean_p averages every p-value of the
// test over all applicable sequences.
struct TestReport
{
  double alpha = 0.01;
  std::size_t sequences = 0;
  std::size_t bits_per_sequence = 0;
  BatteryParams params;
  std::vector<TestSummary> tests;  // in k_all_tests order

  const TestSummary& summary(TestId id) const;
};

TestReport run_battery(const std::vector<BitSequence>& sequences,
                       double alpha = 0.01,
                       const BatteryParams* params = nullptr,
                       int jobs = 1);

struct ExperimentSpec
{
  modes::Mode mode = modes::Mode::ctr;
  modes::Fill input = modes::Fill::zeros;
  int keys = 64;
  std::size_t bits_per_sequence = std::size_t{1} << 20;
  std::uint64_t seed = 1;
  double alpha = 0.01;
  int jobs = 1;
};

struct ExperimentReport
{
  ExperimentSpec spec;
  TestReport report;
};

// One sequence per random 128-bit master key (diversifier zero, random mode
// IV / nonce), formed by fill_sequence_bytes, then run_battery.
ExperimentReport nist_experiment(const ExperimentSpec& spec);

// Aligned table, one row per test, mean p-value and pass count.
std::string render_table(const std::vector<ExperimentReport>& experiments);
// Machine records: mode,input,test,mean_p,pass_prop
std::string render_records(const std::vector<ExperimentReport>& experiments);

} // namespace inru::stats

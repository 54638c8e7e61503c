#include "inru/analysis/sbox.hpp"

#include <gtest/gtest.h>

#include <bit>

using namespace inru;
using namespace inru::analysis;

namespace {

void check_ddt_identities(const SboxView& s)
{
  const DDT d = build_ddt(s);
  const std::size_t cols = s.output_size();
  for (std::uint32_t din = 0; din < s.input_size(); din++) {
    std::uint32_t sum = 0;
    for (std::uint32_t dout = 0; dout < cols; dout++) {
      sum += d.at(din, dout);
      EXPECT_EQ(d.at(din, dout) % 2, 0u);  // x and x ^ din pair up
    }
    EXPECT_EQ(sum, s.input_size());
  }
  EXPECT_EQ(d.at(0, 0), s.input_size());
}

void check_lat_identities(const SboxView& s, bool permutation)
{
  const LAT l = build_lat(s);
  EXPECT_EQ(l.at(0, 0), static_cast<std::int32_t>(s.input_size() / 2));
  for (std::uint32_t a = 1; a < s.input_size(); a++) {
    EXPECT_EQ(l.at(a, 0), 0);  // nonzero input masks are balanced
  }
  for (std::uint32_t b = 1; b < s.output_size(); b++) {
    EXPECT_EQ(l.at(0, b), 0) << "output must be balanced";
  }
  if (permutation) {
    // Parseval: each output mask row of squared correlations sums to 2^(2n-2)
    for (std::uint32_t b = 0; b < s.output_size(); b++) {
      std::int64_t sum = 0;
      for (std::uint32_t a = 0; a < s.input_size(); a++) {
        sum += static_cast<std::int64_t>(l.at(a, b)) * l.at(a, b);
      }
      EXPECT_EQ(sum, 64);
    }
  }
}

} // namespace

TEST(Sbox, RowViewsArePermutations)
{
  const auto& q = qg::Quasigroup::inru();
  for (int l = 0; l < 16; l++) {
    const SboxView s = SboxView::row(q, static_cast<qg::Element>(l));
    std::vector<bool> seen(16, false);
    for (auto v : s.table) {
      EXPECT_FALSE(seen[v]);
      seen[v] = true;
    }
  }
  EXPECT_THROW(SboxView::row(q, 16), std::invalid_argument);
}

TEST(Sbox, TableIdentitiesHoldForEveryView)
{
  const auto& q = qg::Quasigroup::inru();
  for (int l = 0; l < 16; l++) {
    const SboxView s = SboxView::row(q, static_cast<qg::Element>(l));
    check_ddt_identities(s);
    check_lat_identities(s, true);
  }
  const SboxView wide = SboxView::wide(q);
  check_ddt_identities(wide);
  check_lat_identities(wide, false);
  EXPECT_EQ(build_ddt(wide).at(0, 0), 256u);
}

TEST(Sbox, FrozenMaximaFromIndependentRecount)
{
  const auto& q = qg::Quasigroup::inru();
  const SboxView wide = SboxView::wide(q);
  EXPECT_EQ(build_ddt(wide).max_nontrivial(), 42u);
  EXPECT_EQ(build_lat(wide).max_abs_nontrivial(), 32u);
  std::uint32_t row_ddt = 0;
  std::uint32_t row_lat = 0;
  for (int l = 0; l < 16; l++) {
    const SboxView s = SboxView::row(q, static_cast<qg::Element>(l));
    row_ddt = std::max(row_ddt, build_ddt(s).max_nontrivial());
    row_lat = std::max(row_lat, build_lat(s).max_abs_nontrivial());
  }
  EXPECT_EQ(row_ddt, 12u);
  EXPECT_EQ(row_lat, 8u);
}

TEST(Sbox, WideViewRestrictsToRowViews)
{
  const auto& q = qg::Quasigroup::inru();
  const SboxView wide = SboxView::wide(q);
  for (int l = 0; l < 16; l++) {
    const SboxView row = SboxView::row(q, static_cast<qg::Element>(l));
    for (unsigned b = 1; b < 16; b++) {
      for (unsigned x = 0; x < 16; x++) {
        const int w = std::popcount(b & wide.table[(static_cast<unsigned>(l) << 4) | x]) & 1;
        const int r = std::popcount(b & row.table[x]) & 1;
        EXPECT_EQ(w, r);
      }
    }
  }
}

TEST(Sbox, RenderedTablesCarryConventionHeader)
{
  const auto& q = qg::Quasigroup::inru();
  const std::string lat = render_lat(build_lat(SboxView::row(q, 3)), "row 3");
  EXPECT_NE(lat.find("signed bias"), std::string::npos);
  EXPECT_NE(lat.find("max |bias|"), std::string::npos);
  const std::string ddt = render_ddt(build_ddt(SboxView::wide(q)), "wide");
  EXPECT_NE(ddt.find("max over nonzero input differences: 42"), std::string::npos);
  // header lines plus one line per input difference
  EXPECT_EQ(std::count(ddt.begin(), ddt.end(), '\n'), 4 + 256);
}

#include "inru/anf.hpp"
#include "inru/quasigroup.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <random>

using namespace inru::qg;

namespace {

std::map<int, std::string> reference_polynomials()
{
  std::ifstream f(INRU_TEST_DATA_DIR "/coordinate_polynomials.txt");
  std::map<int, std::string> out;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') {
      continue;
    }
    const int k = line[1] - '0';
    out[k] = line.substr(line.find('=') + 1);
  }
  return out;
}

} // namespace

TEST(Anf, MoebiusRoundTrip)
{
  std::mt19937 rng(3);
  for (int vars = 0; vars <= 8; vars++) {
    std::vector<std::uint8_t> tt(std::size_t{1} << vars);
    for (auto& v : tt) {
      v = rng() & 1u;
    }
    const BooleanFunctionANF f = anf_from_truth_table(tt);
    EXPECT_EQ(f.num_vars, vars);
    EXPECT_EQ(truth_table_from_anf(f), tt);
    for (std::uint32_t x = 0; x < tt.size(); x++) {
      EXPECT_EQ(f.evaluate(x), tt[x] != 0);
    }
  }
  EXPECT_THROW(anf_from_truth_table(std::vector<std::uint8_t>(3)), std::invalid_argument);
}

TEST(Anf, SimpleFunctions)
{
  // x0 AND x1 over two variables
  const BooleanFunctionANF f = anf_from_truth_table(std::vector<std::uint8_t>{0, 0, 0, 1});
  EXPECT_EQ(f.monomials, std::vector<std::uint32_t>{3});
  EXPECT_EQ(f.degree(), 2);
  const BooleanFunctionANF one = anf_from_truth_table(std::vector<std::uint8_t>{1, 1});
  EXPECT_EQ(one.monomials, std::vector<std::uint32_t>{0});
  EXPECT_EQ(one.degree(), 0);
}

TEST(Anf, XorQuasigroupIsLinear)
{
  Grid g(16, std::vector<int>(16));
  for (int a = 0; a < 16; a++) {
    for (int b = 0; b < 16; b++) {
      g[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = a ^ b;
    }
  }
  const Quasigroup q = Quasigroup::from_table(g);
  for (int i = 0; i < 4; i++) {
    const BooleanFunctionANF f = coordinate_anf(q, i);
    EXPECT_EQ(render_quasigroup_anf(f, 4),
              "x_" + std::to_string(i) + "+x'_" + std::to_string(i));
  }
  for (unsigned mask = 1; mask < 16; mask++) {
    EXPECT_EQ(algebraic_degree(q, mask), 1);
  }
}

TEST(Anf, ComponentOfSingleBitIsCoordinate)
{
  const Quasigroup& q = Quasigroup::inru();
  // mask bit of weight 2^k selects MSB-index 3 - k
  for (int k = 0; k < 4; k++) {
    EXPECT_EQ(component_anf(q, 1u << k), coordinate_anf(q, 3 - k));
  }
  EXPECT_EQ(element_bits(q), 4);
  EXPECT_THROW(coordinate_anf(q, 4), std::out_of_range);
}

TEST(Anf, CoordinatesReproduceReferencePolynomialsExactly)
{
  const auto reference = reference_polynomials();
  ASSERT_EQ(reference.size(), 4u);
  const Quasigroup& q = Quasigroup::inru();
  for (int k = 0; k < 4; k++) {
    const BooleanFunctionANF expected = parse_quasigroup_anf(reference.at(k), 4);
    EXPECT_EQ(coordinate_anf(q, 3 - k), expected) << "f" << k;
  }
}

TEST(Anf, RenderParseRoundTrip)
{
  const Quasigroup& q = Quasigroup::inru();
  for (int i = 0; i < 4; i++) {
    const BooleanFunctionANF f = coordinate_anf(q, i);
    EXPECT_EQ(parse_quasigroup_anf(render_quasigroup_anf(f, 4), 4), f);
  }
  EXPECT_EQ(parse_quasigroup_anf("x_0 + x_0 + 1", 4).monomials, std::vector<std::uint32_t>{0});
  EXPECT_THROW(parse_quasigroup_anf("y_0", 4), std::invalid_argument);
  EXPECT_THROW(parse_quasigroup_anf("x_4", 4), std::invalid_argument);
}

TEST(Anf, AllComponentsHaveDegreeSix)
{
  const Quasigroup& q = Quasigroup::inru();
  const Quasigroup l = conjugate(q, Conjugate::left_division);
  for (unsigned mask = 1; mask < 16; mask++) {
    EXPECT_EQ(algebraic_degree(q, mask), 6) << mask;
    EXPECT_EQ(algebraic_degree(l, mask), 6) << mask;
  }
  EXPECT_THROW(algebraic_degree(q, 0), std::out_of_range);
}

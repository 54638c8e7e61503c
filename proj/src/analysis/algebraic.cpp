#include "inru/analysis/algebraic.hpp"

#include "inru/anf.hpp"
#include "inru/quasigroup.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

namespace inru::analysis {

namespace {

// Ids of the variables of one 64-bit block.
using BitVars = std::array<std::uint32_t, 64>;

struct RoundVars
{
  BitVars k{};
  BitVars y{};
  BitVars z{};
  BitVars u{};
  bool has_u = false;
};

struct Layout
{
  BitVars x{};
  BitVars c{};
  std::vector<RoundVars> rounds;
  BitVars final_key{};
};

BitVars add_block(std::vector<std::string>& names, const std::string& prefix)
{
  BitVars ids{};
  for (std::size_t i = 0; i < 64; i++) {
    ids[i] = static_cast<std::uint32_t>(names.size());
    names.push_back(prefix + std::to_string(i));
  }
  return ids;
}

Layout build_layout(int rounds, std::vector<std::string>& names)
{
  Layout l;
  l.x = add_block(names, "x");
  l.c = add_block(names, "c");
  for (int r = 1; r <= rounds; r++) {
    RoundVars rv;
    const std::string tag = std::to_string(r) + "_";
    rv.k = add_block(names, "k" + tag);
    rv.y = add_block(names, "y" + tag);
    rv.z = add_block(names, "z" + tag);
    rv.has_u = round_has_diffusion(r);
    if (rv.has_u) {
      rv.u = add_block(names, "u" + tag);
    }
    l.rounds.push_back(rv);
  }
  l.final_key = add_block(names, "k" + std::to_string(rounds + 1) + "_");
  return l;
}

Polynomial linear(std::initializer_list<std::uint32_t> vars, bool constant = false)
{
  Polynomial p;
  for (auto v : vars) {
    p.terms.push_back({v});
  }
  if (constant) {
    p.terms.emplace_back();
  }
  return p;
}

// GF(2) rank of sparse rows over `width` columns, dense elimination.
std::size_t gf2_rank(const std::vector<std::vector<std::uint32_t>>& rows, std::size_t width)
{
  const std::size_t words = (width + 63) / 64;
  std::vector<std::vector<std::uint64_t>> m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<std::uint64_t> dense(words, 0);
    for (auto col : r) {
      dense[col / 64] ^= std::uint64_t{1} << (col % 64);
    }
    m.push_back(std::move(dense));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < width && rank < m.size(); col++) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t pivot = rank;
    while (pivot < m.size() && !(m[pivot][w] & bit)) {
      pivot++;
    }
    if (pivot == m.size()) {
      continue;
    }
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = rank + 1; r < m.size(); r++) {
      if (m[r][w] & bit) {
        for (std::size_t k = w; k < words; k++) {
          m[r][k] ^= m[rank][k];
        }
      }
    }
    rank++;
  }
  return rank;
}

} // namespace

int Polynomial::degree() const
{
  int d = 0;
  for (const auto& t : terms) {
    d = std::max(d, static_cast<int>(t.size()));
  }
  return d;
}

std::uint32_t AlgebraicSystem::variable(const std::string& name) const
{
  const auto it = std::find(variable_names.begin(), variable_names.end(), name);
  if (it == variable_names.end()) {
    throw std::out_of_range("no variable named " + name);
  }
  return static_cast<std::uint32_t>(it - variable_names.begin());
}

std::size_t AlgebraicSystem::nonlinear_equations() const
{
  return static_cast<std::size_t>(
    std::count_if(equations.begin(), equations.end(), [](const Polynomial& p) { return !p.is_linear(); }));
}

std::size_t AlgebraicSystem::linear_equations() const
{
  return equations.size() - nonlinear_equations();
}

std::string AlgebraicSystem::render_equation(const Polynomial& p) const
{
  std::string out;
  for (std::size_t t = 0; t < p.terms.size(); t++) {
    if (t) {
      out += " + ";
    }
    if (p.terms[t].empty()) {
      out += '1';
      continue;
    }
    for (std::size_t v = 0; v < p.terms[t].size(); v++) {
      if (v) {
        out += '*';
      }
      out += variable_names[p.terms[t][v]];
    }
  }
  return out.empty() ? "0" : out;
}

std::string AlgebraicSystem::render() const
{
  const SystemSize size = count_system_size(rounds);
  std::ostringstream out;
  out << "# Boolean system of the " << rounds << "-round cipher over GF(2), one equation"
      << " (= 0) per line\n";
  out << "# variables: " << size.variables << " (" << size.unknowns
      << " unknown; x0..x63 plaintext and c0..c63 ciphertext are known)\n";
  out << "# equations: " << size.equations << " (" << size.nonlinear_equations
      << " nonlinear of degree <= 6, " << size.linear_equations << " linear)\n";
  out << "# variables after linear elimination: " << size.variables_after_elimination << '\n';
  out << "# naming: k{r}_i round key r (k1 = first), y{r}_i after key xor,"
      << " z{r}_i after the quasigroup layer, u{r}_i after diffusion\n";
  out << "# bit 0 is the most significant bit of the block; variable order: x, c, then"
      << " k, y, z, u per round, then the final key\n";
  for (const auto& e : equations) {
    out << render_equation(e) << '\n';
  }
  return out.str();
}

AlgebraicSystem emit_algebraic_system(int rounds)
{
  if (rounds < 1 || rounds > k_rounds) {
    throw std::invalid_argument("rounds must be in 1..16");
  }
  AlgebraicSystem sys;
  sys.rounds = rounds;
  const Layout l = build_layout(rounds, sys.variable_names);

  const auto& q = qg::Quasigroup::inru();
  std::array<qg::BooleanFunctionANF, 4> f;
  for (int j = 0; j < 4; j++) {
    f[static_cast<std::size_t>(j)] = qg::coordinate_anf(q, j);
  }

  const BitVars* state = &l.x;
  for (int r = 1; r <= rounds; r++) {
    const RoundVars& rv = l.rounds[static_cast<std::size_t>(r - 1)];

    for (std::size_t i = 0; i < 64; i++) {
      sys.equations.push_back(linear({rv.y[i], rv.k[i], (*state)[i]}));
    }

    // z nibble p = chain * y nibble p, coordinate j from f_j; the chain is the
    // leader (first or last key nibble) or the neighbouring z nibble
    const bool left = r % 2 == 1;
    for (int p = 0; p < 16; p++) {
      std::array<std::uint32_t, 8> inputs{};
      for (int b = 0; b < 4; b++) {
        std::uint32_t chain = 0;
        if (left) {
          chain = p == 0 ? rv.k[static_cast<std::size_t>(b)] : rv.z[static_cast<std::size_t>(4 * (p - 1) + b)];
        } else {
          chain = p == 15 ? rv.k[static_cast<std::size_t>(60 + b)]
                          : rv.z[static_cast<std::size_t>(4 * (p + 1) + b)];
        }
        inputs[static_cast<std::size_t>(b)] = chain;
        inputs[static_cast<std::size_t>(4 + b)] = rv.y[static_cast<std::size_t>(4 * p + b)];
      }
      for (int j = 0; j < 4; j++) {
        Polynomial eq;
        eq.terms.push_back({rv.z[static_cast<std::size_t>(4 * p + j)]});
        // highest degree first, then by variable order
        auto monomials = f[static_cast<std::size_t>(j)].monomials;
        std::stable_sort(monomials.begin(), monomials.end(), [](std::uint32_t a, std::uint32_t b) {
          return std::popcount(a) > std::popcount(b);
        });
        for (std::uint32_t mono : monomials) {
          std::vector<std::uint32_t> term;
          for (int v = 0; v < 8; v++) {
            if (mono >> v & 1u) {
              term.push_back(inputs[static_cast<std::size_t>(v)]);
            }
          }
          std::sort(term.begin(), term.end());
          eq.terms.push_back(std::move(term));
        }
        sys.equations.push_back(std::move(eq));
      }
    }

    if (!rv.has_u) {
      state = &rv.z;
      continue;
    }
    if (left) {
      // suffix xor: u63 = z63, u_i = z_i + u_{i+1}
      sys.equations.push_back(linear({rv.u[63], rv.z[63]}));
      for (int i = 62; i >= 0; i--) {
        const auto s = static_cast<std::size_t>(i);
        sys.equations.push_back(linear({rv.u[s], rv.z[s], rv.u[s + 1]}));
      }
    } else {
      // complemented prefix xor: u0 = z0 + 1, u_i = z_i + u_{i-1}
      sys.equations.push_back(linear({rv.u[0], rv.z[0]}, true));
      for (std::size_t i = 1; i < 64; i++) {
        sys.equations.push_back(linear({rv.u[i], rv.z[i], rv.u[i - 1]}));
      }
    }
    state = &rv.u;
  }

  for (std::size_t i = 0; i < 64; i++) {
    sys.equations.push_back(linear({l.c[i], (*state)[i], l.final_key[i]}));
  }
  return sys;
}

std::vector<std::uint8_t> trace_assignment(const AlgebraicSystem& system,
                                           const RoundKeys& rk,
                                           const EncryptionTrace& trace)
{
  if (static_cast<int>(trace.rounds.size()) != system.rounds) {
    throw std::invalid_argument("trace and system disagree on the round count");
  }
  std::vector<std::string> names;
  const Layout l = build_layout(system.rounds, names);
  std::vector<std::uint8_t> values(names.size(), 0);
  const auto put = [&](const BitVars& ids, Block b) {
    for (std::size_t i = 0; i < 64; i++) {
      values[ids[i]] = b.bit(static_cast<int>(i));
    }
  };
  put(l.x, trace.plaintext);
  put(l.c, trace.ciphertext);
  for (int r = 1; r <= system.rounds; r++) {
    const RoundVars& rv = l.rounds[static_cast<std::size_t>(r - 1)];
    const RoundTrace& t = trace.rounds[static_cast<std::size_t>(r - 1)];
    put(rv.k, rk[static_cast<std::size_t>(r - 1)]);
    put(rv.y, t.after_key_xor);
    put(rv.z, t.after_confusion);
    if (rv.has_u) {
      put(rv.u, t.after_diffusion);
    }
  }
  put(l.final_key, rk[static_cast<std::size_t>(system.rounds)]);
  return values;
}

bool evaluate(const Polynomial& p, const std::vector<std::uint8_t>& assignment)
{
  bool sum = false;
  for (const auto& term : p.terms) {
    bool product = true;
    for (auto v : term) {
      product = product && assignment.at(v);
    }
    sum ^= product;
  }
  return sum;
}

std::size_t count_unsatisfied(const AlgebraicSystem& system,
                              const std::vector<std::uint8_t>& assignment)
{
  return static_cast<std::size_t>(std::count_if(
    system.equations.begin(), system.equations.end(),
    [&](const Polynomial& p) { return evaluate(p, assignment); }));
}

SystemSize count_system_size(int rounds)
{
  if (rounds < 0 || rounds > k_rounds) {
    throw std::invalid_argument("rounds must be in 0..16");
  }
  SystemSize size;
  size.rounds = rounds;
  if (rounds == 0) {
    // c = x + k1 only: 64 linear equations fixing the 64 key bits
    size.equations = 64;
    size.linear_equations = 64;
    size.variables = 192;
    size.unknowns = 64;
    size.variables_after_elimination = 0;
    return size;
  }
  const AlgebraicSystem sys = emit_algebraic_system(rounds);
  size.equations = sys.equations.size();
  size.nonlinear_equations = sys.nonlinear_equations();
  size.linear_equations = size.equations - size.nonlinear_equations;
  size.variables = sys.variable_names.size();
  // x and c occupy ids 0..127; unknowns are renumbered from 0
  constexpr std::uint32_t known = 128;
  size.unknowns = size.variables - known;
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& e : sys.equations) {
    if (!e.is_linear()) {
      continue;
    }
    std::vector<std::uint32_t> row;
    for (const auto& t : e.terms) {
      if (t.size() == 1 && t[0] >= known) {
        row.push_back(t[0] - known);
      }
    }
    rows.push_back(std::move(row));
  }
  size.variables_after_elimination = size.unknowns - gf2_rank(rows, size.unknowns);
  return size;
}

} // namespace inru::analysis

#include "inru/quasigroup.hpp"

#include <cctype>
#include <istream>
#include <sstream>

namespace inru::qg {

namespace {

const char* const k_inru_square = R"(5 c 1 0 2 e 9 8 f d 3 b 7 a 4 6
f 4 3 a 8 d 6 2 5 e 1 7 b 0 c 9
6 7 d 2 0 3 f a 9 1 e 4 c 8 b 5
8 d 7 9 f 4 0 5 2 c b 3 1 6 e a
4 f 0 1 d 8 7 e c 2 a 6 9 3 5 b
9 b e 8 a 1 5 0 6 3 d c 4 2 7 f
a 1 c f 9 b 2 6 0 7 4 e d 5 3 8
e 2 9 7 c 5 1 4 d f 6 a 0 b 8 3
7 6 8 e 3 0 4 1 b a 2 f 5 d 9 c
2 e b 6 5 c a f 8 4 7 1 3 9 d 0
b 9 2 d 1 a c 3 7 0 8 5 f e 6 4
0 3 4 5 6 7 8 9 a b c d e f 1 2
3 0 f c 7 6 d b 1 9 5 8 2 4 a e
1 a 5 4 b 9 e 7 3 6 f 2 8 c 0 d
d 8 6 b 4 f 3 c e 5 9 0 a 7 2 1
c 5 a 3 e 2 b d 4 8 0 9 6 1 f 7
)";

// Returns an error message for the first violation, or empty if Latin.
std::string latin_violation(const Grid& rows)
{
  const std::size_t n = rows.size();
  if (n == 0 || n > 256) {
    return "order must be in 1..256";
  }
  for (std::size_t r = 0; r < n; r++) {
    if (rows[r].size() != n) {
      return "row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
             " entries, expected " + std::to_string(n);
    }
    for (int v : rows[r]) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        return "row " + std::to_string(r) + ": entry " + std::to_string(v) + " out of range";
      }
    }
  }
  for (std::size_t r = 0; r < n; r++) {
    std::vector<bool> seen(n, false);
    for (std::size_t c = 0; c < n; c++) {
      const auto v = static_cast<std::size_t>(rows[r][c]);
      if (seen[v]) {
        return "row " + std::to_string(r) + ": duplicate value " + std::to_string(v) +
               " at column " + std::to_string(c);
      }
      seen[v] = true;
    }
  }
  for (std::size_t c = 0; c < n; c++) {
    std::vector<bool> seen(n, false);
    for (std::size_t r = 0; r < n; r++) {
      const auto v = static_cast<std::size_t>(rows[r][c]);
      if (seen[v]) {
        return "column " + std::to_string(c) + ": duplicate value " + std::to_string(v) +
               " at row " + std::to_string(r);
      }
      seen[v] = true;
    }
  }
  return {};
}

} // namespace

Quasigroup Quasigroup::from_table(const Grid& rows)
{
  if (auto why = latin_violation(rows); !why.empty()) {
    throw LatinSquareError("not a Latin square: " + why);
  }

  Quasigroup q;
  q.n_ = rows.size();
  const std::size_t n = q.n_;
  q.mul_.resize(n * n);
  q.ldiv_.resize(n * n);
  q.rdiv_.resize(n * n);
  for (std::size_t r = 0; r < n; r++) {
    for (std::size_t c = 0; c < n; c++) {
      const auto v = static_cast<Element>(rows[r][c]);
      q.mul_[r * n + c] = v;
      q.ldiv_[r * n + v] = static_cast<Element>(c);
      q.rdiv_[v * n + c] = static_cast<Element>(r);
    }
  }
  return q;
}

const Quasigroup& Quasigroup::inru()
{
  static const Quasigroup q = parse_square(std::string(k_inru_square));
  return q;
}

Grid Quasigroup::grid() const
{
  Grid g(n_, std::vector<int>(n_));
  for (std::size_t r = 0; r < n_; r++) {
    for (std::size_t c = 0; c < n_; c++) {
      g[r][c] = mul_[r * n_ + c];
    }
  }
  return g;
}

Quasigroup parse_square(std::istream& in)
{
  Grid rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') {
      continue;
    }
    std::istringstream fields(line);
    std::vector<int> row;
    std::string tok;
    while (fields >> tok) {
      if (tok.size() != 1 || !std::isxdigit(static_cast<unsigned char>(tok[0]))) {
        throw LatinSquareError("bad square entry '" + tok + "' in row " +
                               std::to_string(rows.size()));
      }
      row.push_back(std::stoi(tok, nullptr, 16));
    }
    if (!row.empty()) {
      rows.push_back(std::move(row));
    }
  }
  return Quasigroup::from_table(rows);
}

Quasigroup parse_square(const std::string& text)
{
  std::istringstream in(text);
  return parse_square(in);
}

std::string format_square(const Quasigroup& q)
{
  if (q.order() > 16) {
    throw std::invalid_argument("text form only supports order <= 16");
  }
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  for (std::size_t r = 0; r < q.order(); r++) {
    for (std::size_t c = 0; c < q.order(); c++) {
      if (c != 0) {
        out += ' ';
      }
      out += digits[q.mul(static_cast<Element>(r), static_cast<Element>(c))];
    }
    out += '\n';
  }
  return out;
}

Quasigroup conjugate(const Quasigroup& q, Conjugate which)
{
  const auto& table = which == Conjugate::left_division ? q.ldiv_table() : q.rdiv_table();
  const std::size_t n = q.order();
  Grid g(n, std::vector<int>(n));
  for (std::size_t r = 0; r < n; r++) {
    for (std::size_t c = 0; c < n; c++) {
      g[r][c] = table[r * n + c];
    }
  }
  return Quasigroup::from_table(g);
}

bool check_latin(const Grid& rows)
{
  return latin_violation(rows).empty();
}

bool check_latin(const Quasigroup& q)
{
  return check_latin(q.grid());
}

} // namespace inru::qg

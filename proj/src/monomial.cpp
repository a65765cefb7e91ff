#include "detkrs/monomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "detkrs/error.hpp"

namespace detkrs {

Monomial Monomial::variable(int row, int col, int exp) {
  if (row < 1 || col < 1) fail(Errc::IndexOutOfRange, "variable indices are 1-based");
  if (exp < 0) fail(Errc::IndexOutOfRange, "negative exponent");
  Monomial m;
  if (exp > 0) m.factors_.push_back({row, col, exp});
  return m;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.exp;
  return d;
}

int Monomial::exponent(int row, int col) const {
  for (const auto& f : factors_)
    if (f.row == row && f.col == col) return f.exp;
  return 0;
}

Bidegree Monomial::bidegree(int m, int n) const {
  Bidegree b(std::vector<int>(static_cast<size_t>(m), 0),
             std::vector<int>(static_cast<size_t>(n), 0));
  for (const auto& f : factors_) {
    if (f.row > m || f.col > n)
      fail(Errc::IndexOutOfRange, "monomial exceeds ambient " + std::to_string(m) +
                                      "x" + std::to_string(n));
    b.rows[static_cast<size_t>(f.row - 1)] += f.exp;
    b.cols[static_cast<size_t>(f.col - 1)] += f.exp;
  }
  return b;
}

int Monomial::max_row() const {
  int r = 0;
  for (const auto& f : factors_) r = std::max(r, f.row);
  return r;
}

int Monomial::max_col() const {
  int c = 0;
  for (const auto& f : factors_) c = std::max(c, f.col);
  return c;
}

void Monomial::push(int row, int col, int exp) {
  if (exp != 0) factors_.push_back({row, col, exp});
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  size_t i = 0, j = 0;
  while (i < factors_.size() || j < other.factors_.size()) {
    if (j == other.factors_.size() ||
        (i < factors_.size() &&
         std::pair(factors_[i].row, factors_[i].col) <
             std::pair(other.factors_[j].row, other.factors_[j].col))) {
      out.factors_.push_back(factors_[i++]);
    } else if (i == factors_.size() ||
               std::pair(other.factors_[j].row, other.factors_[j].col) <
                   std::pair(factors_[i].row, factors_[i].col)) {
      out.factors_.push_back(other.factors_[j++]);
    } else {
      out.push(factors_[i].row, factors_[i].col,
               factors_[i].exp + other.factors_[j].exp);
      ++i;
      ++j;
    }
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (const auto& f : factors_)
    if (other.exponent(f.row, f.col) < f.exp) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& other) const {
  Monomial out;
  size_t j = 0;
  for (const auto& f : factors_) {
    while (j < other.factors_.size() &&
           std::pair(other.factors_[j].row, other.factors_[j].col) <
               std::pair(f.row, f.col)) {
      fail(Errc::LengthMismatch, "quotient requires divisibility");
    }
    int sub = 0;
    if (j < other.factors_.size() && other.factors_[j].row == f.row &&
        other.factors_[j].col == f.col) {
      sub = other.factors_[j].exp;
      ++j;
    }
    if (sub > f.exp) fail(Errc::LengthMismatch, "quotient requires divisibility");
    out.push(f.row, f.col, f.exp - sub);
  }
  if (j != other.factors_.size())
    fail(Errc::LengthMismatch, "quotient requires divisibility");
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial out;
  size_t i = 0, j = 0;
  while (i < a.factors_.size() || j < b.factors_.size()) {
    if (j == b.factors_.size() ||
        (i < a.factors_.size() &&
         std::pair(a.factors_[i].row, a.factors_[i].col) <
             std::pair(b.factors_[j].row, b.factors_[j].col))) {
      out.factors_.push_back(a.factors_[i++]);
    } else if (i == a.factors_.size() ||
               std::pair(b.factors_[j].row, b.factors_[j].col) <
                   std::pair(a.factors_[i].row, a.factors_[i].col)) {
      out.factors_.push_back(b.factors_[j++]);
    } else {
      out.push(a.factors_[i].row, a.factors_[i].col,
               std::max(a.factors_[i].exp, b.factors_[j].exp));
      ++i;
      ++j;
    }
  }
  return out;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i > 0) os << '*';
    os << "x[" << factors_[i].row << ',' << factors_[i].col << ']';
    if (factors_[i].exp != 1) os << '^' << factors_[i].exp;
  }
  return os.str();
}

int diag_cmp(const Monomial& a, const Monomial& b) {
  size_t i = 0, j = 0;
  while (i < a.factors_.size() && j < b.factors_.size()) {
    auto pa = std::pair(a.factors_[i].row, a.factors_[i].col);
    auto pb = std::pair(b.factors_[j].row, b.factors_[j].col);
    if (pa < pb) return 1;   // a has a positive exponent on an earlier variable
    if (pb < pa) return -1;
    if (a.factors_[i].exp != b.factors_[j].exp)
      return a.factors_[i].exp > b.factors_[j].exp ? 1 : -1;
    ++i;
    ++j;
  }
  if (i < a.factors_.size()) return 1;
  if (j < b.factors_.size()) return -1;
  return 0;
}

Monomial parse_monomial(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty() || s == "1") return Monomial();
  std::map<std::pair<int, int>, int> exps;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, '*')) {
    size_t lb = tok.find("x[");
    size_t comma = tok.find(',');
    size_t rb = tok.find(']');
    if (lb != 0 || comma == std::string::npos || rb == std::string::npos || comma > rb)
      fail(Errc::ParseError, "bad monomial factor '" + tok + "'");
    int row = 0, col = 0, exp = 1;
    try {
      row = std::stoi(tok.substr(2, comma - 2));
      col = std::stoi(tok.substr(comma + 1, rb - comma - 1));
      if (rb + 1 < tok.size()) {
        if (tok[rb + 1] != '^') fail(Errc::ParseError, "bad exponent in '" + tok + "'");
        exp = std::stoi(tok.substr(rb + 2));
      }
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(Errc::ParseError, "bad monomial factor '" + tok + "'");
    }
    if (row < 1 || col < 1) fail(Errc::ParseError, "indices are 1-based in '" + tok + "'");
    if (exp < 0) fail(Errc::ParseError, "negative exponent in '" + tok + "'");
    exps[{row, col}] += exp;
  }
  Monomial m;
  for (auto& [rc, e] : exps)
    if (e > 0) m = m * Monomial::variable(rc.first, rc.second, e);
  return m;
}

namespace {
// Fills the exponent matrix row by row; within a row, distributes the row sum
// over columns subject to the remaining column budgets.
void fill_rows(const Bidegree& b, size_t row, std::vector<int>& colbudget,
               std::vector<Monomial::VarExp>& acc,
               const std::function<void(const Monomial&)>& fn);

void fill_cols(const Bidegree& b, size_t row, size_t col, int remaining,
               std::vector<int>& colbudget, std::vector<Monomial::VarExp>& acc,
               const std::function<void(const Monomial&)>& fn) {
  if (col == b.cols.size()) {
    if (remaining == 0) fill_rows(b, row + 1, colbudget, acc, fn);
    return;
  }
  int tail_budget = 0;
  for (size_t c = col + 1; c < b.cols.size(); ++c) tail_budget += colbudget[c];
  int lo = std::max(0, remaining - tail_budget);
  int hi = std::min(remaining, colbudget[col]);
  for (int e = lo; e <= hi; ++e) {
    colbudget[col] -= e;
    if (e > 0)
      acc.push_back({static_cast<int>(row + 1), static_cast<int>(col + 1), e});
    fill_cols(b, row, col + 1, remaining - e, colbudget, acc, fn);
    if (e > 0) acc.pop_back();
    colbudget[col] += e;
  }
}

void fill_rows(const Bidegree& b, size_t row, std::vector<int>& colbudget,
               std::vector<Monomial::VarExp>& acc,
               const std::function<void(const Monomial&)>& fn) {
  if (row == b.rows.size()) {
    Monomial m;
    for (const auto& f : acc) m = m * Monomial::variable(f.row, f.col, f.exp);
    fn(m);
    return;
  }
  fill_cols(b, row, 0, b.rows[row], colbudget, acc, fn);
}
}  // namespace

void for_each_monomial(const Bidegree& b,
                       const std::function<void(const Monomial&)>& fn) {
  if (!b.nonnegative() || !b.balanced()) return;
  std::vector<int> colbudget = b.cols;
  std::vector<Monomial::VarExp> acc;
  fill_rows(b, 0, colbudget, acc, fn);
}

std::vector<Monomial> monomials_of_bidegree(const Bidegree& b) {
  std::vector<Monomial> out;
  for_each_monomial(b, [&](const Monomial& m) { out.push_back(m); });
  return out;
}

long long count_monomials(const Bidegree& b) {
  long long count = 0;
  for_each_monomial(b, [&](const Monomial&) { ++count; });
  return count;
}

}  // namespace detkrs

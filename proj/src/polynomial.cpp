#include "detkrs/polynomial.hpp"

#include <sstream>

namespace detkrs {

Polynomial Polynomial::constant(const Rational& c) {
  return term(Monomial::one(), c);
}

Polynomial Polynomial::term(const Monomial& mono, const Rational& c) {
  Polynomial p;
  p.add_term(mono, c);
  return p;
}

Rational Polynomial::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& mono, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out = *this;
  out += other;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial out = *this;
  out -= other;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [mono, c] : other.terms_) add_term(mono, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [mono, c] : other.terms_) add_term(mono, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  Polynomial out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial out;
  if (c == 0) return out;
  for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, coeff * c);
  return out;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) fail(Errc::ZeroPolynomial, "zero polynomial has no leading monomial");
  return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) fail(Errc::ZeroPolynomial, "zero polynomial has no leading coefficient");
  return terms_.begin()->second;
}

std::optional<Bidegree> Polynomial::homogeneous_bidegree(int m, int n) const {
  std::optional<Bidegree> b;
  for (const auto& [mono, c] : terms_) {
    Bidegree bd = mono.bidegree(m, n);
    if (!b) {
      b = bd;
    } else if (*b != bd) {
      return std::nullopt;
    }
  }
  return b;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || mono.is_one()) {
      os << a.get_str();
      if (!mono.is_one()) os << '*';
    }
    if (!mono.is_one()) os << mono.to_string();
  }
  return os.str();
}

namespace {
Polynomial expand_rec(const std::vector<int>& rows, std::vector<int>& cols) {
  if (rows.empty()) return Polynomial::constant(1);
  Polynomial out;
  std::vector<int> subrows(rows.begin() + 1, rows.end());
  for (size_t k = 0; k < cols.size(); ++k) {
    int c = cols[k];
    std::vector<int> subcols;
    subcols.reserve(cols.size() - 1);
    for (size_t t = 0; t < cols.size(); ++t)
      if (t != k) subcols.push_back(cols[t]);
    Polynomial sub = expand_rec(subrows, subcols);
    Rational sign = (k % 2 == 0) ? 1 : -1;
    out += sub * Polynomial::term(Monomial::variable(rows[0], c), sign);
  }
  return out;
}
}  // namespace

Polynomial expand_minor(const Minor& minor) {
  std::vector<int> cols = minor.cols();
  return expand_rec(minor.rows(), cols);
}

Polynomial expand_bitableau(const Bitableau& bt) {
  Polynomial out = Polynomial::constant(1);
  for (const auto& d : bt.factors()) out = out * expand_minor(d);
  return out;
}

}  // namespace detkrs

#include "detkrs/ktheory.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "detkrs/bidegree.hpp"
#include "detkrs/error.hpp"

namespace detkrs {

namespace {
void require_wide(int m, int n) {
  if (m < n)
    fail(Errc::InvalidAmbient, "K-theory routines assume m >= n, got m=" +
                                   std::to_string(m) + " n=" + std::to_string(n));
}
}  // namespace

LaurentPoly LaurentPoly::constant(int m, int n, long long c) {
  LaurentPoly p(m, n);
  p.add_term(std::vector<int>(static_cast<size_t>(m + n), 0), c);
  return p;
}

LaurentPoly LaurentPoly::u_monomial(int m, int n, const std::vector<int>& uexp,
                                    long long c) {
  LaurentPoly p(m, n);
  std::vector<int> e(static_cast<size_t>(m + n), 0);
  for (size_t i = 0; i < uexp.size(); ++i) e[i] = uexp[i];
  p.add_term(e, c);
  return p;
}

void LaurentPoly::add_term(const std::vector<int>& exp, long long c) {
  if (c == 0) return;
  if (static_cast<int>(exp.size()) != m_ + n_)
    fail(Errc::LengthMismatch, "exponent vector has wrong length");
  auto [it, inserted] = terms_.emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

long long LaurentPoly::coefficient(const std::vector<int>& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? 0 : it->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, c);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, -c);
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
  LaurentPoly out(m_, n_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      std::vector<int> e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::operator*(long long c) const {
  LaurentPoly out(m_, n_);
  if (c == 0) return out;
  for (const auto& [e, coeff] : terms_) out.add_term(e, coeff * c);
  return out;
}

bool LaurentPoly::symmetric_in_v() const {
  for (int k = 0; k + 1 < n_; ++k) {
    for (const auto& [e, c] : terms_) {
      std::vector<int> swapped = e;
      std::swap(swapped[static_cast<size_t>(m_ + k)],
                swapped[static_cast<size_t>(m_ + k + 1)]);
      if (coefficient(swapped) != c) return false;
    }
  }
  return true;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  // Largest exponent vector first.
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    long long a = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::string vars;
    for (int i = 0; i < m_; ++i) {
      if (e[static_cast<size_t>(i)] == 0) continue;
      if (!vars.empty()) vars += '*';
      vars += "u[" + std::to_string(i + 1) + "]";
      if (e[static_cast<size_t>(i)] != 1)
        vars += "^" + std::to_string(e[static_cast<size_t>(i)]);
    }
    for (int j = 0; j < n_; ++j) {
      if (e[static_cast<size_t>(m_ + j)] == 0) continue;
      if (!vars.empty()) vars += '*';
      vars += "v[" + std::to_string(j + 1) + "]";
      if (e[static_cast<size_t>(m_ + j)] != 1)
        vars += "^" + std::to_string(e[static_cast<size_t>(m_ + j)]);
    }
    if (vars.empty()) {
      os << a;
    } else {
      if (a != 1) os << a << '*';
      os << vars;
    }
  }
  return os.str();
}

LaurentPoly schur_polynomial(const Shape& s, int m, int n) {
  require_wide(m, n);
  if (s.max_part() > n)
    fail(Errc::ShapeTooWide, "shape part exceeds the number of v-variables");
  LaurentPoly out(m, n);
  // Fillings with strictly increasing rows and weakly increasing columns.
  std::vector<std::vector<int>> rows(static_cast<size_t>(s.num_parts()));
  std::function<void(int, int)> rec = [&](int i, int j) {
    if (i == s.num_parts()) {
      std::vector<int> e(static_cast<size_t>(m + n), 0);
      for (const auto& row : rows)
        for (int val : row) e[static_cast<size_t>(m + val - 1)]++;
      out.add_term(e, 1);
      return;
    }
    int len = s.part(i + 1);
    if (j == len) {
      rec(i + 1, 0);
      return;
    }
    int lo = 1;
    if (j > 0) lo = std::max(lo, rows[static_cast<size_t>(i)][static_cast<size_t>(j - 1)] + 1);
    if (i > 0) lo = std::max(lo, rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j)]);
    for (int val = lo; val <= n - (len - j - 1); ++val) {
      rows[static_cast<size_t>(i)].push_back(val);
      rec(i, j + 1);
      rows[static_cast<size_t>(i)].pop_back();
    }
  };
  rec(0, 0);
  return out;
}

LaurentPoly k_polynomial_quotient(const MonomialIdeal& ideal, int m, int n,
                                  int generator_cap) {
  require_wide(m, n);
  const auto& gens = ideal.generators();
  if (static_cast<int>(gens.size()) > generator_cap)
    fail(Errc::TooManyGenerators, std::to_string(gens.size()) + " generators exceed cap " +
                                      std::to_string(generator_cap));
  // Alternating sum over subsets, grouped by the lcm monomial.
  std::map<Monomial, long long, DiagLess> signs;
  const size_t r = gens.size();
  for (size_t mask = 0; mask < (1ull << r); ++mask) {
    Monomial lcm;
    int bits = 0;
    for (size_t i = 0; i < r; ++i) {
      if (mask & (1ull << i)) {
        lcm = Monomial::lcm(lcm, gens[i]);
        ++bits;
      }
    }
    signs[lcm] += (bits % 2 == 0) ? 1 : -1;
  }
  LaurentPoly out(m, n);
  for (const auto& [mono, c] : signs) {
    if (c == 0) continue;
    Bidegree b = mono.bidegree(m, n);
    std::vector<int> e;
    e.insert(e.end(), b.rows.begin(), b.rows.end());
    e.insert(e.end(), b.cols.begin(), b.cols.end());
    out.add_term(e, c);
  }
  return out;
}

LaurentPoly k_polynomial_ideal(const MonomialIdeal& ideal, int m, int n,
                               int generator_cap) {
  return LaurentPoly::constant(m, n, 1) - k_polynomial_quotient(ideal, m, n, generator_cap);
}

LaurentPoly SchurExpansion::reassemble(int m, int n) const {
  LaurentPoly out(m, n);
  for (const auto& [shape, coeff] : coeffs_)
    out = out + coeff * schur_polynomial(shape, m, n);
  return out;
}

std::string SchurExpansion::to_string() const {
  // one line per shape, every u-term explicitly signed:
  //   shape 3,2: +u[1]^4*u[2] +u[1]^3*u[2]^2
  std::ostringstream os;
  for (const auto& [shape, coeff] : coeffs_) {
    os << "shape " << shape.to_string() << ':';
    for (auto it = coeff.terms().rbegin(); it != coeff.terms().rend(); ++it) {
      const auto& [e, c] = *it;
      long long a = c < 0 ? -c : c;
      os << ' ' << (c < 0 ? '-' : '+');
      std::string vars;
      for (int i = 0; i < coeff.m(); ++i) {
        if (e[static_cast<size_t>(i)] == 0) continue;
        if (!vars.empty()) vars += '*';
        vars += "u[" + std::to_string(i + 1) + "]";
        if (e[static_cast<size_t>(i)] != 1)
          vars += "^" + std::to_string(e[static_cast<size_t>(i)]);
      }
      if (vars.empty()) {
        os << a;
      } else {
        if (a != 1) os << a << '*';
        os << vars;
      }
    }
    os << '\n';
  }
  return os.str();
}

SchurExpansion schur_expand(const LaurentPoly& k) {
  if (!k.symmetric_in_v())
    fail(Errc::NotSymmetric, "input is not symmetric in the v-variables");
  const int m = k.m(), n = k.n();
  SchurExpansion out;
  LaurentPoly rest = k;
  while (!rest.is_zero()) {
    // Pick the stratum of highest v-degree, then the lex-largest v-exponent.
    int best_deg = -1;
    std::vector<int> best_v;
    for (const auto& [e, c] : rest.terms()) {
      std::vector<int> v(e.begin() + m, e.end());
      int deg = 0;
      for (int x : v) deg += x;
      if (deg > best_deg || (deg == best_deg && v > best_v)) {
        best_deg = deg;
        best_v = v;
      }
    }
    for (size_t i = 0; i + 1 < best_v.size(); ++i)
      if (best_v[i] < best_v[i + 1])
        fail(Errc::NotSymmetric, "leading v-exponent is not weakly decreasing");
    for (int x : best_v)
      if (x < 0) fail(Errc::NotSymmetric, "negative v-exponent cannot be expanded");

    // best_v is the transpose of the shape whose Schur polynomial leads here.
    std::vector<int> vparts;
    for (int x : best_v)
      if (x > 0) vparts.push_back(x);
    Shape transposed(vparts);
    Shape shape = transposed.empty() ? Shape() : transposed.transpose();

    // u-Laurent coefficient of v^best_v
    LaurentPoly coeff(m, n);
    for (const auto& [e, c] : rest.terms()) {
      std::vector<int> v(e.begin() + m, e.end());
      if (v == best_v) {
        std::vector<int> ue(e.begin(), e.begin() + m);
        ue.resize(static_cast<size_t>(m + n), 0);
        coeff.add_term(ue, c);
      }
    }
    rest = rest - coeff * schur_polynomial(shape, m, n);
    auto [it, inserted] = out.coeffs_.emplace(shape, coeff);
    if (!inserted) it->second = it->second + coeff;
  }
  return out;
}

Report hilbert_check(const MonomialIdeal& ideal, int m, int n, int degree_bound,
                     int generator_cap) {
  require_wide(m, n);
  Report rep;
  LaurentPoly kq = k_polynomial_quotient(ideal, m, n, generator_cap);

  for (int d = 0; d <= degree_bound; ++d) {
    for (const Bidegree& b : bidegrees_of_total(m, n, d)) {
      // Predicted coefficient of hilb(R/I) = K(R/I) / prod (1 - u_i v_j).
      long long predicted = 0;
      for (const auto& [e, c] : kq.terms()) {
        Bidegree shift(std::vector<int>(e.begin(), e.begin() + m),
                       std::vector<int>(e.begin() + m, e.end()));
        Bidegree rest = b.minus(shift);
        if (!rest.nonnegative() || !rest.balanced()) continue;
        predicted += c * count_monomials(rest);
      }
      long long actual = 0;
      for_each_monomial(b, [&](const Monomial& w) {
        if (!ideal.member(w)) ++actual;
      });
      std::ostringstream line;
      line << "bidegree=" << b.to_string() << " predicted=" << predicted
           << " actual=" << actual;
      if (predicted == actual)
        rep.pass(line.str());
      else
        rep.fail(line.str());
    }
  }
  return rep;
}

}  // namespace detkrs

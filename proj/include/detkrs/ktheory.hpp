#pragma once

#include <map>
#include <string>
#include <vector>

#include "detkrs/monomial_ideal.hpp"
#include "detkrs/report.hpp"
#include "detkrs/shape.hpp"

namespace detkrs {

/// An integer-coefficient Laurent polynomial in u_1..u_m, v_1..v_n, stored
/// as exponent vectors (u part then v part) with nonzero coefficients.
class LaurentPoly {
 public:
  LaurentPoly(int m, int n) : m_(m), n_(n) {}

  int m() const { return m_; }
  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, long long>& terms() const { return terms_; }

  static LaurentPoly constant(int m, int n, long long c);
  static LaurentPoly u_monomial(int m, int n, const std::vector<int>& uexp,
                                long long c = 1);

  void add_term(const std::vector<int>& exp, long long c);
  long long coefficient(const std::vector<int>& exp) const;

  LaurentPoly operator+(const LaurentPoly& other) const;
  LaurentPoly operator-(const LaurentPoly& other) const;
  LaurentPoly operator*(const LaurentPoly& other) const;
  LaurentPoly operator*(long long c) const;

  /// Invariance under permutations of the v-exponents.
  bool symmetric_in_v() const;

  std::string to_string() const;

  bool operator==(const LaurentPoly&) const = default;

 private:
  int m_;
  int n_;
  std::map<std::vector<int>, long long> terms_;
};

/// Generating function over fillings of the shape with strictly increasing
/// rows and weakly increasing columns, entries in 1..n; equals the classical
/// Schur polynomial of the transposed shape. v-variables only.
LaurentPoly schur_polynomial(const Shape& s, int m, int n);

/// K-polynomial of the quotient R/I via the Taylor complex: the alternating
/// subset sum of the generator-lcm bidegrees. Requires m >= n.
LaurentPoly k_polynomial_quotient(const MonomialIdeal& ideal, int m, int n,
                                  int generator_cap = 20);
/// K(I) = 1 - K(R/I).
LaurentPoly k_polynomial_ideal(const MonomialIdeal& ideal, int m, int n,
                               int generator_cap = 20);

/// The unique expansion of a v-symmetric Laurent polynomial over Schur
/// polynomials with u-Laurent coefficients.
class SchurExpansion {
 public:
  using Map = std::map<Shape, LaurentPoly>;
  const Map& coefficients() const { return coeffs_; }
  LaurentPoly reassemble(int m, int n) const;
  std::string to_string() const;

  friend SchurExpansion schur_expand(const LaurentPoly& k);

 private:
  Map coeffs_;
};

SchurExpansion schur_expand(const LaurentPoly& k);

/// Checks that K(R/I) times the Hilbert series of R reproduces the monomial
/// counts of R/I in every bidegree of total degree <= bound.
Report hilbert_check(const MonomialIdeal& ideal, int m, int n, int degree_bound,
                     int generator_cap = 20);

}  // namespace detkrs

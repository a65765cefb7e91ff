#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

#include "detkrs/monomial.hpp"
#include "detkrs/tableaux.hpp"

namespace detkrs {

using Rational = mpq_class;

/// A sparse polynomial in the x_ij with exact rational coefficients. Terms
/// are kept in descending diagonal order, so begin() is the leading term.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, DiagGreater>;

  Polynomial() = default;
  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(const Rational& c);
  static Polynomial term(const Monomial& mono, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  size_t num_terms() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rational coefficient(const Monomial& mono) const;

  void add_term(const Monomial& mono, const Rational& c);

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);

  /// Throws ZeroPolynomial on the zero polynomial.
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  /// The common bidegree of all terms, or nullopt if inhomogeneous.
  std::optional<Bidegree> homogeneous_bidegree(int m, int n) const;

  std::string to_string() const;

  bool operator==(const Polynomial&) const = default;

 private:
  TermMap terms_;
};

/// Leibniz expansion of a minor; the empty minor expands to 1.
Polynomial expand_minor(const Minor& minor);
/// Product of the factor expansions; homogeneous of bidegree = content.
Polynomial expand_bitableau(const Bitableau& bt);

}  // namespace detkrs

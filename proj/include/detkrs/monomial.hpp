#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "detkrs/bidegree.hpp"

namespace detkrs {

/// A monomial in the matrix indeterminates x_ij, stored sparsely as
/// (row, col, exponent) triples sorted by (row, col). Indices are 1-based.
class Monomial {
 public:
  struct VarExp {
    int row;
    int col;
    int exp;
    auto operator<=>(const VarExp&) const = default;
  };

  Monomial() = default;

  static Monomial one() { return Monomial(); }
  static Monomial variable(int row, int col, int exp = 1);

  bool is_one() const { return factors_.empty(); }
  int total_degree() const;
  int exponent(int row, int col) const;
  const std::vector<VarExp>& factors() const { return factors_; }

  Bidegree bidegree(int m, int n) const;
  /// Largest row/column index with a nonzero exponent (0 when trivial).
  int max_row() const;
  int max_col() const;

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// Exact quotient other / this is not provided; this computes *this / other
  /// and requires other | *this.
  Monomial quotient(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  std::string to_string() const;

  bool operator==(const Monomial&) const = default;

 private:
  void push(int row, int col, int exp);
  std::vector<VarExp> factors_;

  friend int diag_cmp(const Monomial&, const Monomial&);
};

/// Comparison in the diagonal (lexicographic) order with variable priority
/// x_{1,1} > x_{1,2} > ... > x_{1,n} > x_{2,1} > ... > x_{m,n}.
/// Returns +1 when a is larger, -1 when smaller, 0 when equal.
/// Under this order the leading monomial of any minor is its main diagonal.
int diag_cmp(const Monomial& a, const Monomial& b);

struct DiagGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return diag_cmp(a, b) > 0;
  }
};
struct DiagLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return diag_cmp(a, b) < 0;
  }
};

/// Parses the canonical text form "x[1,1]^2*x[2,3]"; "1" is the empty monomial.
Monomial parse_monomial(const std::string& text);

/// Enumerates all monomials of the given bidegree (nonnegative integer
/// matrices with prescribed row and column sums), in a fixed deterministic
/// order.
void for_each_monomial(const Bidegree& b, const std::function<void(const Monomial&)>& fn);
std::vector<Monomial> monomials_of_bidegree(const Bidegree& b);
long long count_monomials(const Bidegree& b);

}  // namespace detkrs

#pragma once

#include <set>
#include <vector>

#include "detkrs/polynomial.hpp"

namespace detkrs {

/// A reduced echelon basis of a finite-dimensional space of polynomials:
/// rows are monic with pairwise distinct leading monomials, and no row
/// contains another row's leading monomial.
class EchelonBasis {
 public:
  /// Fully reduces p against the basis; inserts the (monic) remainder when it
  /// is nonzero and back-reduces the other rows. Returns true if the
  /// dimension grew.
  bool insert(Polynomial p);

  Polynomial reduce(Polynomial p) const;
  bool contains(const Polynomial& p) const { return reduce(p).is_zero(); }

  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Polynomial>& rows() const { return rows_; }
  std::set<Monomial, DiagGreater> leading_monomials() const;

 private:
  std::vector<Polynomial> rows_;
  std::map<Monomial, size_t, DiagGreater> pivots_;
};

/// Expresses target in the span of basis: returns coefficients c with
/// target = sum c_i basis_i, or nullopt when target is outside the span.
/// The basis need not be independent; one valid combination is returned.
std::optional<std::vector<Rational>> solve_in_span(
    const std::vector<Polynomial>& basis, const Polynomial& target);

/// Basis of the intersection of span(u) with the space carried by v.
std::vector<Polynomial> intersect_spaces(const std::vector<Polynomial>& u,
                                         const EchelonBasis& v);

/// Rank of a dense rational matrix.
int matrix_rank(std::vector<std::vector<Rational>> mat);

/// Basis of the right kernel {c : mat * c = 0} of a dense rational matrix
/// with ncols columns.
std::vector<std::vector<Rational>> matrix_kernel(
    std::vector<std::vector<Rational>> mat, size_t ncols);

}  // namespace detkrs

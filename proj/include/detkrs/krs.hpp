#pragma once

#include <string>
#include <vector>

#include "detkrs/monomial.hpp"
#include "detkrs/shape.hpp"
#include "detkrs/tableaux.hpp"

namespace detkrs {

/// Product of the main-diagonal indeterminates of a minor / of all factors.
Monomial diag(const Minor& minor);
Monomial diag(const Bitableau& bt);

/// One column (ell, r, rho) of the three-row deletion record. rho = 0 means
/// "no mark"; rho = k records that tableau row k of the tracked superstandard
/// region was hit in that step.
struct KrsColumn {
  int ell;
  int r;
  int rho;
  auto operator<=>(const KrsColumn&) const = default;
};

/// The full three-row array, columns listed left to right (last deletion
/// first). Reading the second row left to right the entries weakly increase,
/// and ties have weakly decreasing first-row entries.
class KrsArray {
 public:
  KrsArray() = default;
  explicit KrsArray(std::vector<KrsColumn> cols);

  const std::vector<KrsColumn>& columns() const { return cols_; }
  bool empty() const { return cols_.empty(); }
  Monomial monomial() const;

  /// Three whitespace-aligned rows of integers.
  std::string to_string() const;

 private:
  std::vector<KrsColumn> cols_;
};

struct KrsStep {
  Bitableau rest;
  int ell;
  int r;
  int rho;
};

/// One deletion step: removes the box of the largest right entry (bottom-most
/// occurrence), pushes the freed left entry up through the rows, and reports
/// (ell, r) together with the row mark of the tracked region. Pass the empty
/// shape to disable marks.
KrsStep krs_step(const Bitableau& sigma, const Shape& marks = Shape());

/// Runs the deletion to exhaustion and collects the three-row array.
KrsArray krs_array(const Bitableau& sigma, const Shape& marks = Shape());

/// The bijection standard bitableaux -> monomials.
Monomial krs(const Bitableau& sigma);

/// Inverse of krs: total on monomials. Factors are inserted in the order
/// (r ascending, ell descending), reversing the push-out.
Bitableau krs_insert(const Monomial& mono);

/// A bitableau with row superstandard left tableau of shape s whose diagonal
/// divides krs(sigma), assembled from the marked subarrays.
Bitableau extract_witness(const Bitableau& sigma, const Shape& s, int m, int n);

}  // namespace detkrs

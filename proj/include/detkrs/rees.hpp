#pragma once

#include <string>
#include <vector>

#include "detkrs/monomial.hpp"
#include "detkrs/polynomial.hpp"
#include "detkrs/report.hpp"
#include "detkrs/tableaux.hpp"

namespace detkrs {

/// A row-initial minor [a_1..a_s] = [1..s | a_1..a_s], recorded by its
/// column list. The partial order is the one inherited from minors.
class LatticeElement {
 public:
  LatticeElement() = default;
  explicit LatticeElement(std::vector<int> cols);

  int size() const { return static_cast<int>(cols_.size()); }
  const std::vector<int>& cols() const { return cols_; }
  int col(int i) const { return cols_.at(static_cast<size_t>(i - 1)); }

  Minor minor() const;
  Monomial diag_monomial() const;

  std::string to_string() const;  // p[a1 a2 ..]

  bool operator==(const LatticeElement&) const = default;

 private:
  std::vector<int> cols_;
};

bool lattice_leq(const LatticeElement& a, const LatticeElement& b);
bool lattice_incomparable(const LatticeElement& a, const LatticeElement& b);
LatticeElement lattice_meet(const LatticeElement& a, const LatticeElement& b);
LatticeElement lattice_join(const LatticeElement& a, const LatticeElement& b);

/// Linear extension used for the presentation order: size descending, then
/// colexicographic on column lists. Returns negative/zero/positive.
int lattice_linear_cmp(const LatticeElement& a, const LatticeElement& b);

struct LatticeLinearLess {
  bool operator()(const LatticeElement& a, const LatticeElement& b) const {
    return lattice_linear_cmp(a, b) < 0;
  }
};

/// Display ordering (size descending, then lexicographic); also a linear
/// extension of the lattice order.
struct LatticeDisplayLess {
  bool operator()(const LatticeElement& a, const LatticeElement& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.cols() < b.cols();
  }
};

/// All elements [a_1..a_s], 1 <= s <= min(m,n), sorted by the linear
/// extension.
std::vector<LatticeElement> lattice_elements(int m, int n);

/// A monomial of the presentation ring P = R[p_a]: an x-part and a multiset
/// of lattice elements, kept sorted by the linear extension.
struct PMonomial {
  Monomial x;
  std::vector<LatticeElement> ps;

  PMonomial() = default;
  PMonomial(Monomial x_part, std::vector<LatticeElement> p_part);

  int p_degree() const { return static_cast<int>(ps.size()); }
  std::string to_string() const;
  bool operator==(const PMonomial&) const = default;
};

/// Graded reverse-lexicographic comparison on P with the p-variables ordered
/// by the linear extension below the x-variables. Under this order the lead
/// side of every generated relation is initial.
int presentation_cmp(const PMonomial& a, const PMonomial& b);

/// A binomial lead - trail of the presentation ideal; lead is the initial
/// term.
struct ReesBinomial {
  PMonomial lead;
  PMonomial trail;
  std::string to_string() const;
};

/// One binomial p_a p_b - p_{a^b} p_{avb} per incomparable pair.
std::vector<ReesBinomial> hibi_relations(int m, int n);

/// The relations x_ij p_a - x_{i,a_i} p_b with a_{i-1} < j < a_i and
/// b = a minus {a_i} plus {j}.
std::vector<ReesBinomial> degree_one_relations(int m, int n);

/// Image of a presentation monomial under Phi (diagonals) as an x-monomial
/// with a y-exponent vector, and under Psi (expanded minors) as a polynomial
/// with a y-exponent vector.
struct XYMonomial {
  Monomial x;
  std::vector<int> y;
  auto operator<=>(const XYMonomial&) const = default;
};
XYMonomial phi_image(const PMonomial& pm, int m, int n);
std::pair<Polynomial, std::vector<int>> psi_image(const PMonomial& pm, int m, int n);

/// Kernel certification by counting: every generated binomial lies in
/// ker Phi, and in each multidegree (x-degree, p-degrees by size) the
/// monomials avoiding all lead terms are in bijection with the distinct
/// Phi-images. Also cross-checks the normal-form description of the
/// standard monomials.
Report kernel_check(int m, int n, int max_p_degree, int max_x_degree);

/// Straightens [a][b] for an incomparable pair and certifies the lift: the
/// meet-join product occurs (coefficient recorded, flagged when not 1), and
/// every other standard summand has strictly smaller leading monomial.
Report lift_check_pair(const LatticeElement& a, const LatticeElement& b, int m, int n);

/// Runs lift_check_pair over every incomparable pair of the lattice.
Report lift_check(int m, int n);

LatticeElement parse_lattice_element(const std::string& text, char open = '[');

}  // namespace detkrs

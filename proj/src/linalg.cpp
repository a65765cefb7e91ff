#include "detkrs/linalg.hpp"

#include <algorithm>

namespace detkrs {

Polynomial EchelonBasis::reduce(Polynomial p) const {
  bool changed = true;
  while (changed && !p.is_zero()) {
    changed = false;
    for (const auto& [mono, cref] : p.terms()) {
      auto it = pivots_.find(mono);
      if (it != pivots_.end()) {
        const Rational c = cref;
        p -= rows_[it->second] * c;
        changed = true;
        break;
      }
    }
  }
  return p;
}

bool EchelonBasis::insert(Polynomial p) {
  p = reduce(std::move(p));
  if (p.is_zero()) return false;
  p = p * (Rational(1) / p.leading_coefficient());
  const Monomial lm = p.leading_monomial();
  for (auto& row : rows_) {
    Rational c = row.coefficient(lm);
    if (c != 0) row -= p * c;
  }
  rows_.push_back(std::move(p));
  pivots_[lm] = rows_.size() - 1;
  return true;
}

std::set<Monomial, DiagGreater> EchelonBasis::leading_monomials() const {
  std::set<Monomial, DiagGreater> out;
  for (const auto& [mono, idx] : pivots_) out.insert(mono);
  return out;
}

std::optional<std::vector<Rational>> solve_in_span(
    const std::vector<Polynomial>& basis, const Polynomial& target) {
  // Echelon rows carry the combination of the original basis that produced
  // them, so reducing the target tracks its coordinates.
  struct TrackedRow {
    Polynomial poly;
    std::vector<Rational> combo;
  };
  std::vector<TrackedRow> rows;
  std::map<Monomial, size_t, DiagGreater> pivots;

  auto reduce_tracked = [&](Polynomial p, std::vector<Rational> combo) {
    bool changed = true;
    while (changed && !p.is_zero()) {
      changed = false;
      for (const auto& [mono, cref] : p.terms()) {
        auto it = pivots.find(mono);
        if (it != pivots.end()) {
          const Rational c = cref;  // the subtraction erases the referenced entry
          const TrackedRow& row = rows[it->second];
          p -= row.poly * c;
          for (size_t k = 0; k < combo.size(); ++k) combo[k] -= row.combo[k] * c;
          changed = true;
          break;
        }
      }
    }
    return TrackedRow{std::move(p), std::move(combo)};
  };

  const size_t nb = basis.size();
  for (size_t i = 0; i < nb; ++i) {
    std::vector<Rational> unit(nb, Rational(0));
    unit[i] = 1;
    TrackedRow r = reduce_tracked(basis[i], std::move(unit));
    if (r.poly.is_zero()) continue;
    Rational inv = Rational(1) / r.poly.leading_coefficient();
    r.poly = r.poly * inv;
    for (auto& c : r.combo) c *= inv;
    pivots[r.poly.leading_monomial()] = rows.size();
    rows.push_back(std::move(r));
  }

  TrackedRow res = reduce_tracked(target, std::vector<Rational>(nb, Rational(0)));
  if (!res.poly.is_zero()) return std::nullopt;
  for (auto& c : res.combo) c = -c;
  return res.combo;
}

std::vector<Polynomial> intersect_spaces(const std::vector<Polynomial>& u,
                                         const EchelonBasis& v) {
  // Residuals of u mod v; kernel combinations of the residuals give exactly
  // the elements of span(u) lying in v.
  std::vector<Polynomial> residuals;
  residuals.reserve(u.size());
  for (const auto& p : u) residuals.push_back(v.reduce(p));

  std::map<Monomial, size_t, DiagGreater> columns;
  for (const auto& r : residuals)
    for (const auto& [mono, c] : r.terms())
      if (!columns.count(mono)) columns.emplace(mono, columns.size());

  std::vector<std::vector<Rational>> mat;
  for (const auto& r : residuals) {
    std::vector<Rational> row(columns.size(), Rational(0));
    for (const auto& [mono, c] : r.terms()) row[columns.at(mono)] = c;
    mat.push_back(std::move(row));
  }
  // Kernel of the transpose: combinations over the residual rows.
  std::vector<std::vector<Rational>> tr(columns.size(),
                                        std::vector<Rational>(u.size(), Rational(0)));
  for (size_t i = 0; i < mat.size(); ++i)
    for (size_t j = 0; j < columns.size(); ++j) tr[j][i] = mat[i][j];

  std::vector<Polynomial> out;
  for (const auto& combo : matrix_kernel(std::move(tr), u.size())) {
    Polynomial p;
    for (size_t i = 0; i < u.size(); ++i)
      if (combo[i] != 0) p += u[i] * combo[i];
    if (!p.is_zero()) out.push_back(std::move(p));
  }
  return out;
}

int matrix_rank(std::vector<std::vector<Rational>> mat) {
  if (mat.empty()) return 0;
  const size_t ncols = mat[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < ncols && rank < mat.size(); ++col) {
    size_t pivot = rank;
    while (pivot < mat.size() && mat[pivot][col] == 0) ++pivot;
    if (pivot == mat.size()) continue;
    std::swap(mat[rank], mat[pivot]);
    Rational inv = Rational(1) / mat[rank][col];
    for (size_t j = col; j < ncols; ++j) mat[rank][j] *= inv;
    for (size_t i = 0; i < mat.size(); ++i) {
      if (i == rank || mat[i][col] == 0) continue;
      Rational f = mat[i][col];
      for (size_t j = col; j < ncols; ++j) mat[i][j] -= f * mat[rank][j];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

std::vector<std::vector<Rational>> matrix_kernel(
    std::vector<std::vector<Rational>> mat, size_t ncols) {
  // Row reduce, then read free columns.
  std::vector<size_t> pivot_col;
  size_t rank = 0;
  for (size_t col = 0; col < ncols && rank < mat.size(); ++col) {
    size_t pivot = rank;
    while (pivot < mat.size() && mat[pivot][col] == 0) ++pivot;
    if (pivot == mat.size()) continue;
    std::swap(mat[rank], mat[pivot]);
    Rational inv = Rational(1) / mat[rank][col];
    for (size_t j = 0; j < ncols; ++j) mat[rank][j] *= inv;
    for (size_t i = 0; i < mat.size(); ++i) {
      if (i == rank || mat[i][col] == 0) continue;
      Rational f = mat[i][col];
      for (size_t j = 0; j < ncols; ++j) mat[i][j] -= f * mat[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (size_t c : pivot_col) is_pivot[c] = true;

  std::vector<std::vector<Rational>> kernel;
  for (size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> vec(ncols, Rational(0));
    vec[free] = 1;
    for (size_t r = 0; r < pivot_col.size(); ++r) vec[pivot_col[r]] = -mat[r][free];
    kernel.push_back(std::move(vec));
  }
  return kernel;
}

}  // namespace detkrs

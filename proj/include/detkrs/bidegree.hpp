#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

namespace detkrs {

/// A ZZ^m (+) ZZ^n degree: multiplicities of row and column indices.
struct Bidegree {
  std::vector<int> rows;
  std::vector<int> cols;

  Bidegree() = default;
  Bidegree(std::vector<int> r, std::vector<int> c)
      : rows(std::move(r)), cols(std::move(c)) {}

  int row_total() const;
  int col_total() const;
  /// Common total degree; valid when row_total() == col_total().
  int total() const { return row_total(); }

  bool nonnegative() const;
  bool balanced() const { return row_total() == col_total(); }

  /// Componentwise b - other; sizes must match.
  Bidegree minus(const Bidegree& other) const;
  bool dominates(const Bidegree& other) const;

  std::string to_string() const;

  auto operator<=>(const Bidegree&) const = default;
};

/// All compositions of total into len nonnegative parts, lexicographic.
std::vector<std::vector<int>> compositions(int total, int len);

/// All bidegrees on an m x n ambient with the given total degree.
std::vector<Bidegree> bidegrees_of_total(int m, int n, int total);

}  // namespace detkrs

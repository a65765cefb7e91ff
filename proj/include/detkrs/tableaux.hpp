#pragma once

#include <compare>
#include <string>
#include <vector>

#include "detkrs/bidegree.hpp"
#include "detkrs/error.hpp"
#include "detkrs/shape.hpp"

namespace detkrs {

/// A minor [a_1..a_t | b_1..b_t] of the generic matrix: strictly increasing
/// row and column index lists of equal length. The empty minor denotes 1.
class Minor {
 public:
  Minor() = default;
  /// Throws NonIncreasingIndices / LengthMismatch / IndexOutOfRange.
  Minor(std::vector<int> rows, std::vector<int> cols);

  int size() const { return static_cast<int>(rows_.size()); }
  bool empty() const { return rows_.empty(); }
  const std::vector<int>& rows() const { return rows_; }
  const std::vector<int>& cols() const { return cols_; }
  /// 1-based access.
  int row(int i) const { return rows_.at(static_cast<size_t>(i - 1)); }
  int col(int i) const { return cols_.at(static_cast<size_t>(i - 1)); }

  std::string to_string() const;

  /// Size-lexicographic ordering: larger minors first, then row and column
  /// lists; the straightening order refines it on comparable pairs.
  std::strong_ordering operator<=>(const Minor& other) const {
    if (rows_.size() != other.rows_.size())
      return rows_.size() > other.rows_.size() ? std::strong_ordering::less
                                               : std::strong_ordering::greater;
    if (auto c = rows_ <=> other.rows_; c != 0) return c;
    return cols_ <=> other.cols_;
  }
  bool operator==(const Minor&) const = default;

 private:
  std::vector<int> rows_;
  std::vector<int> cols_;
};

/// The straightening partial order: a <= b iff |a| >= |b| and the first |b|
/// row and column indices of a are componentwise <= those of b.
bool minor_leq(const Minor& a, const Minor& b);

/// A product of minors with weakly decreasing sizes. Factors of equal size
/// keep their given order; empty minors are retained but ignored by shape().
class Bitableau {
 public:
  Bitableau() = default;
  explicit Bitableau(std::vector<Minor> factors);

  const std::vector<Minor>& factors() const { return factors_; }
  int num_factors() const { return static_cast<int>(factors_.size()); }
  bool empty() const;

  /// Sizes of the nonempty factors.
  Shape shape() const;
  int total_boxes() const;
  /// Multiplicities of the row and column indices.
  Bidegree content(int m, int n) const;

  /// True iff the factors form a chain in the minor order.
  bool is_standard() const;

  /// Factors sorted canonically within equal sizes (value-object form).
  Bitableau canonical() const;

  std::string to_string() const;

  auto operator<=>(const Bitableau&) const = default;

 private:
  std::vector<Minor> factors_;
};

/// True iff for i = 1..v the first s_i row indices of factor i are exactly
/// 1..s_i (the prefix subtableau is row superstandard of the given shape).
bool contains_superstandard(const Bitableau& sigma, const Shape& s);
/// Same predicate; throws ShapeExceedsAmbient when a part exceeds min(m,n).
bool contains_superstandard(const Bitableau& sigma, const Shape& s, int m, int n);

/// Range-checks all indices against the ambient matrix size.
void check_ambient(const Minor& minor, int m, int n);
void check_ambient(const Bitableau& bt, int m, int n);

/// All standard bitableaux with the given content, each exactly once, sorted
/// canonically. Contents that are unbalanced or negative give an empty list.
/// Throws DegreeBoundExceeded when more than cap tableaux would be produced.
std::vector<Bitableau> enumerate_standard(int m, int n, const Bidegree& content,
                                          long long cap = 1000000);

Minor parse_minor(const std::string& text);
Bitableau parse_bitableau(const std::string& text);

}  // namespace detkrs

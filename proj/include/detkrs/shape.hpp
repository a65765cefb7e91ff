#pragma once

#include <compare>
#include <string>
#include <vector>

#include "detkrs/error.hpp"

namespace detkrs {

/// A weakly decreasing sequence of positive integers (s_1,...,s_v).
/// The empty shape is allowed and denotes the trivial case.
class Shape {
 public:
  Shape() = default;

  /// Throws InvalidShape unless parts are positive and weakly decreasing.
  explicit Shape(std::vector<int> parts);

  static Shape rectangle(int part, int repeats);

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int num_parts() const { return static_cast<int>(parts_.size()); }
  /// 1-based part access; parts beyond the last are 0.
  int part(int i) const;
  int total() const;
  int max_part() const { return parts_.empty() ? 0 : parts_.front(); }

  /// Transposed shape: part j of the transpose is #{i : s_i >= j}.
  Shape transpose() const;

  /// The distinct parts t_1 > ... > t_u together with e_i = max{j : s_j = t_i}
  /// (1-based position of the last occurrence of t_i).
  std::vector<std::pair<int, int>> primary_exponents() const;

  std::string to_string() const;

  auto operator<=>(const Shape&) const = default;

 private:
  std::vector<int> parts_;
};

/// Parses a comma list such as "3,2"; "" and "-" denote the empty shape.
Shape parse_shape(const std::string& text);

/// All shapes of the given total with parts bounded by max_part.
std::vector<Shape> shapes_of_total(int total, int max_part);

}  // namespace detkrs

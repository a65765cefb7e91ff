#pragma once

#include <string>
#include <vector>

#include "detkrs/monomial.hpp"

namespace detkrs {

/// A monomial ideal held by its minimal generators (an antichain under
/// divisibility, sorted in descending diagonal order).
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(std::vector<Monomial> gens);

  bool is_zero() const { return gens_.empty(); }
  const std::vector<Monomial>& generators() const { return gens_; }
  int num_generators() const { return static_cast<int>(gens_.size()); }

  bool member(const Monomial& w) const;
  MonomialIdeal product(const MonomialIdeal& other) const;
  MonomialIdeal intersect(const MonomialIdeal& other) const;
  MonomialIdeal power(int e) const;

  /// Degrees of the minimal generators all agree; -1 when mixed or zero.
  int generation_degree() const;
  Monomial lcm_of_generators() const;

  /// Equality of the graded pieces up to the given total degree.
  bool equal_up_to(const MonomialIdeal& other, int degree_bound) const;

  std::string to_string() const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  std::vector<Monomial> gens_;
};

}  // namespace detkrs

#include <doctest.h>

#include "detkrs/ideals.hpp"
#include "detkrs/ktheory.hpp"

using namespace detkrs;

namespace {
Monomial var(int i, int j, int e = 1) { return Monomial::variable(i, j, e); }

std::vector<int> uv(std::vector<int> u, std::vector<int> v) {
  u.insert(u.end(), v.begin(), v.end());
  return u;
}
}  // namespace

TEST_CASE("schur polynomials in the strict-row convention") {
  LaurentPoly s1 = schur_polynomial(Shape({1}), 3, 3);
  CHECK(s1.coefficient(uv({0, 0, 0}, {1, 0, 0})) == 1);
  CHECK(s1.coefficient(uv({0, 0, 0}, {0, 1, 0})) == 1);
  CHECK(s1.coefficient(uv({0, 0, 0}, {0, 0, 1})) == 1);
  CHECK(s1.terms().size() == 3);

  LaurentPoly s33 = schur_polynomial(Shape({3, 3}), 3, 3);
  CHECK(s33.terms().size() == 1);
  CHECK(s33.coefficient(uv({0, 0, 0}, {2, 2, 2})) == 1);

  LaurentPoly s21 = schur_polynomial(Shape({2, 1}), 3, 3);
  long long total = 0;
  for (const auto& [e, c] : s21.terms()) total += c;
  CHECK(total == 8);
  CHECK(s21.coefficient(uv({0, 0, 0}, {2, 1, 0})) == 1);
  CHECK(s21.coefficient(uv({0, 0, 0}, {1, 1, 1})) == 2);
  CHECK(s21.symmetric_in_v());

  CHECK_THROWS_AS(schur_polynomial(Shape({4}), 3, 3), Error);
  CHECK_THROWS_AS(schur_polynomial(Shape({1}), 2, 3), Error);
}

TEST_CASE("schur polynomials agree with the transposed bialternant") {
  // Independent oracle: the classical Schur polynomial of the transposed
  // shape as a ratio of alternants, evaluated at exact rational points.
  const Rational sample[3] = {Rational(2), Rational(1, 3), Rational(5, 7)};
  auto det3 = [](Rational a[3][3]) -> Rational {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  };
  auto rpow = [](const Rational& x, int e) {
    Rational out(1);
    for (int k = 0; k < e; ++k) out *= x;
    return out;
  };

  int tested = 0;
  for (int total = 1; total <= 9; ++total) {
    for (const Shape& s : shapes_of_total(total, 3)) {
      if (s.num_parts() > 3) continue;
      Shape lambda = s.transpose();
      Rational num[3][3], den[3][3];
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          num[i][j] = rpow(sample[i], lambda.part(j + 1) + 2 - j);
          den[i][j] = rpow(sample[i], 2 - j);
        }
      Rational oracle = det3(num) / det3(den);

      Rational mine(0);
      LaurentPoly sp = schur_polynomial(s, 3, 3);
      for (const auto& [e, c] : sp.terms()) {
        Rational term(static_cast<long>(c));
        for (int j = 0; j < 3; ++j) term *= rpow(sample[j], e[static_cast<size_t>(3 + j)]);
        mine += term;
      }
      CHECK(mine == oracle);
      ++tested;
    }
  }
  CHECK(tested == 19);
}

TEST_CASE("K-polynomial of a principal ideal") {
  MonomialIdeal principal({var(1, 1)});
  LaurentPoly kq = k_polynomial_quotient(principal, 1, 1);
  CHECK(kq.coefficient(uv({0}, {0})) == 1);
  CHECK(kq.coefficient(uv({1}, {1})) == -1);
  CHECK(kq.terms().size() == 2);

  // the square of a maximal minor diagonal on a 2x2 ambient
  MonomialIdeal sq = diagonal_ideal(2, 2, Shape({2, 2}));
  LaurentPoly ki = k_polynomial_ideal(sq, 2, 2);
  CHECK(ki.terms().size() == 1);
  CHECK(ki.coefficient(uv({2, 2}, {2, 2})) == 1);
}

TEST_CASE("K-polynomial ignores generator order and the cap works") {
  MonomialIdeal a({var(1, 1) * var(2, 2), var(1, 2) * var(2, 3), var(1, 1) * var(2, 3)});
  MonomialIdeal b({var(1, 2) * var(2, 3), var(1, 1) * var(2, 3), var(1, 1) * var(2, 2)});
  CHECK(k_polynomial_quotient(a, 3, 3) == k_polynomial_quotient(b, 3, 3));
  CHECK_THROWS_AS(k_polynomial_quotient(diagonal_ideal(3, 3, Shape({2, 1})), 3, 3, 4),
                  Error);
  CHECK_THROWS_AS(k_polynomial_quotient(a, 2, 3), Error);  // needs m >= n
}

TEST_CASE("schur expansion basics") {
  LaurentPoly one = LaurentPoly::constant(3, 3, 1);
  SchurExpansion e0 = schur_expand(one);
  REQUIRE(e0.coefficients().size() == 1);
  CHECK(e0.coefficients().begin()->first == Shape());
  CHECK(e0.coefficients().begin()->second == one);

  for (const Shape& s : {Shape({1}), Shape({2, 1}), Shape({3, 2})}) {
    SchurExpansion e = schur_expand(schur_polynomial(s, 3, 3));
    REQUIRE(e.coefficients().size() == 1);
    CHECK(e.coefficients().begin()->first == s);
    CHECK(e.coefficients().begin()->second == LaurentPoly::constant(3, 3, 1));
  }

  LaurentPoly asym(2, 2);
  asym.add_term(uv({0, 0}, {1, 0}), 1);
  CHECK_THROWS_AS(schur_expand(asym), Error);
}

TEST_CASE("schur expansion round trips") {
  LaurentPoly mix = schur_polynomial(Shape({2, 1}), 3, 3) * 3 -
                    LaurentPoly::u_monomial(3, 3, {1, 2, 0}) *
                        schur_polynomial(Shape({2, 2}), 3, 3);
  SchurExpansion e = schur_expand(mix);
  CHECK(e.reassemble(3, 3) == mix);
}

TEST_CASE("the worked K-polynomial expansion for shape (2,1)") {
  MonomialIdeal ini = diagonal_ideal(3, 3, Shape({2, 1}));
  CHECK(ini.num_generators() == 8);
  CHECK(ini.lcm_of_generators() ==
        var(1, 1, 2) * var(1, 2, 2) * var(2, 2) * var(1, 3) * var(2, 3));

  LaurentPoly ki = k_polynomial_ideal(ini, 3, 3);
  SchurExpansion e = schur_expand(ki);

  SchurExpansion::Map expected;
  auto u = [](std::vector<int> exps, long long c) {
    return LaurentPoly::u_monomial(3, 3, exps, c);
  };
  expected.emplace(Shape({2, 1}), u({2, 1, 0}, 1));
  expected.emplace(Shape({2, 2}), u({3, 1, 0}, -1));
  expected.emplace(Shape({3, 1}), u({3, 1, 0}, -1) + u({2, 2, 0}, -1));
  expected.emplace(Shape({3, 2}), u({4, 1, 0}, 1) + u({3, 2, 0}, 1));
  expected.emplace(Shape({3, 3}), u({4, 2, 0}, -1));
  CHECK(e.coefficients() == expected);

  // every appearing shape has at most two parts: the transpose height bound
  for (const auto& [shape, coeff] : e.coefficients())
    CHECK(shape.num_parts() <= Shape({2, 1}).transpose().part(1));
}

TEST_CASE("lowest-degree stratum of K(J) is the transpose character") {
  for (const Shape& s : {Shape({2, 1}), Shape({2, 2}), Shape({3, 2}), Shape({1})}) {
    MonomialIdeal ini = diagonal_ideal(3, 3, s);
    LaurentPoly ki = k_polynomial_ideal(ini, 3, 3);
    int min_deg = -1;
    for (const auto& [e, c] : ki.terms()) {
      int d = 0;
      for (int x : e) d += x;
      if (min_deg < 0 || d < min_deg) min_deg = d;
    }
    Shape st = s.transpose();
    std::vector<int> uexp(3, 0);
    for (int j = 1; j <= st.num_parts(); ++j) uexp[static_cast<size_t>(j - 1)] = st.part(j);
    LaurentPoly lowest = LaurentPoly::u_monomial(3, 3, uexp) * schur_polynomial(s, 3, 3);
    CHECK(min_deg == s.total() * 2);
    LaurentPoly stratum(3, 3);
    for (const auto& [e, c] : ki.terms()) {
      int d = 0;
      for (int x : e) d += x;
      if (d == min_deg) stratum.add_term(e, c);
    }
    CHECK(stratum == lowest);
    // the x11 exponent of the generator lcm equals the first transpose part
    CHECK(ini.lcm_of_generators().exponent(1, 1) == st.part(1));
  }
}

TEST_CASE("hilbert consistency on small ideals") {
  CHECK(hilbert_check(diagonal_ideal(2, 2, Shape({1})), 2, 2, 3).passed());
  CHECK(hilbert_check(MonomialIdeal(), 2, 2, 3).passed());
  CHECK(hilbert_check(diagonal_ideal(3, 3, Shape({2, 1})), 3, 3, 4).passed());
}

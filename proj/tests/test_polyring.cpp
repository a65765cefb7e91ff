#include <doctest.h>

#include <functional>

#include "detkrs/polynomial.hpp"

using namespace detkrs;

namespace {
Monomial var(int i, int j, int e = 1) { return Monomial::variable(i, j, e); }
}  // namespace

TEST_CASE("expand small minors") {
  Polynomial det2 = expand_minor(Minor({1, 2}, {1, 2}));
  Polynomial expected;
  expected.add_term(var(1, 1) * var(2, 2), 1);
  expected.add_term(var(1, 2) * var(2, 1), -1);
  CHECK(det2 == expected);

  CHECK(expand_bitableau(Bitableau()) == Polynomial::constant(1));
  CHECK(expand_minor(Minor()) == Polynomial::constant(1));
}

TEST_CASE("Pluecker relation by full expansion") {
  Polynomial lhs = expand_bitableau(
      Bitableau({Minor({1, 2}, {2, 3}), Minor({1, 2}, {1, 4})}));
  Polynomial rhs = expand_bitableau(
                       Bitableau({Minor({1, 2}, {1, 3}), Minor({1, 2}, {2, 4})})) -
                   expand_bitableau(
                       Bitableau({Minor({1, 2}, {1, 2}), Minor({1, 2}, {3, 4})}));
  CHECK(lhs == rhs);
}

TEST_CASE("leading monomials under the diagonal order") {
  CHECK(expand_minor(Minor({1, 2}, {1, 2})).leading_monomial() == var(1, 1) * var(2, 2));
  CHECK(expand_minor(Minor({1, 2, 3}, {1, 2, 3})).leading_monomial() ==
        var(1, 1) * var(2, 2) * var(3, 3));
  Polynomial single = Polynomial::term(var(2, 1, 3), Rational(7, 2));
  CHECK(single.leading_monomial() == var(2, 1, 3));
  CHECK_THROWS_AS(Polynomial().leading_monomial(), Error);
}

TEST_CASE("bidegrees") {
  CHECK((var(1, 1) * var(2, 2)).bidegree(2, 2) == Bidegree({1, 1}, {1, 1}));
  CHECK((var(1, 1, 2) * var(1, 2)).bidegree(2, 2) == Bidegree({3, 0}, {2, 1}));
}

TEST_CASE("the diagonal order is a monomial order") {
  // a deterministic pool of monomials to probe order axioms
  std::vector<Monomial> pool;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int e = 1; e <= 2; ++e) pool.push_back(var(i, j, e));
  pool.push_back(var(1, 1) * var(2, 2));
  pool.push_back(var(1, 2) * var(2, 1));
  pool.push_back(Monomial::one());

  for (const auto& a : pool) {
    CHECK(diag_cmp(a, a) == 0);
    if (!a.is_one()) CHECK(diag_cmp(a, Monomial::one()) > 0);  // 1 is minimal
    for (const auto& b : pool) {
      CHECK(diag_cmp(a, b) == -diag_cmp(b, a));
      for (const auto& c : pool) {
        if (diag_cmp(a, b) > 0 && diag_cmp(b, c) > 0) CHECK(diag_cmp(a, c) > 0);
        // multiplicativity
        if (diag_cmp(a, b) > 0) CHECK(diag_cmp(a * c, b * c) > 0);
      }
    }
  }
}

TEST_CASE("leading monomial is multiplicative") {
  Polynomial p = expand_minor(Minor({1, 2}, {1, 3}));
  Polynomial q = expand_minor(Minor({1, 3}, {2, 3}));
  CHECK((p * q).leading_monomial() == p.leading_monomial() * q.leading_monomial());
}

TEST_CASE("diagonal property for all minors up to 5x5") {
  std::function<void(int, int, std::vector<int>&, std::vector<int>&)> rec;
  int checked = 0;
  for (int t = 1; t <= 5; ++t) {
    std::vector<std::vector<int>> subsets;
    std::vector<int> acc;
    std::function<void(int, int)> gen = [&](int from, int left) {
      if (left == 0) {
        subsets.push_back(acc);
        return;
      }
      for (int v = from; v <= 5 - left + 1; ++v) {
        acc.push_back(v);
        gen(v + 1, left - 1);
        acc.pop_back();
      }
    };
    gen(1, t);
    for (const auto& rows : subsets)
      for (const auto& cols : subsets) {
        Minor d(rows, cols);
        Polynomial p = expand_minor(d);
        // diag equals the leading monomial
        Monomial diag;
        for (int i = 1; i <= d.size(); ++i)
          diag = diag * Monomial::variable(d.row(i), d.col(i));
        CHECK(p.leading_monomial() == diag);
        ++checked;
      }
  }
  CHECK(checked > 200);
}

TEST_CASE("expansion is bidegree homogeneous") {
  Bitableau bt = parse_bitableau("[1 2 3|1 2 3]*[1 2 4|2 3 4]*[2|4]");
  auto b = expand_bitableau(bt).homogeneous_bidegree(4, 4);
  REQUIRE(b.has_value());
  CHECK(*b == bt.content(4, 4));
}

TEST_CASE("monomial text format") {
  Monomial m = var(1, 1, 2) * var(2, 3);
  CHECK(m.to_string() == "x[1,1]^2*x[2,3]");
  CHECK(parse_monomial("x[1,1]^2 * x[2,3]") == m);
  CHECK(parse_monomial("1").is_one());
  CHECK(Monomial::one().to_string() == "1");
  CHECK_THROWS_AS(parse_monomial("y[1,1]"), Error);

  Polynomial p = expand_minor(Minor({1, 2}, {1, 2}));
  CHECK(p.to_string() == "x[1,1]*x[2,2] - x[1,2]*x[2,1]");
}

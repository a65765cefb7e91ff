#include <doctest.h>

#include <functional>

#include "detkrs/monomial.hpp"
#include "detkrs/tableaux.hpp"

using namespace detkrs;

TEST_CASE("minor construction and validation") {
  Minor m({1, 2}, {1, 3});
  CHECK(m.size() == 2);
  CHECK(m.to_string() == "[1 2|1 3]");

  Minor empty;
  CHECK(empty.empty());
  CHECK(empty.to_string() == "[|]");

  CHECK_THROWS_AS(Minor({1, 2}, {3, 1}), Error);
  try {
    Minor({1, 2}, {3, 1});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonIncreasingIndices);
  }
  CHECK_THROWS_AS(Minor({1, 2}, {1}), Error);
  CHECK_THROWS_AS(Minor({0, 1}, {1, 2}), Error);
}

TEST_CASE("minor partial order examples") {
  CHECK(minor_leq(Minor({1, 2}, {1, 3}), Minor({2}, {4})));
  CHECK_FALSE(minor_leq(Minor({1}, {2}), Minor({2}, {1})));
  CHECK(minor_leq(Minor({1, 2}, {1, 2}), Minor({1, 2}, {1, 2})));
}

namespace {
std::vector<Minor> all_minors(int m, int n) {
  std::vector<Minor> out;
  out.emplace_back();
  int tmax = std::min(m, n);
  for (int t = 1; t <= tmax; ++t) {
    // choose rows and cols as strictly increasing t-subsets
    std::vector<std::vector<int>> subsets;
    std::vector<int> acc;
    std::function<void(int, int, int)> rec = [&](int from, int left, int bound) {
      if (left == 0) {
        subsets.push_back(acc);
        return;
      }
      for (int v = from; v <= bound - left + 1; ++v) {
        acc.push_back(v);
        rec(v + 1, left - 1, bound);
        acc.pop_back();
      }
    };
    rec(1, t, m);
    auto rows = subsets;
    subsets.clear();
    rec(1, t, n);
    auto cols = subsets;
    for (const auto& r : rows)
      for (const auto& c : cols) out.emplace_back(r, c);
  }
  return out;
}
}  // namespace

TEST_CASE("minor order is a partial order on the 4x4 ambient") {
  auto minors = all_minors(4, 4);
  for (const auto& a : minors) CHECK(minor_leq(a, a));
  for (const auto& a : minors)
    for (const auto& b : minors)
      if (minor_leq(a, b) && minor_leq(b, a)) CHECK(a == b);
  for (const auto& a : minors)
    for (const auto& b : minors) {
      if (!minor_leq(a, b)) continue;
      for (const auto& c : minors)
        if (minor_leq(b, c)) CHECK(minor_leq(a, c));
    }
}

TEST_CASE("standardness") {
  Bitableau good({Minor({1, 2}, {1, 2}), Minor({1}, {1})});
  CHECK(good.is_standard());
  Bitableau bad({Minor({1, 2}, {2, 3}), Minor({1, 2}, {1, 4})});
  CHECK_FALSE(bad.is_standard());
  Bitableau single({Minor({1, 2}, {1, 3})});
  CHECK(single.is_standard());
  CHECK(Bitableau().is_standard());
}

TEST_CASE("bitableau keeps sizes weakly decreasing and strips padding") {
  Bitableau bt({Minor({1}, {2}), Minor({1, 2}, {1, 2}), Minor()});
  CHECK(bt.num_factors() == 2);
  CHECK(bt.shape() == Shape({2, 1}));
  CHECK(bt.factors()[0].size() == 2);
}

TEST_CASE("superstandard containment") {
  Bitableau fig2 = parse_bitableau("[1 2 3|1 2 3]*[1 2 4|2 3 4]*[2|4]");
  CHECK(contains_superstandard(fig2, Shape({3, 2}), 4, 4));
  CHECK_FALSE(contains_superstandard(fig2, Shape({3, 3}), 4, 4));
  CHECK(contains_superstandard(fig2, Shape(), 4, 4));
  CHECK_THROWS_AS(contains_superstandard(fig2, Shape({5}), 4, 4), Error);
}

TEST_CASE("bitableau content counts indices") {
  Bitableau fig2 = parse_bitableau("[1 2 3|1 2 3]*[1 2 4|2 3 4]*[2|4]");
  Bidegree c = fig2.content(4, 4);
  CHECK(c.rows == std::vector<int>{2, 3, 1, 1});
  CHECK(c.cols == std::vector<int>{1, 2, 2, 2});
}

TEST_CASE("enumerate_standard on tiny ambients") {
  auto one_var = enumerate_standard(1, 1, Bidegree({3}, {3}));
  REQUIRE(one_var.size() == 1);
  CHECK(one_var[0].to_string() == "[1|1]*[1|1]*[1|1]");

  auto two = enumerate_standard(2, 2, Bidegree({1, 1}, {1, 1}));
  REQUIRE(two.size() == 2);
  CHECK(two[0].to_string() == "[1 2|1 2]");
  CHECK(two[1].to_string() == "[1|1]*[2|2]");

  CHECK(enumerate_standard(2, 2, Bidegree({2, 0}, {1, 0})).empty());
  CHECK(enumerate_standard(2, 2, Bidegree({0, 0}, {0, 0})).size() == 1);
}

TEST_CASE("standard bitableaux are counted by monomials of the content") {
  for (int m : {2, 3}) {
    for (int d = 1; d <= 4; ++d) {
      for (const Bidegree& b : bidegrees_of_total(m, m, d)) {
        auto sigmas = enumerate_standard(m, m, b);
        for (const auto& s : sigmas) {
          CHECK(s.is_standard());
          CHECK(s.content(m, m) == b);
        }
        CHECK(static_cast<long long>(sigmas.size()) == count_monomials(b));
      }
    }
  }
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(enumerate_standard(3, 3, Bidegree({2, 2, 2}, {2, 2, 2}), 5), Error);
}

TEST_CASE("parsing round trips") {
  for (const char* text :
       {"[1 2 3|1 2 3]*[1 2 4|2 3 4]*[2|4]", "[1 2|1 3]", "[|]"}) {
    Bitableau bt = parse_bitableau(text);
    CHECK(parse_bitableau(bt.to_string()) == bt);
  }
  CHECK(parse_minor(" [ 1 2 | 1 3 ] ").to_string() == "[1 2|1 3]");
  CHECK_THROWS_AS(parse_minor("[1 2; 1 3]"), Error);
}

#include "doctest.h"
#include "poly_helpers.hpp"

#include <grothkit/operators.hpp>
#include <grothkit/shapes.hpp>

#include <algorithm>

using namespace grothkit;
using testing_helpers::b;
using testing_helpers::one;

namespace {

using StripTerms = std::vector<std::pair<Partition, BetaPoly>>;

StripTerms sorted(StripTerms t) {
  std::sort(t.begin(), t.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  return t;
}

constexpr int kVars = 1, kDeg = 3, kSize = 8, kPart = 6;

SPVector e(const Partition& mu) { return SPVector::basis(mu, kVars, kDeg, kSize, kPart); }

TruncPoly constant(const BetaPoly& c) { return TruncPoly::constant(kVars, kDeg, c); }

}  // namespace

TEST_CASE("box moves") {
  CHECK(addable_diagonals({}) == std::vector<int>{0});
  CHECK(removable_diagonals({2, 1}) == std::vector<int>{0});
  CHECK(add_box({1}, 1) == Partition{2});
  CHECK(remove_box({2, 1}, 0) == Partition{2});
  CHECK_THROWS_AS(add_box({1}, 0), Error);
}

TEST_CASE("single box operators") {
  CHECK(apply_a(0, e({})) == e({1}));
  SPVector beta_one = e({}).empty_like();
  beta_one.add({1}, constant(b));
  CHECK(apply_a(0, e({1})) == beta_one);
  CHECK(apply_a(1, e({1})) == e({2}));
  CHECK(apply_a(3, e({1})).terms().empty());

  for (const auto& mu : strict_partitions_up_to(6))
    for (int r = 0; r <= 6; ++r) {
      SPVector out = apply_a(r, e(mu));
      for (const auto& [nu, c] : out.terms()) CHECK(is_strict(nu));
    }
}

TEST_CASE("A operators") {
  TruncPoly x = TruncPoly::var(kVars, kDeg, 1);
  SPVector once = apply_A(0, x, e({}));
  CHECK(once.coeff({}) == one(kVars, kDeg));
  CHECK(once.coeff({1}) == x);
  SPVector twice = apply_A(0, x, once);
  CHECK(twice.coeff({}) == one(kVars, kDeg));
  CHECK(twice.coeff({1}) == x * BetaPoly(2) + x * x * b);
  CHECK(apply_A(2, x, e({1})) == e({1}));
}

TEST_CASE("row operators") {
  TruncPoly x = TruncPoly::var(kVars, kDeg, 1);
  CHECK(apply_Q(1, x, e({})).coeff({1}) == x * BetaPoly(2) + x * x * b);
  CHECK(apply_P(1, x, e({})).coeff({1}) == x);
  for (int n = 1; n <= 3; ++n) CHECK(apply_P(n, x, e({})).coeff({}) == one(kVars, kDeg));
}

TEST_CASE("strip sums") {
  auto empty = strip_sum({}, {});
  REQUIRE(empty.size() == 1);
  CHECK(empty[0] == std::pair<Partition, BetaPoly>{{}, BetaPoly(1)});

  CHECK(sorted(strip_sum({1}, {1})) == StripTerms{{{}, b}, {{1}, BetaPoly(1)}});

  CHECK(sorted(strip_sum({2, 1}, {2, 1})) == StripTerms{{{2}, b}, {{2, 1}, BetaPoly(1)}});
}

TEST_CASE("double-slash functions") {
  CHECK(gq_slashslash({1}, {}, 3, 4) == grothendieck_GQ(parse_shape("1"), 3, 4));
  CHECK(gp_slashslash({2, 1}, {}, 3, 4) == grothendieck_GP(parse_shape("2,1"), 3, 4));
  CHECK(gp_slashslash({1}, {1}, 3, 4) != one(3, 4));

  // inclusion-exclusion over the inner shapes
  TruncPoly sum = gp_slashslash({3, 1}, {1}, 3, 5) - gp_slashslash({3, 1}, {}, 3, 5) * BetaPoly(b);
  CHECK(sum == grothendieck_GP(parse_shape("3,1/1"), 3, 5));
  TruncPoly q = gq_slashslash({3, 1}, {1}, 3, 5) - gq_slashslash({3, 1}, {}, 3, 5) * BetaPoly(b);
  CHECK(q == grothendieck_GQ(parse_shape("3,1/1"), 3, 5));
  CHECK(is_symmetric(gq_slashslash({3, 1}, {1}, 3, 5)));
}

TEST_CASE("local relations on small partitions") {
  YangBaxterReport r = check_yang_baxter(4, 4, 2);
  CHECK(r.instances > 0);
  CHECK(r.ok());
}

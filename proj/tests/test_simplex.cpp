#include <vector>

#include "doctest.h"
#include "pcg/rational.hpp"
#include "pcg/simplex.hpp"

using namespace pcg;

namespace {

using Row = std::vector<Rational>;

bool satisfies(const std::vector<Row>& A, const Row& b, const Row& x) {
  for (size_t i = 0; i < A.size(); ++i) {
    Rational lhs = 0;
    for (size_t j = 0; j < A[i].size(); ++j) lhs += A[i][j] * x[j];
    if (lhs > b[i]) return false;
  }
  for (const auto& v : x)
    if (v < 0) return false;
  return true;
}

}  // namespace

TEST_CASE("trivially feasible") {
  std::vector<Row> A = {{1, 1}};
  Row b = {Rational(10)};
  auto x = lp_feasible(A, b);
  REQUIRE(x.has_value());
  CHECK(satisfies(A, b, *x));
}

TEST_CASE("equality encoded as two inequalities") {
  // x + y <= 3, -(x + y) <= -3, x - y <= 1, -(x - y) <= -1  =>  x=2, y=1
  std::vector<Row> A = {{1, 1}, {-1, -1}, {1, -1}, {-1, 1}};
  Row b = {3, -3, 1, -1};
  auto x = lp_feasible(A, b);
  REQUIRE(x.has_value());
  CHECK(satisfies(A, b, *x));
  CHECK((*x)[0] == Rational(2));
  CHECK((*x)[1] == Rational(1));
}

TEST_CASE("infeasible by sign") {
  // x <= -1 contradicts x >= 0
  std::vector<Row> A = {{1}};
  Row b = {Rational(-1)};
  CHECK(!lp_feasible(A, b).has_value());
}

TEST_CASE("infeasible by conflict") {
  // x + y <= 1 and x + y >= 2
  std::vector<Row> A = {{1, 1}, {-1, -1}};
  Row b = {1, -2};
  CHECK(!lp_feasible(A, b).has_value());
}

TEST_CASE("exact rational solutions") {
  // 3x <= 1 and 3x >= 1  =>  x = 1/3 exactly
  std::vector<Row> A = {{3}, {-3}};
  Row b = {1, -1};
  auto x = lp_feasible(A, b);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(1, 3));
}

TEST_CASE("strict chains of differences") {
  // x1 - x2 <= -1, x2 - x3 <= -1, x3 <= 5  =>  x1 <= 3 feasible
  std::vector<Row> A = {{1, -1, 0}, {0, 1, -1}, {0, 0, 1}};
  Row b = {-1, -1, 5};
  auto x = lp_feasible(A, b);
  REQUIRE(x.has_value());
  CHECK(satisfies(A, b, *x));
  // tightening the last bound below the forced minimum flips it
  Row b2 = {-1, -1, 1};
  CHECK(!lp_feasible(A, b2).has_value());
}

TEST_CASE("degenerate system terminates") {
  // many redundant constraints through the origin; Bland's rule must not cycle
  std::vector<Row> A = {{1, -1, 0},  {-1, 1, 0}, {0, 1, -1},
                        {0, -1, 1},  {1, 0, -1}, {-1, 0, 1},
                        {1, 1, 1}};
  Row b = {0, 0, 0, 0, 0, 0, 0};
  auto x = lp_feasible(A, b);
  REQUIRE(x.has_value());
  CHECK(satisfies(A, b, *x));
}

TEST_CASE("empty system is feasible") {
  auto x = lp_feasible({}, {});
  REQUIRE(x.has_value());
  CHECK(x->empty());
}

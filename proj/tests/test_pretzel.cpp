#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "circlenum/bracket.hpp"
#include "circlenum/dealternator.hpp"
#include "circlenum/pretzel.hpp"
#include "circlenum/states.hpp"
#include "test_util.hpp"

using namespace circlenum;

TEST_CASE("pretzel validation") {
  CHECK_THROWS_AS(pretzel(std::vector<int>{3}), pretzel_error);
  CHECK_THROWS_AS(pretzel(std::vector<int>{}), pretzel_error);
  CHECK_THROWS_AS(pretzel(std::vector<int>{2, 0, 2}), pretzel_error);
}

TEST_CASE("generated pretzels are valid connected diagrams") {
  for (const auto& twists : std::vector<std::vector<int>>{
           {1, 1}, {2, 2}, {3, 3, 3}, {4, -3, 3}, {1, -1}, {2, -2, 2, -2}, {5, 1, -2}}) {
    Diagram d = pretzel(twists);
    int n = 0;
    for (int a : twists) n += a < 0 ? -a : a;
    CHECK(d.size() == n);
    CHECK(d.free_loops == 0);
    validate(d);
    CHECK(is_connected(d));
    CHECK(faces(d).count() == n + 2);  // planar rotation system
  }
}

TEST_CASE("generator is deterministic") {
  CHECK(to_pd_text(pretzel({1, 1})) == "X[2,1,3,4] X[1,2,4,3]");
  CHECK(to_pd_text(pretzel({4, -3, 3})) == to_pd_text(pretzel({4, -3, 3})));
}

TEST_CASE("same-sign pretzels are alternating") {
  for (const auto& twists : std::vector<std::vector<int>>{{1, 1}, {2, 2}, {3, 3, 3}, {2, 2, 2, 2}}) {
    Diagram d = pretzel(twists);
    CHECK(dealternator_info(d).k == 0);
    auto [sa, sb] = extreme_counts(d);
    CHECK(sa + sb == d.size() + 2);
  }
  // P(2,2) circle number 6, P(3,3,3) circle number 11
  auto [a22, b22] = extreme_counts(pretzel({2, 2}));
  CHECK(a22 + b22 == 6);
  auto [a333, b333] = extreme_counts(pretzel({3, 3, 3}));
  CHECK(a333 + b333 == 11);
}

TEST_CASE("the worked example P(4,-3,3)") {
  Diagram d = pretzel({4, -3, 3});
  CHECK(d.size() == 10);
  DealternatorInfo info = dealternator_info(d);
  CHECK(info.k == 3);
  CHECK(is_reduced(d));
  CHECK_FALSE(is_dealternator_connected(d, info));
  auto [sa, sb] = extreme_counts(d);
  std::multiset<int> sides{sa, sb};
  CHECK(sides == std::multiset<int>{4, 6});
  CHECK(kauffman_bracket(d).span() == 28);
}

TEST_CASE("negating the twists mirrors the diagram") {
  for (const auto& twists : std::vector<std::vector<int>>{{3, 3, 3}, {4, -3, 3}, {2, 1, -2}}) {
    std::vector<int> negated;
    for (int a : twists) negated.push_back(-a);
    auto [sa, sb] = extreme_counts(pretzel(twists));
    auto [na, nb] = extreme_counts(pretzel(negated));
    CHECK(na == sb);
    CHECK(nb == sa);
  }
}

TEST_CASE("P(1,-1) is the two-crossing unknot clasp") {
  Diagram d = pretzel({1, -1});
  DealternatorInfo info = dealternator_info(d);
  CHECK(info.k == 1);
  CHECK(info.tie);
  auto [sa, sb] = extreme_counts(d);
  CHECK(sa + sb == 2 + 2 - 2 * 1);  // n + 2 - 2k
}

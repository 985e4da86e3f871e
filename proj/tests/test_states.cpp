#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "circlenum/states.hpp"
#include "test_util.hpp"

using namespace circlenum;

TEST_CASE("state_range enumerates 2^n states in binary order") {
  CHECK(state_range(0).size() == 1);
  CHECK(state_range(3).size() == 8);
  CHECK(state_range(10).size() == 1024);

  std::uint64_t expected = 0;
  for (State s : state_range(3)) {
    CHECK(s.bits == expected++);
    CHECK(s.length == 3);
  }
  CHECK(expected == 8);

  CHECK_THROWS_AS(state_range(25), cap_exceeded_error);
  CHECK(state_range(25, 26).size() == std::uint64_t{1} << 25);
}

TEST_CASE("circle_count on fixtures") {
  Diagram trefoil = parse_pd(testutil::kTrefoil);
  int ca = circle_count(trefoil, all_a_state(3));
  int cb = circle_count(trefoil, all_b_state(3));
  CHECK(ca + cb == 5);  // n + 2 for a connected alternating diagram
  CHECK(ca == 3);
  CHECK(cb == 2);

  CHECK(circle_count(parse_pd("loops=1"), State{0, 0}) == 1);

  Diagram curl = parse_pd(testutil::kCurl);
  std::multiset<int> counts{circle_count(curl, all_a_state(1)), circle_count(curl, all_b_state(1))};
  CHECK(counts == std::multiset<int>{1, 2});

  CHECK_THROWS_AS(circle_count(trefoil, State{0, 2}), length_mismatch_error);
}

TEST_CASE("extreme_counts") {
  Diagram trefoil = parse_pd(testutil::kTrefoil);
  auto [sa, sb] = extreme_counts(trefoil);
  CHECK(sa + sb == 5);

  auto [ha, hb] = extreme_counts(parse_pd(testutil::kHopf));
  CHECK(ha + hb == 4);

  auto [fa, fb] = extreme_counts(parse_pd(testutil::kFigureEight));
  CHECK(fa + fb == 6);

  auto [ba, bb] = extreme_counts(parse_pd(testutil::kBorromean));
  CHECK(ba + bb == 8);

  auto [la, lb] = extreme_counts(parse_pd("loops=1"));
  CHECK(la == 1);
  CHECK(lb == 1);
}

TEST_CASE("extreme counts swap under mirroring") {
  testutil::Rng rng;
  for (int trial = 0; trial < 40; ++trial) {
    Diagram d = testutil::random_diagram(rng);
    auto [sa, sb] = extreme_counts(d);
    auto [ma, mb] = extreme_counts(mirror(d));
    CHECK(ma == sb);
    CHECK(mb == sa);
  }
}

TEST_CASE("flipping one crossing changes the circle count by exactly one") {
  testutil::Rng rng;
  for (int trial = 0; trial < 15; ++trial) {
    Diagram d = testutil::random_diagram(rng, 3, 2);
    if (d.size() > 10) continue;
    for (State s : state_range(d.size())) {
      int base = circle_count(d, s);
      CHECK(base >= 1);
      CHECK(base <= d.size() + 1 + d.free_loops);
      for (int c = 0; c < d.size(); ++c) {
        State flipped{s.bits ^ (std::uint64_t{1} << c), s.length};
        int diff = circle_count(d, flipped) - base;
        CHECK((diff == 1 || diff == -1));
      }
    }
  }
}

TEST_CASE("union-find counts agree with the curve-walking tracer") {
  testutil::Rng rng;
  for (int trial = 0; trial < 25; ++trial) {
    Diagram d = testutil::random_diagram(rng, 3, 2);
    if (d.size() > 9) continue;
    for (State s : state_range(d.size())) {
      CHECK(circle_count(d, s) == circle_count_by_walking(d, s));
    }
  }
  // also exercised on a disconnected diagram and on free loops
  Diagram two_curls = parse_pd("X[1,1,2,2] X[3,3,4,4] loops=2");
  for (State s : state_range(2)) {
    CHECK(circle_count(two_curls, s) == circle_count_by_walking(two_curls, s));
  }
}

TEST_CASE("all-A circle count survives A-smoothing any crossing") {
  Diagram d = parse_pd(testutil::kTrefoil);
  auto [sa, sb] = extreme_counts(d);
  for (int c = 0; c < d.size(); ++c) {
    Diagram sm = smooth_crossing(d, c, Smoothing::A);
    CHECK(extreme_counts(sm).first == sa);
  }
  // smoothing every crossing with A leaves |sA| free loops
  Diagram all = d;
  for (int c = d.size() - 1; c >= 0; --c) all = smooth_crossing(all, c, Smoothing::A);
  CHECK(all.size() == 0);
  CHECK(all.free_loops == sa);
}

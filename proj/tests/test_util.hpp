#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "circlenum/bracket.hpp"
#include "circlenum/diagram.hpp"
#include "circlenum/laurent.hpp"
#include "circlenum/pretzel.hpp"

// Shared fixtures and independent oracles for the test suites.

namespace testutil {

inline const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
inline const char* kCurl = "X[1,1,2,2]";
inline const char* kHopf = "X[2,1,3,4] X[1,2,4,3]";
inline const char* kFigureEight = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";
inline const char* kBorromean = "X[1,7,2,5] X[9,4,12,1] X[10,2,11,3] X[4,6,3,8] X[5,10,6,9] X[8,11,7,12]";
inline const char* kSwitchedTrefoil = "X[4,2,5,1] X[3,6,4,1] X[5,2,6,3]";

// Bracket by plain skein recursion, independent of the state-sum path.
inline circlenum::LaurentPolynomial bracket_by_skein(const circlenum::Diagram& d) {
  using circlenum::LaurentPolynomial;
  if (d.size() == 0) {
    LaurentPolynomial delta;
    delta.add_term(2, -1);
    delta.add_term(-2, -1);
    return circlenum::pow(delta, d.free_loops - 1);
  }
  auto a = bracket_by_skein(circlenum::smooth_crossing(d, 0, circlenum::Smoothing::A));
  auto b = bracket_by_skein(circlenum::smooth_crossing(d, 0, circlenum::Smoothing::B));
  return a.scaled(1, 1) + b.scaled(1, -1);
}

struct Rng {
  std::uint64_t state = 0x9e3779b97f4a7c15ull;

  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }

  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

// Connected diagram with varied k: a random pretzel with random switches.
inline circlenum::Diagram random_diagram(Rng& rng, int max_bands = 4, int max_twist = 3) {
  int bands = 2 + rng.below(max_bands - 1);
  std::vector<int> twists(bands);
  for (int& t : twists) {
    t = 1 + rng.below(max_twist);
    if (rng.below(2)) t = -t;
  }
  circlenum::Diagram d = circlenum::pretzel(twists);
  std::vector<int> switches;
  for (int c = 0; c < d.size(); ++c) {
    if (rng.below(3) == 0) switches.push_back(c);
  }
  return circlenum::switch_crossings(d, switches);
}

}  // namespace testutil

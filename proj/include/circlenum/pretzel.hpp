#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "circlenum/diagram.hpp"
#include "circlenum/errors.hpp"

// Pretzel diagram generator. P(a1,...,am) hangs m vertical twist bands in a
// row; band i carries |a_i| crossings whose sense is the sign of a_i. Band
// tops are joined left to right by arcs, with one arc closing over the top
// from the first band to the last; bottoms likewise. Labeling is fixed
// left-to-right, top-to-bottom so output is byte-stable.

namespace circlenum {

struct PretzelSpec {
  std::vector<int> twists;
};

inline Diagram pretzel(const PretzelSpec& spec) {
  int m = static_cast<int>(spec.twists.size());
  if (m < 2) throw pretzel_error("pretzel: need at least two bands");
  for (int a : spec.twists) {
    if (a == 0) throw pretzel_error("pretzel: zero twist count");
  }

  int next = 1;
  // Top connector arcs: outer joins band 0's left to band m-1's right; the
  // others join neighboring bands.
  int top_outer = next++;
  std::vector<int> top_between(m, 0);
  for (int i = 1; i < m; ++i) top_between[i] = next++;

  // left[i][j] / right[i][j]: segment labels above crossing j of band i
  // (j = c_i is the band's bottom).
  std::vector<std::vector<int>> left(m), right(m);
  for (int i = 0; i < m; ++i) {
    int c = std::abs(spec.twists[i]);
    left[i].assign(c + 1, 0);
    right[i].assign(c + 1, 0);
    left[i][0] = i == 0 ? top_outer : top_between[i];
    right[i][0] = i == m - 1 ? top_outer : top_between[i + 1];
    for (int j = 1; j < c; ++j) {
      left[i][j] = next++;
      right[i][j] = next++;
    }
  }
  int bottom_outer = next++;
  left[0][left[0].size() - 1] = bottom_outer;
  right[m - 1][right[m - 1].size() - 1] = bottom_outer;
  for (int i = 1; i < m; ++i) {
    int between = next++;
    right[i - 1][right[i - 1].size() - 1] = between;
    left[i][left[i].size() - 1] = between;
  }

  Diagram d;
  for (int i = 0; i < m; ++i) {
    int c = std::abs(spec.twists[i]);
    bool positive = spec.twists[i] > 0;
    for (int j = 0; j < c; ++j) {
      if (positive) {
        d.crossings.push_back(CrossingTuple{{right[i][j], left[i][j], left[i][j + 1], right[i][j + 1]}});
      } else {
        d.crossings.push_back(CrossingTuple{{left[i][j], left[i][j + 1], right[i][j + 1], right[i][j]}});
      }
    }
  }
  validate(d);
  return d;
}

inline Diagram pretzel(const std::vector<int>& twists) { return pretzel(PretzelSpec{twists}); }

}  // namespace circlenum

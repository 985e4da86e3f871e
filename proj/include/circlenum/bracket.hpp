#pragma once

#include <cstdint>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "circlenum/diagram.hpp"
#include "circlenum/errors.hpp"
#include "circlenum/laurent.hpp"
#include "circlenum/states.hpp"

// Kauffman bracket by the full state sum. Each state contributes
// A^(#A - #B) * delta^(circles - 1) with delta = -A^2 - A^-2, so a single
// unknot has bracket 1.

namespace circlenum {

namespace detail {

// States only enter the sum through (#B, circles), so the 2^n states are
// bucketed into counts first. Chunks of the state range are independent,
// which is what makes the parallel split exact.
inline std::vector<std::vector<std::uint64_t>> state_buckets(const CompiledDiagram& cd,
                                                             unsigned threads) {
  int n = cd.n;
  int max_circles = cd.label_count + cd.free_loops + 1;
  std::uint64_t total = std::uint64_t{1} << n;
  unsigned hw = std::thread::hardware_concurrency();
  if (threads == 0) threads = hw > 0 ? hw : 1;
  if (std::uint64_t{threads} > total) threads = static_cast<unsigned>(total);
  if (n < 12) threads = 1;  // not worth spawning for tiny sums

  std::vector<std::vector<std::vector<std::uint64_t>>> partial(
      threads, std::vector<std::vector<std::uint64_t>>(n + 1, std::vector<std::uint64_t>(max_circles + 1, 0)));

  auto work = [&](unsigned who) {
    std::uint64_t begin = total * who / threads;
    std::uint64_t end = total * (who + 1) / threads;
    std::vector<int> scratch;
    auto& mine = partial[who];
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      int b = static_cast<int>(__builtin_popcountll(mask));
      int circles = cd.count_circles(mask, scratch);
      ++mine[b][circles];
    }
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work, i);
    for (auto& t : pool) t.join();
  }

  auto& counts = partial[0];
  for (unsigned i = 1; i < threads; ++i) {
    for (int b = 0; b <= n; ++b) {
      for (int c = 0; c <= max_circles; ++c) counts[b][c] += partial[i][b][c];
    }
  }
  return std::move(counts);
}

}  // namespace detail

inline LaurentPolynomial kauffman_bracket(const Diagram& d, int state_cap = kDefaultStateCap,
                                          unsigned threads = 0) {
  int n = d.size();
  if (n > state_cap)
    throw cap_exceeded_error("kauffman_bracket: " + std::to_string(n) + " crossings exceed the cap of " +
                             std::to_string(state_cap));
  if (n == 0) {
    if (d.free_loops == 0) throw error("kauffman_bracket: the empty diagram has no bracket");
    LaurentPolynomial delta;
    delta.add_term(2, -1);
    delta.add_term(-2, -1);
    return pow(delta, d.free_loops - 1);
  }

  detail::CompiledDiagram cd(d);
  auto counts = detail::state_buckets(cd, threads);

  LaurentPolynomial delta;
  delta.add_term(2, -1);
  delta.add_term(-2, -1);
  int max_circles = cd.label_count + cd.free_loops;
  std::vector<LaurentPolynomial> delta_pow(max_circles);
  delta_pow[0] = LaurentPolynomial::monomial(1, 0);
  for (int i = 1; i < max_circles; ++i) delta_pow[i] = delta_pow[i - 1] * delta;

  LaurentPolynomial bracket;
  for (int b = 0; b <= n; ++b) {
    for (int c = 1; c <= max_circles; ++c) {
      std::uint64_t count = counts[b][c];
      if (count == 0) continue;
      bracket += delta_pow[c - 1].scaled(static_cast<long long>(count), n - 2 * b);
    }
  }
  return bracket;
}

// A-adequate: in the all-A state no crossing has both of its smoothing arcs
// on one circle. Dually for B.
inline std::pair<bool, bool> adequacy(const Diagram& d) {
  int n = d.size();
  if (n == 0) return {true, true};
  detail::CompiledDiagram cd(d);

  auto adequate = [&cd](bool b_side) {
    int L = cd.label_count;
    detail::UnionFind uf(L);
    for (const auto& t : cd.tuples) {
      if (b_side) {
        uf.unite(t[0], t[3]);
        uf.unite(t[1], t[2]);
      } else {
        uf.unite(t[0], t[1]);
        uf.unite(t[2], t[3]);
      }
    }
    for (const auto& t : cd.tuples) {
      // the two smoothing arcs at this crossing, one label from each pair
      if (uf.find(t[0]) == uf.find(b_side ? t[1] : t[2])) return false;
    }
    return true;
  };
  return {adequate(false), adequate(true)};
}

// Bracket with its degree data. M and m are the extreme degrees the state sum
// can reach: M = n + 2|sA| - 2 and m = -n - 2|sB| + 2; a_M, a_m are the
// coefficients actually found there (possibly zero).
struct BracketReport {
  LaurentPolynomial bracket;
  int span = 0;
  int jones_span = 0;  // span / 4: the span of the Jones polynomial
  int M = 0;
  int m = 0;
  long long a_M = 0;
  long long a_m = 0;
  bool A_adequate = false;
  bool B_adequate = false;
};

inline BracketReport bracket_report(const Diagram& d, int state_cap = kDefaultStateCap,
                                    unsigned threads = 0) {
  BracketReport r;
  r.bracket = kauffman_bracket(d, state_cap, threads);
  auto [sa, sb] = extreme_counts(d);
  int n = d.size();
  r.M = n + 2 * sa - 2;
  r.m = -n - 2 * sb + 2;
  r.span = r.bracket.span();
  r.jones_span = r.span / 4;  // every exponent is congruent mod 4
  r.a_M = r.bracket.coefficient(r.M);
  r.a_m = r.bracket.coefficient(r.m);
  auto [aa, bb] = adequacy(d);
  r.A_adequate = aa;
  r.B_adequate = bb;
  return r;
}

// <D> = A <D_A> + A^-1 <D_B> at crossing c.
inline bool skein_check(const Diagram& d, int c, int state_cap = kDefaultStateCap) {
  LaurentPolynomial lhs = kauffman_bracket(d, state_cap);
  LaurentPolynomial rhs = kauffman_bracket(smooth_crossing(d, c, Smoothing::A), state_cap).scaled(1, 1) +
                          kauffman_bracket(smooth_crossing(d, c, Smoothing::B), state_cap).scaled(1, -1);
  return lhs == rhs;
}

struct BoundCheck {
  long long value = 0;
  bool applicable = false;
  bool satisfied = false;
};

struct BoundsReport {
  BoundCheck generic;  // 2n + 2(|sA|+|sB|) - 4
  BoundCheck zhu;      // 4(n-k), needs dealternator connected
  BoundCheck adams;    // 4(n-k-2), needs dealternator connected + reduced, k >= 1
};

inline BoundsReport bounds_report(int n, int k, int sa, int sb, bool dealternator_connected,
                                  bool dealternator_reduced, int span) {
  BoundsReport r;
  r.generic.value = 2 * n + 2 * (sa + sb) - 4;
  r.generic.applicable = true;
  r.generic.satisfied = span <= r.generic.value;

  r.zhu.value = 4 * (n - k);
  r.zhu.applicable = dealternator_connected;
  r.zhu.satisfied = !r.zhu.applicable || span <= r.zhu.value;

  r.adams.value = 4 * (n - k - 2);
  r.adams.applicable = dealternator_connected && dealternator_reduced && k >= 1;
  r.adams.satisfied = !r.adams.applicable || span <= r.adams.value;
  return r;
}

}  // namespace circlenum

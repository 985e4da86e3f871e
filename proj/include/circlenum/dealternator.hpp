#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "circlenum/diagram.hpp"
#include "circlenum/errors.hpp"

// Minimal switch sets. A diagram is k-almost alternating when switching some
// minimal set of k crossings (the dealternators) makes it alternating.

namespace circlenum {

inline constexpr int kDefaultDealternatorCap = 16;

struct DealternatorInfo {
  int k = 0;
  std::vector<int> dealternators;  // sorted crossing indices, |set| = k
  Diagram alternating_diagram;     // the input with the dealternators switched
  bool tie = false;                // the two candidate sets had equal size
};

// Solves the per-crossing switch variables from the arc constraints: along
// each arc the two ends must be one over and one under after switching.
// Connectivity forces exactly two solutions, a set and its complement; the
// lighter one wins. On a tie, the solution leaving crossing 0 unswitched is
// chosen and the tie flag is set.
inline DealternatorInfo dealternator_info(const Diagram& d) {
  int n = d.size();
  if (n == 0) throw error("dealternator_info: diagram has no crossings");
  if (!is_connected(d)) throw disconnected_error("dealternator_info: diagram is not connected");

  auto mate = detail::end_mates(d);
  // Constraint edges: x_c1 xor x_c2 = parity(p1) xor parity(p2) xor 1.
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int e = 0; e < 4 * n; ++e) {
    int f = mate[e];
    if (f < e) continue;
    int c1 = e / 4, c2 = f / 4;
    int rhs = (e & 1) ^ (f & 1) ^ 1;
    if (c1 == c2) {
      if (rhs != 0)
        throw constraint_error("arc " + std::to_string(d.crossings[c1].ends[e % 4]) +
                               " returns to its crossing at equal depth; invalid PD data");
      continue;
    }
    adj[c1].push_back({c2, rhs});
    adj[c2].push_back({c1, rhs});
  }

  std::vector<int> x(n, -1);
  x[0] = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    for (auto [o, rhs] : adj[c]) {
      int want = x[c] ^ rhs;
      if (x[o] < 0) {
        x[o] = want;
        stack.push_back(o);
      } else if (x[o] != want) {
        throw constraint_error("switch constraints are contradictory; invalid PD data");
      }
    }
  }

  int weight = 0;
  for (int v : x) weight += v;

  DealternatorInfo info;
  bool use_complement = 2 * weight > n;
  info.tie = 2 * weight == n;
  info.k = use_complement ? n - weight : weight;
  int switched = use_complement ? 0 : 1;
  for (int c = 0; c < n; ++c) {
    if (x[c] == switched) info.dealternators.push_back(c);
  }
  info.alternating_diagram = switch_crossings(d, info.dealternators);
  return info;
}

inline bool is_alternating(const Diagram& d) { return dealternator_info(d).k == 0; }

// All 2^k diagrams obtained by smoothing every dealternator in every way.
// Entry m smooths dealternators[i] with B when bit i of m is set.
inline std::vector<Diagram> dealternator_smoothings(const Diagram& d, const DealternatorInfo& info,
                                                    int cap = kDefaultDealternatorCap) {
  int k = info.k;
  if (k > cap)
    throw cap_exceeded_error("dealternator_smoothings: k = " + std::to_string(k) +
                             " exceeds the cap of " + std::to_string(cap));
  std::vector<Diagram> out;
  out.reserve(std::size_t{1} << k);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
    Diagram cur = d;
    for (int i = k - 1; i >= 0; --i) {  // descending so indices stay valid
      cur = smooth_crossing(cur, info.dealternators[i], (m >> i) & 1 ? Smoothing::B : Smoothing::A);
    }
    out.push_back(std::move(cur));
  }
  return out;
}

// True iff every dealternator smoothing is connected. A smoothing that spins
// off a crossingless circle while crossings remain counts as disconnected.
inline bool is_dealternator_connected(const Diagram& d, const DealternatorInfo& info,
                                      int cap = kDefaultDealternatorCap) {
  for (const auto& di : dealternator_smoothings(d, info, cap)) {
    if (!is_connected(di)) return false;
  }
  return true;
}

// True iff every dealternator smoothing is reduced. A disconnected smoothing
// fails the check; a bare circle counts as reduced.
inline bool is_dealternator_reduced(const Diagram& d, const DealternatorInfo& info,
                                    int cap = kDefaultDealternatorCap) {
  for (const auto& di : dealternator_smoothings(d, info, cap)) {
    if (!is_connected(di)) return false;
    if (di.size() == 0) continue;
    if (!is_reduced(di)) return false;
  }
  return true;
}

}  // namespace circlenum

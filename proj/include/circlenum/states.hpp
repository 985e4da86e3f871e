#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "circlenum/diagram.hpp"
#include "circlenum/errors.hpp"

// Smoothing states and circle counting.
//
// A state chooses one smoothing per crossing, packed as bits: bit i set means
// a B-smoothing at crossing i. The all-A state is 0, the all-B state 2^n - 1.

namespace circlenum {

inline constexpr int kDefaultStateCap = 24;

struct State {
  std::uint64_t bits = 0;
  int length = 0;

  Smoothing at(int crossing) const {
    return (bits >> crossing) & 1 ? Smoothing::B : Smoothing::A;
  }

  friend bool operator==(const State&, const State&) = default;
};

inline State all_a_state(int n) { return State{0, n}; }

inline State all_b_state(int n) {
  return State{n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n)), n};
}

// All 2^n states in binary-counting order.
class StateRange {
 public:
  explicit StateRange(int n) : n_(n) {}

  class iterator {
   public:
    iterator(std::uint64_t mask, int n) : mask_(mask), n_(n) {}
    State operator*() const { return State{mask_, n_}; }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    bool operator!=(const iterator& o) const { return mask_ != o.mask_; }

   private:
    std::uint64_t mask_;
    int n_;
  };

  iterator begin() const { return iterator(0, n_); }
  iterator end() const { return iterator(std::uint64_t{1} << n_, n_); }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }

 private:
  int n_;
};

inline StateRange state_range(int n, int cap = kDefaultStateCap) {
  if (n < 0) throw index_error("state_range: negative crossing count");
  if (n > cap)
    throw cap_exceeded_error("state_range: " + std::to_string(n) + " crossings exceed the cap of " +
                             std::to_string(cap));
  return StateRange(n);
}

namespace detail {

// Diagram with arc labels renumbered 0..2n-1 for tight union-find loops.
struct CompiledDiagram {
  int n = 0;
  int label_count = 0;
  int free_loops = 0;
  std::vector<std::array<int, 4>> tuples;

  explicit CompiledDiagram(const Diagram& d) : n(d.size()), free_loops(d.free_loops) {
    std::map<int, int> index;
    tuples.reserve(d.crossings.size());
    for (const auto& t : d.crossings) {
      std::array<int, 4> dense{};
      for (int p = 0; p < 4; ++p) {
        auto [it, inserted] = index.emplace(t.ends[p], label_count);
        if (inserted) ++label_count;
        dense[p] = it->second;
      }
      tuples.push_back(dense);
    }
  }

  // Circles after smoothing every crossing; scratch must hold label_count ints.
  int count_circles(std::uint64_t bits, std::vector<int>& scratch) const {
    scratch.resize(label_count);
    for (int i = 0; i < label_count; ++i) scratch[i] = i;
    auto find = [&scratch](int x) {
      while (scratch[x] != x) {
        scratch[x] = scratch[scratch[x]];
        x = scratch[x];
      }
      return x;
    };
    for (int c = 0; c < n; ++c) {
      const auto& t = tuples[c];
      int a0, a1, b0, b1;
      if ((bits >> c) & 1) {
        a0 = t[0]; a1 = t[3]; b0 = t[1]; b1 = t[2];
      } else {
        a0 = t[0]; a1 = t[1]; b0 = t[2]; b1 = t[3];
      }
      int ra = find(a0), rb = find(a1);
      if (ra != rb) scratch[rb] = ra;
      ra = find(b0); rb = find(b1);
      if (ra != rb) scratch[rb] = ra;
    }
    int circles = free_loops;
    for (int i = 0; i < label_count; ++i) {
      if (find(i) == i) ++circles;
    }
    return circles;
  }
};

}  // namespace detail

// Number of simple closed curves after smoothing every crossing per the state.
inline int circle_count(const Diagram& d, const State& s) {
  if (s.length != d.size())
    throw length_mismatch_error("state length " + std::to_string(s.length) + " != crossing count " +
                                std::to_string(d.size()));
  detail::CompiledDiagram cd(d);
  std::vector<int> scratch;
  return cd.count_circles(s.bits, scratch);
}

// Circle counts of the two extreme states (all-A, all-B).
inline std::pair<int, int> extreme_counts(const Diagram& d) {
  detail::CompiledDiagram cd(d);
  std::vector<int> scratch;
  int a = cd.count_circles(all_a_state(d.size()).bits, scratch);
  int b = cd.count_circles(all_b_state(d.size()).bits, scratch);
  return {a, b};
}

// Independent oracle: walks each smoothed curve end-to-end instead of uniting
// label classes. Kept deliberately separate from count_circles.
inline int circle_count_by_walking(const Diagram& d, const State& s) {
  if (s.length != d.size())
    throw length_mismatch_error("state length " + std::to_string(s.length) + " != crossing count " +
                                std::to_string(d.size()));
  auto mate = detail::end_mates(d);
  int total = 4 * d.size();
  // partner[e] = the end joined to e by the smoothing at e's crossing.
  std::vector<int> partner(total);
  for (int c = 0; c < d.size(); ++c) {
    bool b = ((s.bits >> c) & 1) != 0;
    int base = 4 * c;
    if (b) {
      partner[base + 0] = base + 3;
      partner[base + 3] = base + 0;
      partner[base + 1] = base + 2;
      partner[base + 2] = base + 1;
    } else {
      partner[base + 0] = base + 1;
      partner[base + 1] = base + 0;
      partner[base + 2] = base + 3;
      partner[base + 3] = base + 2;
    }
  }
  std::vector<bool> visited(total, false);
  int circles = d.free_loops;
  for (int start = 0; start < total; ++start) {
    if (visited[start]) continue;
    int e = start;
    do {
      visited[e] = true;
      int across = partner[e];
      visited[across] = true;
      e = mate[across];
    } while (e != start);
    ++circles;
  }
  return circles;
}

}  // namespace circlenum

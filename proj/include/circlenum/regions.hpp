#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "circlenum/dealternator.hpp"
#include "circlenum/diagram.hpp"
#include "circlenum/errors.hpp"
#include "circlenum/states.hpp"

// Region decomposition: white and black face components joined by
// per-dealternator bridges. Each dealternator contributes one bridge per
// color, joining the faces at its same-colored corner pair. A component that
// is a disc with s_i holes has s_i + 1 boundary circles; summing per color
// recovers the extreme-state circle counts.

namespace circlenum {

struct Bridge {
  int dealternator = 0;
  FaceColor color = FaceColor::white;
  std::array<int, 2> endpoints{};  // faces at that color's corners (may coincide)
};

struct RegionComponent {
  FaceColor color = FaceColor::white;
  std::vector<int> faces;
  std::vector<Bridge> bridges;
  int holes = 0;  // rank of first homology: |bridges| - |faces| + 1
  int boundary_circles = 1;
};

struct RegionDecomposition {
  std::vector<RegionComponent> components;
  int r = 0;  // component count
  int s = 0;  // total holes
  int white_boundary_total = 0;
  int black_boundary_total = 0;
  FaceColor sA_color = FaceColor::white;  // which color's boundaries are the all-A circles

  int sA() const { return sA_color == FaceColor::white ? white_boundary_total : black_boundary_total; }
  int sB() const { return sA_color == FaceColor::white ? black_boundary_total : white_boundary_total; }
};

inline RegionDecomposition region_decomposition(const Diagram& d, const DealternatorInfo& info,
                                                const FaceDecomposition& fd,
                                                const CheckerboardColoring& col) {
  int n = d.size();
  if (n == 0) throw error("region_decomposition: diagram has no crossings");
  int nf = fd.count();

  // Anchor the color <-> state correspondence: at a non-dealternator crossing
  // the A-smoothing wraps the corner-(0,2) pair, so that pair's color is the
  // one whose boundaries the all-A circles trace. Dealternators wrap the
  // opposite pair; with k = n fall back to crossing 0.
  std::vector<bool> is_dealternator(n, false);
  for (int c : info.dealternators) is_dealternator[c] = true;
  int anchor = 0;
  for (int c = 0; c < n; ++c) {
    if (!is_dealternator[c]) {
      anchor = c;
      break;
    }
  }
  RegionDecomposition rd;
  rd.sA_color = col.color_of_face[fd.face_of_corner[4 * anchor]];

  std::vector<Bridge> bridges;
  bridges.reserve(2 * info.dealternators.size());
  for (int c : info.dealternators) {
    int f0 = fd.face_of_corner[4 * c + 0];
    int f1 = fd.face_of_corner[4 * c + 1];
    int f2 = fd.face_of_corner[4 * c + 2];
    int f3 = fd.face_of_corner[4 * c + 3];
    bridges.push_back(Bridge{c, col.color_of_face[f0], {f0, f2}});
    bridges.push_back(Bridge{c, col.color_of_face[f1], {f1, f3}});
  }

  detail::UnionFind uf(nf);
  for (const auto& b : bridges) uf.unite(b.endpoints[0], b.endpoints[1]);

  std::map<int, int> component_of_root;
  for (int f = 0; f < nf; ++f) {
    int root = uf.find(f);
    auto [it, inserted] = component_of_root.emplace(root, static_cast<int>(rd.components.size()));
    if (inserted) {
      RegionComponent comp;
      comp.color = col.color_of_face[f];
      rd.components.push_back(comp);
    }
    rd.components[it->second].faces.push_back(f);
  }
  for (const auto& b : bridges) {
    rd.components[component_of_root[uf.find(b.endpoints[0])]].bridges.push_back(b);
  }

  for (auto& comp : rd.components) {
    comp.holes = static_cast<int>(comp.bridges.size()) - static_cast<int>(comp.faces.size()) + 1;
    comp.boundary_circles = comp.holes + 1;
    rd.s += comp.holes;
    (comp.color == FaceColor::white ? rd.white_boundary_total : rd.black_boundary_total) +=
        comp.boundary_circles;
  }
  rd.r = static_cast<int>(rd.components.size());
  return rd;
}

struct RegionCircleNumbers {
  int sA = 0;
  int sB = 0;
  int total = 0;  // = r + s
};

inline RegionCircleNumbers circle_number_via_regions(const RegionDecomposition& rd) {
  return {rd.sA(), rd.sB(), rd.r + rd.s};
}

// Every region is a disc exactly when s = 0.
inline bool is_dealternator_connected_via_regions(const RegionDecomposition& rd) { return rd.s == 0; }

// The circle-number identities tied to the region decomposition, evaluated
// against independently computed extreme-state counts. Failures are reported,
// not thrown.
struct RegionIdentityReport {
  int n = 0;
  int k = 0;
  int r = 0;
  int s = 0;
  int circle_number = 0;      // |sA| + |sB| by direct smoothing
  int rs_value = 0;           // r + s
  bool rs_holds = false;
  int rk_value = 0;           // 2k + 2r - n - 2
  bool rk_holds = false;
  long long chi_lhs = 0;      // (n+3k) - (2n+4k+2s) + circle_number
  long long chi_rhs = 0;      // 2 - 3k
  bool chi_holds = false;
};

inline RegionIdentityReport check_region_identities(const Diagram& d, const DealternatorInfo& info,
                                                    const RegionDecomposition& rd) {
  RegionIdentityReport rep;
  rep.n = d.size();
  rep.k = info.k;
  rep.r = rd.r;
  rep.s = rd.s;
  auto [sa, sb] = extreme_counts(d);
  rep.circle_number = sa + sb;
  rep.rs_value = rd.r + rd.s;
  rep.rs_holds = rep.circle_number == rep.rs_value;
  rep.rk_value = 2 * rep.k + 2 * rep.r - rep.n - 2;
  rep.rk_holds = rep.circle_number == rep.rk_value;
  rep.chi_lhs = (rep.n + 3LL * rep.k) - (2LL * rep.n + 4LL * rep.k + 2LL * rep.s) + rep.circle_number;
  rep.chi_rhs = 2 - 3LL * rep.k;
  rep.chi_holds = rep.chi_lhs == rep.chi_rhs;
  return rep;
}

// g with 2g = 2 + n - (|sA| + |sB|).
inline int turaev_genus(const Diagram& d) {
  if (!is_connected(d)) throw disconnected_error("turaev_genus: diagram is not connected");
  auto [sa, sb] = extreme_counts(d);
  int twice = 2 + d.size() - (sa + sb);
  if (twice % 2 != 0) throw error("turaev_genus: odd 2g, corrupt diagram");
  return twice / 2;
}

// Counts for the surgery surface and its graph: vertices n+3k, edges 2n+4k,
// Euler characteristic 2-3k, genus k, k boundary components.
struct SurfaceData {
  int gamma_vertices = 0;
  int gamma_edges = 0;
  int euler_characteristic = 0;
  int genus = 0;
  int boundary_components = 0;
};

inline SurfaceData surface_data(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw error("surface_data: need n >= 1 and 0 <= k <= n");
  return SurfaceData{n + 3 * k, 2 * n + 4 * k, 2 - 3 * k, k, k};
}

}  // namespace circlenum

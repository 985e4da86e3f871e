#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "circlenum/errors.hpp"

// PD-coded 4-valent planar diagrams.
//
// A crossing is a tuple of four arc labels listed counterclockwise around the
// crossing; positions 0 and 2 carry the under-strand, positions 1 and 3 the
// over-strand. Every arc label occurs exactly twice across the whole diagram
// (multiplicity inside a tuple counts). Corner j of a crossing is the region
// slot between tuple positions j and (j+1) mod 4.
//
// Smoothing convention: an A-smoothing joins end pairs (0,1) and (2,3), a
// B-smoothing joins (0,3) and (1,2). The pairing is pinned globally by the
// alternating identity |sA|+|sB| = n+2 and the mirror-swap property.

namespace circlenum {

struct CrossingTuple {
  std::array<int, 4> ends;

  friend bool operator==(const CrossingTuple&, const CrossingTuple&) = default;
};

struct Diagram {
  std::vector<CrossingTuple> crossings;
  int free_loops = 0;  // crossingless circle components

  int size() const { return static_cast<int>(crossings.size()); }

  friend bool operator==(const Diagram&, const Diagram&) = default;
};

enum class Smoothing { A, B };

enum class FaceColor { white, black };

// Checks the arc-label double-occurrence invariant; throws label_error.
inline void validate(const Diagram& d) {
  std::map<int, int> occurrences;
  for (const auto& t : d.crossings) {
    for (int label : t.ends) {
      if (label <= 0) throw label_error("arc labels must be positive, got " + std::to_string(label));
      ++occurrences[label];
    }
  }
  for (const auto& [label, count] : occurrences) {
    if (count != 2) {
      throw label_error("arc label " + std::to_string(label) + " occurs " + std::to_string(count) +
                        " times, expected 2");
    }
  }
  if (d.free_loops < 0) throw label_error("free_loops must be nonnegative");
}

// PD text format: whitespace-separated tokens, `X[a,b,c,d]` with positive
// decimal integers, optional `loops=<int>`, `#` starts a line comment.
// Crossing index = 0-based position among the X tokens.
inline Diagram parse_pd(std::string_view text) {
  Diagram d;
  std::string stripped;
  stripped.reserve(text.size());
  bool in_comment = false;
  for (char c : text) {
    if (c == '#') in_comment = true;
    if (c == '\n') in_comment = false;
    stripped.push_back(in_comment ? ' ' : c);
  }

  std::istringstream in(stripped);
  std::string token;
  while (in >> token) {
    if (token.rfind("X[", 0) == 0) {
      if (token.back() != ']') throw syntax_error("missing ']' in token '" + token + "'");
      std::string body = token.substr(2, token.size() - 3);
      std::vector<std::string> fields{""};
      for (char ch : body) {
        if (ch == ',') {
          fields.emplace_back();
        } else {
          fields.back().push_back(ch);
        }
      }
      if (fields.size() != 4) throw syntax_error("expected four arc labels in token '" + token + "'");
      std::array<int, 4> ends{};
      for (int i = 0; i < 4; ++i) {
        const std::string& num = fields[i];
        if (num.empty() || num.size() > 8 ||
            !std::all_of(num.begin(), num.end(), [](unsigned char ch) { return std::isdigit(ch); }))
          throw syntax_error("bad arc label '" + num + "' in token '" + token + "'");
        ends[i] = std::stoi(num);
      }
      d.crossings.push_back(CrossingTuple{ends});
    } else if (token.rfind("loops=", 0) == 0) {
      std::string num = token.substr(6);
      if (num.empty() || num.size() > 8 ||
          !std::all_of(num.begin(), num.end(), [](unsigned char ch) { return std::isdigit(ch); }))
        throw syntax_error("bad loop count in token '" + token + "'");
      d.free_loops += std::stoi(num);
    } else {
      throw syntax_error("unrecognized token '" + token + "'");
    }
  }
  validate(d);
  return d;
}

inline std::string to_pd_text(const Diagram& d) {
  std::string out;
  for (const auto& t : d.crossings) {
    if (!out.empty()) out += ' ';
    out += "X[" + std::to_string(t.ends[0]) + ',' + std::to_string(t.ends[1]) + ',' +
           std::to_string(t.ends[2]) + ',' + std::to_string(t.ends[3]) + ']';
  }
  if (d.free_loops > 0) {
    if (!out.empty()) out += ' ';
    out += "loops=" + std::to_string(d.free_loops);
  }
  return out;
}

namespace detail {

// Pairs up the two occurrences of each arc label. End id = 4*crossing + position.
inline std::vector<int> end_mates(const Diagram& d) {
  std::vector<int> mate(4 * d.crossings.size(), -1);
  std::map<int, int> first_seen;
  for (int c = 0; c < d.size(); ++c) {
    for (int p = 0; p < 4; ++p) {
      int label = d.crossings[c].ends[p];
      int e = 4 * c + p;
      auto it = first_seen.find(label);
      if (it == first_seen.end()) {
        first_seen.emplace(label, e);
      } else {
        if (it->second < 0) throw label_error("arc label " + std::to_string(label) + " occurs more than twice");
        mate[e] = it->second;
        mate[it->second] = e;
        it->second = -1;
      }
    }
  }
  for (auto& [label, e] : first_seen) {
    if (e >= 0) throw label_error("arc label " + std::to_string(label) + " occurs only once");
  }
  return mate;
}

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // Returns true if the two were already in one class.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return true;
    parent[b] = a;
    return false;
  }
};

}  // namespace detail

// True iff the projection is a single component: one crossing component with
// no stray loops, or a single crossingless loop.
inline bool is_connected(const Diagram& d) {
  if (d.size() == 0) return d.free_loops == 1;
  if (d.free_loops > 0) return false;
  auto mate = detail::end_mates(d);
  detail::UnionFind uf(d.size());
  for (int e = 0; e < static_cast<int>(mate.size()); ++e) {
    uf.unite(e / 4, mate[e] / 4);
  }
  int root = uf.find(0);
  for (int c = 1; c < d.size(); ++c) {
    if (uf.find(c) != root) return false;
  }
  return true;
}

// Faces of the projection, traced from the rotation system. Corner slot
// id = 4*crossing + corner position (0..3).
struct FaceDecomposition {
  std::vector<std::vector<int>> faces;  // corner slots in boundary order
  std::vector<int> face_of_corner;      // size 4n

  int count() const { return static_cast<int>(faces.size()); }
};

inline FaceDecomposition faces(const Diagram& d) {
  if (d.size() == 0) throw error("faces: a crossingless diagram has no rotation system");
  if (!is_connected(d)) throw disconnected_error("faces: diagram is not connected");
  auto mate = detail::end_mates(d);
  int total = 4 * d.size();
  FaceDecomposition fd;
  fd.face_of_corner.assign(total, -1);
  for (int start = 0; start < total; ++start) {
    if (fd.face_of_corner[start] >= 0) continue;
    std::vector<int> face;
    int e = start;
    do {
      fd.face_of_corner[e] = static_cast<int>(fd.faces.size());
      face.push_back(e);
      int c = e / 4, p = e % 4;
      e = mate[4 * c + (p + 1) % 4];
    } while (e != start);
    fd.faces.push_back(std::move(face));
  }
  // A connected 4-valent rotation system embeds in the sphere iff F = n+2.
  if (fd.count() != d.size() + 2) {
    throw error("faces: rotation system is not spherical (F = " + std::to_string(fd.count()) +
                ", expected " + std::to_string(d.size() + 2) + ")");
  }
  return fd;
}

struct CheckerboardColoring {
  std::vector<FaceColor> color_of_face;
};

// Proper 2-coloring of the faces; the face at corner (crossing 0, corner 0)
// is anchored white.
inline CheckerboardColoring checkerboard(const Diagram& d, const FaceDecomposition& fd) {
  auto mate = detail::end_mates(d);
  int nf = fd.count();
  std::vector<int> color(nf, -1);
  color[fd.face_of_corner[0]] = 0;  // white
  std::vector<int> stack{fd.face_of_corner[0]};
  // Face adjacency: the two sides of the arc through ends e, mate[e].
  std::vector<std::vector<int>> adj(nf);
  for (int e = 0; e < static_cast<int>(mate.size()); ++e) {
    if (e < mate[e]) {
      int f1 = fd.face_of_corner[e];
      int f2 = fd.face_of_corner[mate[e]];
      if (f1 == f2) throw coloring_error("arc with the same face on both sides");
      adj[f1].push_back(f2);
      adj[f2].push_back(f1);
    }
  }
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (int g : adj[f]) {
      if (color[g] < 0) {
        color[g] = 1 - color[f];
        stack.push_back(g);
      } else if (color[g] == color[f]) {
        throw coloring_error("face adjacency graph is not bipartite");
      }
    }
  }
  CheckerboardColoring col;
  col.color_of_face.resize(nf);
  for (int f = 0; f < nf; ++f) {
    if (color[f] < 0) throw coloring_error("face not reached by coloring");
    col.color_of_face[f] = color[f] == 0 ? FaceColor::white : FaceColor::black;
  }
  return col;
}

// True iff no crossing is nugatory (opposite corners in one face).
inline bool is_reduced(const Diagram& d) {
  auto fd = faces(d);
  for (int c = 0; c < d.size(); ++c) {
    if (fd.face_of_corner[4 * c] == fd.face_of_corner[4 * c + 2] ||
        fd.face_of_corner[4 * c + 1] == fd.face_of_corner[4 * c + 3])
      return false;
  }
  return true;
}

namespace detail {

inline CrossingTuple rotated(const CrossingTuple& t) {
  return CrossingTuple{{t.ends[1], t.ends[2], t.ends[3], t.ends[0]}};
}

}  // namespace detail

// Swaps over/under at every crossing; the rotation system is preserved.
inline Diagram mirror(const Diagram& d) {
  Diagram out = d;
  for (auto& t : out.crossings) t = detail::rotated(t);
  return out;
}

// Switches over/under at the listed crossings.
inline Diagram switch_crossings(const Diagram& d, const std::vector<int>& indices) {
  std::vector<bool> seen(d.size(), false);
  for (int c : indices) {
    if (c < 0 || c >= d.size()) throw index_error("crossing index " + std::to_string(c) + " out of range");
    if (seen[c]) throw index_error("crossing index " + std::to_string(c) + " listed twice");
    seen[c] = true;
  }
  Diagram out = d;
  for (int c : indices) out.crossings[c] = detail::rotated(out.crossings[c]);
  return out;
}

// Replaces crossing c by two joining arcs. A joins end pairs (0,1),(2,3);
// B joins (0,3),(1,2). A join that closes a crossingless circle increments
// free_loops. The result has n-1 crossings.
inline Diagram smooth_crossing(const Diagram& d, int c, Smoothing kind) {
  if (c < 0 || c >= d.size()) throw index_error("crossing index " + std::to_string(c) + " out of range");
  const auto& t = d.crossings[c].ends;

  // conn[p] = position joined to p by the smoothing.
  std::array<int, 4> conn = kind == Smoothing::A ? std::array<int, 4>{1, 0, 3, 2}
                                                  : std::array<int, 4>{3, 2, 1, 0};
  // internal[p] = the other position carrying the same label, if any.
  std::array<int, 4> internal{-1, -1, -1, -1};
  for (int p = 0; p < 4; ++p) {
    for (int q = p + 1; q < 4; ++q) {
      if (t[p] == t[q]) {
        internal[p] = q;
        internal[q] = p;
      }
    }
  }

  Diagram out;
  out.free_loops = d.free_loops;
  out.crossings.reserve(d.crossings.size() - 1);
  for (int i = 0; i < d.size(); ++i) {
    if (i != c) out.crossings.push_back(d.crossings[i]);
  }

  // The four ends form chains alternating join/arc moves. A chain whose two
  // endpoint arcs leave the crossing merges those arcs; a closed chain is a
  // circle that detaches.
  std::array<bool, 4> visited{false, false, false, false};
  auto relabel = [&out](int from, int to) {
    for (auto& tuple : out.crossings) {
      for (int& label : tuple.ends) {
        if (label == from) label = to;
      }
    }
  };
  for (int p0 = 0; p0 < 4; ++p0) {
    if (visited[p0] || internal[p0] >= 0) continue;
    int cur = p0;
    for (;;) {
      visited[cur] = true;
      int q = conn[cur];
      visited[q] = true;
      if (internal[q] < 0) {
        int a = t[p0], b = t[q];
        int keep = std::min(a, b);
        relabel(a, keep);
        relabel(b, keep);
        break;
      }
      cur = internal[q];
    }
  }
  for (int p0 = 0; p0 < 4; ++p0) {
    if (visited[p0]) continue;
    int cur = p0;
    do {
      visited[cur] = true;
      int q = conn[cur];
      visited[q] = true;
      cur = internal[q];
    } while (cur != p0);
    ++out.free_loops;
  }
  return out;
}

}  // namespace circlenum

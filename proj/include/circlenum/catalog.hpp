#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "circlenum/diagram.hpp"
#include "circlenum/pretzel.hpp"

// Built-in named diagrams. The k11n151 slot is not bundled: its PD code must
// come from a knot table, supplied as a file (see the README recipe).

namespace circlenum {

struct CatalogEntry {
  std::string name;
  std::string pd;
};

inline std::vector<CatalogEntry> builtin_catalog() {
  return {
      {"unknot-loop", "loops=1"},
      {"curl", "X[1,1,2,2]"},
      {"hopf", "X[2,1,3,4] X[1,2,4,3]"},
      {"trefoil", "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"},
      {"figure-eight", "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"},
      // 6-crossing alternating 3-component diagram with no bigon faces; the
      // smallest catalog member whose single switches stay dealternator reduced
      {"borromean", "X[1,7,2,5] X[9,4,12,1] X[10,2,11,3] X[4,6,3,8] X[5,10,6,9] X[8,11,7,12]"},
      {"p333", to_pd_text(pretzel({3, 3, 3}))},
      {"p4m33", to_pd_text(pretzel({4, -3, 3}))},
      {"switched-trefoil", "X[4,2,5,1] X[3,6,4,1] X[5,2,6,3]"},
  };
}

inline std::optional<CatalogEntry> load_k11n151(const std::string& path) {
  if (path.empty()) return std::nullopt;
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  // reject unusable files early and normalize the text
  return CatalogEntry{"k11n151", to_pd_text(parse_pd(buf.str()))};
}

// Built-ins plus the optional user-supplied k11n151 entry.
inline std::vector<CatalogEntry> catalog(const std::string& k11n151_path = "") {
  auto entries = builtin_catalog();
  if (auto extra = load_k11n151(k11n151_path)) entries.push_back(*extra);
  return entries;
}

}  // namespace circlenum

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "circlenum/bracket.hpp"
#include "circlenum/dealternator.hpp"
#include "circlenum/diagram.hpp"
#include "circlenum/regions.hpp"
#include "circlenum/states.hpp"

// Full per-diagram report. Fields that need a connected projection (or a
// computed bracket) are empty when not applicable and serialize as null.

namespace circlenum {

struct AnalyzeOptions {
  bool with_bracket = true;
  int state_cap = kDefaultStateCap;
  int dealternator_cap = kDefaultDealternatorCap;
  unsigned threads = 0;
};

struct PerRegion {
  std::string color;
  int faces = 0;
  int bridges = 0;
  int s_i = 0;
};

struct CheckSet {
  std::optional<bool> theorem_rs;
  std::optional<bool> theorem_rk;
  std::optional<bool> chi_identity;
  std::optional<bool> skein_all;
  std::optional<bool> region_vs_direct;
  std::optional<bool> dc_methods_agree;

  bool all_pass() const {
    for (const auto& c : {theorem_rs, theorem_rk, chi_identity, skein_all, region_vs_direct,
                          dc_methods_agree}) {
      if (c.has_value() && !*c) return false;
    }
    return true;
  }
};

struct AnalysisReport {
  int n = 0;
  int free_loops = 0;
  bool is_connected = false;
  int sA = 0;
  int sB = 0;
  int circle_number = 0;

  std::optional<int> k;
  std::optional<std::vector<int>> dealternators;
  std::optional<bool> tie;
  std::optional<bool> is_reduced;
  std::optional<bool> is_alternating;
  std::optional<bool> is_dealternator_connected;
  std::optional<bool> is_dealternator_reduced;
  std::optional<int> r;
  std::optional<int> s;
  std::optional<std::vector<PerRegion>> per_region;
  std::optional<int> turaev_genus;
  std::optional<SurfaceData> surface;
  std::optional<BracketReport> bracket;
  std::optional<BoundsReport> bounds;
  CheckSet checks;
};

inline AnalysisReport analyze(const Diagram& d, const AnalyzeOptions& opts = {}) {
  AnalysisReport rep;
  rep.n = d.size();
  rep.free_loops = d.free_loops;
  rep.is_connected = circlenum::is_connected(d);
  auto [sa, sb] = extreme_counts(d);
  rep.sA = sa;
  rep.sB = sb;
  rep.circle_number = sa + sb;

  bool topology = rep.is_connected && rep.n >= 1;
  RegionDecomposition rd;
  DealternatorInfo info;
  if (topology) {
    FaceDecomposition fd = faces(d);
    CheckerboardColoring col = checkerboard(d, fd);
    info = dealternator_info(d);
    rd = region_decomposition(d, info, fd, col);

    rep.k = info.k;
    rep.dealternators = info.dealternators;
    rep.tie = info.tie;
    rep.is_reduced = circlenum::is_reduced(d);
    rep.is_alternating = info.k == 0;
    rep.is_dealternator_connected = is_dealternator_connected(d, info, opts.dealternator_cap);
    rep.is_dealternator_reduced = is_dealternator_reduced(d, info, opts.dealternator_cap);
    rep.r = rd.r;
    rep.s = rd.s;
    std::vector<PerRegion> regions;
    for (const auto& comp : rd.components) {
      regions.push_back(PerRegion{comp.color == FaceColor::white ? "white" : "black",
                                  static_cast<int>(comp.faces.size()),
                                  static_cast<int>(comp.bridges.size()), comp.holes});
    }
    rep.per_region = std::move(regions);
    rep.surface = surface_data(rep.n, info.k);

    RegionIdentityReport ids = check_region_identities(d, info, rd);
    rep.checks.theorem_rs = ids.rs_holds;
    rep.checks.theorem_rk = ids.rk_holds;
    rep.checks.chi_identity = ids.chi_holds;
    rep.checks.region_vs_direct = rd.sA() == sa && rd.sB() == sb;
    rep.checks.dc_methods_agree =
        is_dealternator_connected_via_regions(rd) == *rep.is_dealternator_connected;
  }
  if (rep.is_connected) rep.turaev_genus = circlenum::turaev_genus(d);

  if (opts.with_bracket) {
    rep.bracket = bracket_report(d, opts.state_cap, opts.threads);
    if (topology) {
      rep.bounds = bounds_report(rep.n, *rep.k, sa, sb, *rep.is_dealternator_connected,
                                 *rep.is_dealternator_reduced, rep.bracket->span);
    }
    bool skein_ok = true;
    for (int c = 0; c < rep.n; ++c) {
      LaurentPolynomial rhs =
          kauffman_bracket(smooth_crossing(d, c, Smoothing::A), opts.state_cap, opts.threads).scaled(1, 1) +
          kauffman_bracket(smooth_crossing(d, c, Smoothing::B), opts.state_cap, opts.threads).scaled(1, -1);
      if (rhs != rep.bracket->bracket) skein_ok = false;
    }
    rep.checks.skein_all = skein_ok;
  }
  return rep;
}

inline nlohmann::json to_json(const LaurentPolynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto [e, c] : p.terms()) terms.push_back({e, c});
  return nlohmann::json{{"terms", terms}};
}

inline nlohmann::json to_json(const AnalysisReport& rep) {
  nlohmann::json j;
  auto put = [&j](const char* key, const auto& opt) {
    if (opt.has_value()) {
      j[key] = *opt;
    } else {
      j[key] = nullptr;
    }
  };

  j["n"] = rep.n;
  j["free_loops"] = rep.free_loops;
  j["is_connected"] = rep.is_connected;
  j["sA"] = rep.sA;
  j["sB"] = rep.sB;
  j["circle_number"] = rep.circle_number;
  put("k", rep.k);
  put("dealternators", rep.dealternators);
  put("tie", rep.tie);
  put("is_reduced", rep.is_reduced);
  put("is_alternating", rep.is_alternating);
  put("is_dealternator_connected", rep.is_dealternator_connected);
  put("is_dealternator_reduced", rep.is_dealternator_reduced);
  put("r", rep.r);
  put("s", rep.s);
  put("turaev_genus", rep.turaev_genus);

  if (rep.per_region.has_value()) {
    nlohmann::json regions = nlohmann::json::array();
    for (const auto& pr : *rep.per_region) {
      regions.push_back({{"color", pr.color}, {"faces", pr.faces}, {"bridges", pr.bridges}, {"s_i", pr.s_i}});
    }
    j["per_region"] = regions;
  } else {
    j["per_region"] = nullptr;
  }

  if (rep.surface.has_value()) {
    j["surface"] = {{"vertices", rep.surface->gamma_vertices},
                    {"edges", rep.surface->gamma_edges},
                    {"chi", rep.surface->euler_characteristic},
                    {"genus", rep.surface->genus},
                    {"boundary", rep.surface->boundary_components}};
  } else {
    j["surface"] = nullptr;
  }

  if (rep.bracket.has_value()) {
    nlohmann::json b = to_json(rep.bracket->bracket);
    b["span"] = rep.bracket->span;
    b["jones_span"] = rep.bracket->jones_span;
    b["M"] = rep.bracket->M;
    b["m"] = rep.bracket->m;
    b["a_M"] = rep.bracket->a_M;
    b["a_m"] = rep.bracket->a_m;
    b["A_adequate"] = rep.bracket->A_adequate;
    b["B_adequate"] = rep.bracket->B_adequate;
    j["bracket"] = b;
  } else {
    j["bracket"] = nullptr;
  }

  if (rep.bounds.has_value()) {
    auto bound = [](const BoundCheck& b) {
      return nlohmann::json{{"value", b.value}, {"applicable", b.applicable}, {"satisfied", b.satisfied}};
    };
    j["bounds"] = {{"generic", bound(rep.bounds->generic)},
                   {"zhu", bound(rep.bounds->zhu)},
                   {"adams", bound(rep.bounds->adams)}};
  } else {
    j["bounds"] = nullptr;
  }

  nlohmann::json checks;
  auto putc = [&checks](const char* key, const std::optional<bool>& opt) {
    if (opt.has_value()) {
      checks[key] = *opt ? "pass" : "fail";
    } else {
      checks[key] = nullptr;
    }
  };
  putc("theorem_rs", rep.checks.theorem_rs);
  putc("theorem_rk", rep.checks.theorem_rk);
  putc("chi_identity", rep.checks.chi_identity);
  putc("skein_all", rep.checks.skein_all);
  putc("region_vs_direct", rep.checks.region_vs_direct);
  putc("dc_methods_agree", rep.checks.dc_methods_agree);
  j["checks"] = checks;
  return j;
}

inline std::string to_text(const AnalysisReport& rep) {
  std::string out;
  auto line = [&out](const std::string& s) { out += s + "\n"; };
  auto show = [](const std::optional<bool>& b) {
    return b.has_value() ? (*b ? std::string("yes") : std::string("no")) : std::string("n/a");
  };

  line("crossings:                 " + std::to_string(rep.n) +
       (rep.free_loops ? "  (+" + std::to_string(rep.free_loops) + " free loops)" : ""));
  line("connected:                 " + std::string(rep.is_connected ? "yes" : "no"));
  line("|sA|, |sB|:                " + std::to_string(rep.sA) + ", " + std::to_string(rep.sB));
  line("circle number:             " + std::to_string(rep.circle_number));
  if (rep.k.has_value()) {
    std::string deal = "{";
    for (size_t i = 0; i < rep.dealternators->size(); ++i) {
      if (i) deal += ",";
      deal += std::to_string((*rep.dealternators)[i]);
    }
    deal += "}";
    line("k (dealternators):         " + std::to_string(*rep.k) + " " + deal +
         (*rep.tie ? "  [tie]" : ""));
  } else {
    line("k (dealternators):         n/a");
  }
  line("reduced:                   " + show(rep.is_reduced));
  line("alternating:               " + show(rep.is_alternating));
  line("dealternator connected:    " + show(rep.is_dealternator_connected));
  line("dealternator reduced:      " + show(rep.is_dealternator_reduced));
  if (rep.r.has_value()) {
    line("regions r, holes s:        " + std::to_string(*rep.r) + ", " + std::to_string(*rep.s));
  }
  if (rep.turaev_genus.has_value()) {
    line("turaev genus:              " + std::to_string(*rep.turaev_genus));
  }
  if (rep.surface.has_value()) {
    line("surface:                   V=" + std::to_string(rep.surface->gamma_vertices) +
         " E=" + std::to_string(rep.surface->gamma_edges) +
         " chi=" + std::to_string(rep.surface->euler_characteristic) +
         " genus=" + std::to_string(rep.surface->genus));
  }
  if (rep.bracket.has_value()) {
    line("bracket:                   " + rep.bracket->bracket.to_string());
    line("span:                      " + std::to_string(rep.bracket->span) + "  (jones span " +
         std::to_string(rep.bracket->jones_span) + ")");
    line("M, m, a_M, a_m:            " + std::to_string(rep.bracket->M) + ", " +
         std::to_string(rep.bracket->m) + ", " + std::to_string(rep.bracket->a_M) + ", " +
         std::to_string(rep.bracket->a_m));
    line("A/B adequate:              " + std::string(rep.bracket->A_adequate ? "yes" : "no") + " / " +
         (rep.bracket->B_adequate ? "yes" : "no"));
  }
  if (rep.bounds.has_value()) {
    auto bound = [](const char* name, const BoundCheck& b) {
      std::string s = std::string(name) + " <= " + std::to_string(b.value);
      if (!b.applicable) return s + "  (not applicable)";
      return s + (b.satisfied ? "  ok" : "  VIOLATED");
    };
    line("bound generic:             " + bound("span", rep.bounds->generic));
    line("bound zhu:                 " + bound("span", rep.bounds->zhu));
    line("bound adams:               " + bound("span", rep.bounds->adams));
  }
  auto checkmark = [&show](const std::optional<bool>& b) {
    return b.has_value() ? (*b ? std::string("pass") : std::string("FAIL")) : std::string("n/a");
  };
  line("checks:                    rs=" + checkmark(rep.checks.theorem_rs) +
       " rk=" + checkmark(rep.checks.theorem_rk) + " chi=" + checkmark(rep.checks.chi_identity) +
       " skein=" + checkmark(rep.checks.skein_all) +
       " regions=" + checkmark(rep.checks.region_vs_direct) +
       " dc=" + checkmark(rep.checks.dc_methods_agree));
  return out;
}

}  // namespace circlenum

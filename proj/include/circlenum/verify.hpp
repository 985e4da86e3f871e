#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "circlenum/bracket.hpp"
#include "circlenum/catalog.hpp"
#include "circlenum/dealternator.hpp"
#include "circlenum/diagram.hpp"
#include "circlenum/pretzel.hpp"
#include "circlenum/regions.hpp"
#include "circlenum/states.hpp"

// Batch verification: every structural identity the library claims, run over
// a corpus of diagrams. Light entries get the topology suite only; full
// entries also get the bracket suite.

namespace circlenum {

struct NamedDiagram {
  std::string name;
  Diagram diagram;
  bool full = true;  // include bracket-based properties
};

struct VerifyOptions {
  int max_crossings = 12;   // skip larger diagrams entirely
  int exhaustive_max = 8;   // all-states suites and switch families up to here
  int pretzel_family_max = 10;
  int state_cap = kDefaultStateCap;
  int dealternator_cap = kDefaultDealternatorCap;
  std::string k11n151_path;
};

struct PropertyResult {
  std::string property;
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;  // "name: PD"
};

struct VerifySummary {
  std::vector<PropertyResult> properties;
  int diagrams = 0;
  int skipped = 0;

  bool ok() const {
    for (const auto& p : properties) {
      if (p.failed > 0) return false;
    }
    return true;
  }
};

// The built-in corpus: catalog entries, every switch subset of the small
// alternating catalog diagrams, and all alternating pretzels up to the family
// cap (light entries).
inline std::vector<NamedDiagram> default_corpus(const VerifyOptions& opts) {
  std::vector<NamedDiagram> corpus;
  for (const auto& entry : catalog(opts.k11n151_path)) {
    corpus.push_back(NamedDiagram{entry.name, parse_pd(entry.pd), true});
  }

  // exhaustive switch subsets of small alternating catalog diagrams
  std::vector<NamedDiagram> bases;
  for (const auto& nd : corpus) {
    if (nd.diagram.size() >= 1 && nd.diagram.size() <= opts.exhaustive_max &&
        is_connected(nd.diagram) && dealternator_info(nd.diagram).k == 0) {
      bases.push_back(nd);
    }
  }
  for (const auto& base : bases) {
    int n = base.diagram.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<int> switches;
      for (int c = 0; c < n; ++c) {
        if ((mask >> c) & 1) switches.push_back(c);
      }
      std::string name = base.name + "+switch{";
      for (size_t i = 0; i < switches.size(); ++i) {
        if (i) name += ",";
        name += std::to_string(switches[i]);
      }
      name += "}";
      corpus.push_back(NamedDiagram{name, switch_crossings(base.diagram, switches), true});
    }
  }

  // all-positive pretzel compositions: alternating family
  std::vector<int> twists;
  std::function<void(int)> emit = [&](int remaining) {
    if (twists.size() >= 2 && remaining == 0) {
      std::string name = "P(";
      for (size_t i = 0; i < twists.size(); ++i) {
        if (i) name += ",";
        name += std::to_string(twists[i]);
      }
      name += ")";
      corpus.push_back(NamedDiagram{name, pretzel(twists), false});
    }
    if (remaining == 0) return;
    for (int t = 1; t <= remaining; ++t) {
      twists.push_back(t);
      emit(remaining - t);
      twists.pop_back();
    }
  };
  for (int n = 2; n <= opts.pretzel_family_max; ++n) emit(n);
  return corpus;
}

namespace detail {

struct PropertyRun {
  VerifySummary* summary;
  const NamedDiagram* current = nullptr;

  PropertyResult& result_for(const std::string& property) {
    for (auto& p : summary->properties) {
      if (p.property == property) return p;
    }
    summary->properties.push_back(PropertyResult{property});
    return summary->properties.back();
  }

  // verdict: nullopt = not applicable (not counted)
  void record(const std::string& property, std::optional<bool> verdict) {
    if (!verdict.has_value()) return;
    PropertyResult& r = result_for(property);
    if (*verdict) {
      ++r.passed;
    } else {
      ++r.failed;
      if (r.failures.size() < 8) r.failures.push_back(current->name + ": " + to_pd_text(current->diagram));
    }
  }
};

}  // namespace detail

inline VerifySummary run_verification(const std::vector<NamedDiagram>& corpus,
                                      const VerifyOptions& opts = {}) {
  VerifySummary summary;
  detail::PropertyRun run{&summary};

  for (const NamedDiagram& nd : corpus) {
    const Diagram& d = nd.diagram;
    int n = d.size();
    if (n > opts.max_crossings) {
      ++summary.skipped;
      continue;
    }
    ++summary.diagrams;
    run.current = &nd;

    run.record("pd_roundtrip", parse_pd(to_pd_text(d)) == d);

    if (n >= 1) {
      bool ops_valid = true;
      try {
        validate(mirror(d));
        validate(switch_crossings(d, {0}));
        validate(smooth_crossing(d, 0, Smoothing::A));
        validate(smooth_crossing(d, n - 1, Smoothing::B));
      } catch (const error&) {
        ops_valid = false;
      }
      run.record("ops_preserve_validity", ops_valid);
    }

    auto [sa, sb] = extreme_counts(d);
    run.record("extreme_mirror_swap", extreme_counts(mirror(d)) == std::pair<int, int>{sb, sa});

    int state_limit = n <= opts.exhaustive_max ? n : -1;
    {
      // union-find vs curve tracer, and the one-flip circle step
      bool oracle_ok = true, flip_ok = true;
      auto check_state = [&](State s) {
        int base = circle_count(d, s);
        if (base != circle_count_by_walking(d, s)) oracle_ok = false;
        if (base < 1 || base > n + 1 + d.free_loops) flip_ok = false;
        for (int c = 0; c < n; ++c) {
          int diff = circle_count(d, State{s.bits ^ (std::uint64_t{1} << c), n}) - base;
          if (diff != 1 && diff != -1) flip_ok = false;
        }
      };
      if (state_limit >= 0) {
        for (State s : state_range(n, opts.state_cap)) check_state(s);
      } else {
        check_state(all_a_state(n));
        check_state(all_b_state(n));
      }
      run.record("unionfind_vs_tracer", oracle_ok);
      if (n >= 1) run.record("flip_steps_by_one", flip_ok);
    }

    if (n == 0 || !is_connected(d)) continue;

    FaceDecomposition fd = faces(d);
    run.record("faces_euler", fd.count() == n + 2);

    CheckerboardColoring col = checkerboard(d, fd);
    {
      bool proper = true;
      auto mate = detail::end_mates(d);
      for (int e = 0; e < 4 * n; ++e) {
        if (col.color_of_face[fd.face_of_corner[e]] == col.color_of_face[fd.face_of_corner[mate[e]]])
          proper = false;
      }
      run.record("checkerboard_proper", proper);
    }

    {
      bool has_curl_tuple = false;
      for (const auto& t : d.crossings) {
        for (int p = 0; p < 4; ++p) {
          if (t.ends[p] == t.ends[(p + 1) % 4]) has_curl_tuple = true;
        }
      }
      run.record("curl_not_reduced",
                 has_curl_tuple ? std::optional<bool>(!is_reduced(d)) : std::nullopt);
    }

    DealternatorInfo info = dealternator_info(d);
    run.record("dealternator_idempotent", dealternator_info(info.alternating_diagram).k == 0 &&
                                              2 * info.k <= n);

    bool dc = false, dc_known = false;
    if (info.k <= opts.dealternator_cap) {
      auto family = dealternator_smoothings(d, info, opts.dealternator_cap);
      bool family_alternating = true;
      for (const auto& di : family) {
        if (di.size() >= 1 && is_connected(di) && dealternator_info(di).k != 0)
          family_alternating = false;
      }
      run.record("smoothed_family_alternating", family_alternating);
      dc = is_dealternator_connected(d, info, opts.dealternator_cap);
      dc_known = true;

      if (dc && info.k >= 1) {
        bool lemma_ok = true;
        for (int c : info.dealternators) {
          Diagram d1 = smooth_crossing(d, c, Smoothing::A);
          Diagram d2 = smooth_crossing(d, c, Smoothing::B);
          auto [sa1, sb1] = extreme_counts(d1);
          auto [sa2, sb2] = extreme_counts(d2);
          if (sa1 != sa || sa2 != sa + 1 || sb1 != sb + 1 || sb2 != sb) lemma_ok = false;
          if (is_connected(d2) && dealternator_info(d2).k != info.k - 1) lemma_ok = false;
        }
        run.record("lemma_smoothing_counts", lemma_ok);
      }
    }

    RegionDecomposition rd = region_decomposition(d, info, fd, col);
    RegionIdentityReport ids = check_region_identities(d, info, rd);
    run.record("theorem_rs", ids.rs_holds);
    run.record("theorem_rk", ids.rk_holds);
    run.record("chi_identity", ids.chi_holds);
    run.record("region_vs_direct", rd.sA() == sa && rd.sB() == sb);
    if (dc_known) run.record("dc_methods_agree", is_dealternator_connected_via_regions(rd) == dc);

    {
      detail::UnionFind uf(fd.count());
      int cycles = 0;
      for (const auto& comp : rd.components) {
        for (const auto& b : comp.bridges) {
          if (uf.unite(b.endpoints[0], b.endpoints[1])) ++cycles;
        }
      }
      run.record("holes_match_incremental", cycles == rd.s);
    }

    {
      int genus = turaev_genus(d);
      bool genus_ok = genus >= 0 && 2 * genus == 2 + n - (sa + sb);
      if (dc_known && dc && genus != info.k) genus_ok = false;
      run.record("genus_formula", genus_ok);
    }

    if (!nd.full || n > opts.state_cap) continue;

    BracketReport br = bracket_report(d, opts.state_cap);
    {
      bool support_ok = true;
      for (auto [e, cf] : br.bracket.terms()) {
        if (cf == 0 || e > br.M || e < br.m || (br.M - e) % 4 != 0) support_ok = false;
      }
      run.record("bracket_degree_support", support_ok);
    }
    {
      bool skein_ok = true;
      for (int c = 0; c < n; ++c) {
        if (!skein_check(d, c, opts.state_cap)) skein_ok = false;
      }
      run.record("skein_all_crossings", skein_ok);
    }
    run.record("mirror_bracket_negation",
               kauffman_bracket(mirror(d), opts.state_cap) == br.bracket.with_negated_exponents());
    run.record("parallel_matches_sequential",
               kauffman_bracket(d, opts.state_cap, 1) == kauffman_bracket(d, opts.state_cap, 3));
    {
      bool adequacy_ok = true;
      if (br.A_adequate && br.a_M != (sa % 2 == 1 ? 1 : -1)) adequacy_ok = false;
      if (br.B_adequate && br.a_m != (sb % 2 == 1 ? 1 : -1)) adequacy_ok = false;
      run.record("adequate_extreme_coefficients", adequacy_ok);
    }
    if (dc_known) {
      bool dr = is_dealternator_reduced(d, info, opts.dealternator_cap);
      BoundsReport bounds = bounds_report(n, info.k, sa, sb, dc, dr, br.span);
      bool bounds_ok = bounds.generic.satisfied && bounds.zhu.satisfied && bounds.adams.satisfied;
      run.record("span_bounds", bounds_ok);
      if (bounds.adams.applicable) {
        run.record("adams_extreme_coefficients_vanish", br.a_M == 0 && br.a_m == 0);
      }
      if (dc && info.k >= 1) {
        bool recursion_ok = true;
        for (int c : info.dealternators) {
          BracketReport b1 = bracket_report(smooth_crossing(d, c, Smoothing::A), opts.state_cap);
          BracketReport b2 = bracket_report(smooth_crossing(d, c, Smoothing::B), opts.state_cap);
          if (b1.M != br.M - 1 || b2.M != br.M + 1) recursion_ok = false;
          if (br.a_M != b1.a_M + b2.a_M || br.a_m != b1.a_m + b2.a_m) recursion_ok = false;
        }
        run.record("extreme_coefficient_recursion", recursion_ok);
      }
    }
  }
  return summary;
}

}  // namespace circlenum

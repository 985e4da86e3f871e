#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "circlenum/bracket.hpp"
#include "circlenum/dealternator.hpp"
#include "test_util.hpp"

using namespace circlenum;

namespace {

LaurentPolynomial from_terms(std::initializer_list<std::pair<int, long long>> terms) {
  LaurentPolynomial p;
  for (auto [e, c] : terms) p.add_term(e, c);
  return p;
}

}  // namespace

TEST_CASE("brackets of the fixtures") {
  CHECK(kauffman_bracket(parse_pd("loops=1")) == LaurentPolynomial::monomial(1, 0));
  CHECK(kauffman_bracket(parse_pd("loops=2")) == from_terms({{2, -1}, {-2, -1}}));

  // one-crossing curl: two states, A^1*delta + A^-1 = -A^3
  CHECK(kauffman_bracket(parse_pd(testutil::kCurl)) == LaurentPolynomial::monomial(-1, 3));

  CHECK(kauffman_bracket(parse_pd(testutil::kHopf)) == from_terms({{4, -1}, {-4, -1}}));
  CHECK(kauffman_bracket(parse_pd(testutil::kTrefoil)) == from_terms({{7, 1}, {3, -1}, {-5, -1}}));
  CHECK(kauffman_bracket(parse_pd(testutil::kSwitchedTrefoil)) == LaurentPolynomial::monomial(-1, -3));

  CHECK_THROWS_AS(kauffman_bracket(Diagram{}), error);
  CHECK_THROWS_AS(kauffman_bracket(parse_pd(testutil::kTrefoil), 2), cap_exceeded_error);
}

TEST_CASE("state sum agrees with plain skein recursion") {
  testutil::Rng rng;
  for (int trial = 0; trial < 12; ++trial) {
    Diagram d = testutil::random_diagram(rng, 3, 2);
    if (d.size() > 8) continue;
    CHECK(kauffman_bracket(d) == testutil::bracket_by_skein(d));
  }
  CHECK(kauffman_bracket(parse_pd(testutil::kFigureEight)) ==
        testutil::bracket_by_skein(parse_pd(testutil::kFigureEight)));
  CHECK(kauffman_bracket(parse_pd(testutil::kBorromean)) ==
        testutil::bracket_by_skein(parse_pd(testutil::kBorromean)));
}

TEST_CASE("parallel evaluation matches sequential") {
  Diagram d = parse_pd(testutil::kBorromean);
  LaurentPolynomial seq = kauffman_bracket(d, kDefaultStateCap, 1);
  LaurentPolynomial par = kauffman_bracket(d, kDefaultStateCap, 4);
  CHECK(seq == par);

  testutil::Rng rng;
  for (int trial = 0; trial < 5; ++trial) {
    Diagram r = testutil::random_diagram(rng);
    CHECK(kauffman_bracket(r, kDefaultStateCap, 1) == kauffman_bracket(r, kDefaultStateCap, 3));
  }
}

TEST_CASE("skein relation at every crossing") {
  for (const char* pd : {testutil::kCurl, testutil::kTrefoil, testutil::kHopf, testutil::kFigureEight,
                         testutil::kSwitchedTrefoil}) {
    Diagram d = parse_pd(pd);
    for (int c = 0; c < d.size(); ++c) CHECK(skein_check(d, c));
  }
}

TEST_CASE("mirror negates exponents") {
  for (const char* pd : {testutil::kCurl, testutil::kTrefoil, testutil::kFigureEight,
                         testutil::kSwitchedTrefoil}) {
    Diagram d = parse_pd(pd);
    CHECK(kauffman_bracket(mirror(d)) == kauffman_bracket(d).with_negated_exponents());
  }
}

TEST_CASE("bracket report of the trefoil") {
  BracketReport r = bracket_report(parse_pd(testutil::kTrefoil));
  CHECK(r.span == 12);
  CHECK(r.M == 7);   // n + 2|sA| - 2 = 3 + 6 - 2
  CHECK(r.m == -5);  // -n - 2|sB| + 2 = -3 - 4 + 2
  CHECK(r.a_M == 1);
  CHECK(r.a_m == -1);
  CHECK(r.A_adequate);
  CHECK(r.B_adequate);
}

TEST_CASE("degree support lies in [m, M] with step 4") {
  testutil::Rng rng;
  for (int trial = 0; trial < 15; ++trial) {
    Diagram d = testutil::random_diagram(rng, 3, 2);
    BracketReport r = bracket_report(d);
    for (auto [e, c] : r.bracket.terms()) {
      CHECK(c != 0);
      CHECK(e <= r.M);
      CHECK(e >= r.m);
      CHECK((r.M - e) % 4 == 0);
    }
    CHECK(r.span <= r.M - r.m);
  }
}

TEST_CASE("adequacy") {
  auto [ta, tb] = adequacy(parse_pd(testutil::kTrefoil));
  CHECK(ta);
  CHECK(tb);

  auto [ca, cb] = adequacy(parse_pd(testutil::kCurl));
  CHECK(ca != cb);  // exactly one side degenerates

  // adequate diagrams pin the extreme coefficients
  for (const char* pd : {testutil::kTrefoil, testutil::kHopf, testutil::kFigureEight, testutil::kBorromean}) {
    Diagram d = parse_pd(pd);
    BracketReport r = bracket_report(d);
    auto [sa, sb] = extreme_counts(d);
    REQUIRE(r.A_adequate);
    REQUIRE(r.B_adequate);
    CHECK(r.a_M == (sa % 2 == 1 ? 1 : -1));
    CHECK(r.a_m == (sb % 2 == 1 ? 1 : -1));
    CHECK(r.span == r.M - r.m);  // reduced alternating: the bound is met
  }
}

TEST_CASE("bounds_report") {
  // trefoil: generic bound met exactly
  {
    Diagram d = parse_pd(testutil::kTrefoil);
    BracketReport br = bracket_report(d);
    auto [sa, sb] = extreme_counts(d);
    BoundsReport bounds = bounds_report(d.size(), 0, sa, sb, true, true, br.span);
    CHECK(bounds.generic.value == 12);
    CHECK(bounds.generic.satisfied);
    CHECK(bounds.zhu.value == 12);
    CHECK(bounds.zhu.applicable);
    CHECK(bounds.zhu.satisfied);
    CHECK_FALSE(bounds.adams.applicable);  // k = 0
  }
  // switched trefoil: dealternator connected, not reduced
  {
    Diagram d = parse_pd(testutil::kSwitchedTrefoil);
    DealternatorInfo info = dealternator_info(d);
    BracketReport br = bracket_report(d);
    auto [sa, sb] = extreme_counts(d);
    bool dc = is_dealternator_connected(d, info);
    bool dr = is_dealternator_reduced(d, info);
    CHECK(dc);
    CHECK_FALSE(dr);
    BoundsReport bounds = bounds_report(d.size(), info.k, sa, sb, dc, dr, br.span);
    CHECK(bounds.generic.value == 8);  // 2*3 + 2*3 - 4
    CHECK(bounds.zhu.value == 8);      // 4(n-k) = 4*2
    CHECK(bounds.zhu.applicable);
    CHECK(bounds.zhu.satisfied);  // span 0
    CHECK_FALSE(bounds.adams.applicable);
  }
}

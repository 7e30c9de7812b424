#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "tanglegraph/diagram.hpp"
#include "tanglegraph/error.hpp"
#include "tanglegraph/invariants.hpp"
#include "tanglegraph/moves.hpp"
#include "tanglegraph/tangle.hpp"

#include <algorithm>
#include <map>

using tg::Closure;
using tg::PDCode;
using tg::Slope;
using tg::TangleExpr;

namespace {

PDCode numerator_of(Slope s) { return tg::to_pd(TangleExpr::closed(tg::rational_tangle(s), Closure::Numerator)); }

void check_edge_occurrence(const PDCode& pd) {
  std::map<int, int> seen;
  for (const auto& x : pd.crossings)
    for (int e : x) ++seen[e];
  for (const auto& [edge, count] : seen) REQUIRE(count == 2);
  if (!seen.empty()) {
    CHECK(seen.begin()->first == 1);
    CHECK(seen.rbegin()->first == static_cast<int>(seen.size()));
  }
}

}  // namespace

TEST_CASE("to_pd examples") {
  PDCode a = tg::to_pd(tg::fill(TangleExpr::zero(), Slope::infinity(), Closure::Numerator));
  CHECK(a.crossings.empty());
  CHECK(tg::components(a) == 1);
  PDCode b = tg::to_pd(tg::fill(TangleExpr::zero(), Slope::integer(0), Closure::Numerator));
  CHECK(b.crossings.empty());
  CHECK(tg::components(b) == 2);
  PDCode c = tg::to_pd(tg::fill(tg::rational_tangle(Slope::integer(3)), Slope::integer(0), Closure::Numerator));
  CHECK(c.crossings.size() == 3);
  CHECK(tg::components(c) == 1);
  CHECK(tg::validate_pd(c).empty());
}

TEST_CASE("to_pd errors") {
  CHECK(oracle::thrown([&] { tg::to_pd(TangleExpr::zero()); }) == tg::ErrorCode::NotClosed);
  auto open = TangleExpr::closed(TangleExpr::htwist(TangleExpr::zero(), tg::IntExpr::var("n")), Closure::Numerator);
  CHECK(oracle::thrown([&] { tg::to_pd(open); }) == tg::ErrorCode::UnboundParam);
}

TEST_CASE("crossing count is the sum of twist counts") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> P(-40, 40), Q(1, 40);
  for (int i = 0; i < 300; ++i) {
    int p = P(rng), q = Q(rng);
    if (oracle::gcd(p, q) != 1) continue;
    Slope s = Slope::reduce(p, q);
    TangleExpr t = TangleExpr::hsum(tg::rational_tangle(s), TangleExpr::rotate(tg::rational_tangle(s)));
    TangleExpr closed = TangleExpr::closed(t, i % 2 ? Closure::Numerator : Closure::Denominator);
    PDCode pd = tg::to_pd(closed);
    REQUIRE(static_cast<int>(pd.crossings.size()) == closed.crossing_count());
    check_edge_occurrence(pd);
    REQUIRE(tg::validate_pd(pd).empty());
  }
}

TEST_CASE("two-bridge component law") {
  for (int p = 2; p <= 20; ++p)
    for (int q = 1; q < p; ++q) {
      if (oracle::gcd(p, q) != 1) continue;
      PDCode pd = numerator_of(Slope::reduce(p, q));
      REQUIRE(tg::components(pd) == (p % 2 ? 1 : 2));
    }
}

TEST_CASE("components examples") {
  CHECK(tg::components(tg::to_pd(TangleExpr::closed(TangleExpr::infinity(), Closure::Numerator))) == 1);
  CHECK(tg::components(tg::to_pd(TangleExpr::closed(TangleExpr::zero(), Closure::Numerator))) == 2);
  CHECK(tg::components(numerator_of(Slope::integer(3))) == 1);
  CHECK(tg::components(PDCode{{}, 3}) == 3);
}

TEST_CASE("PD text round trip") {
  PDCode pd = numerator_of(Slope::reduce(7, 3));
  std::string text = tg::format_pd(pd);
  CHECK(text.back() == '\n');
  CHECK(text.rfind("X[", 0) == 0);
  CHECK(tg::parse_pd(text) == pd);
  CHECK(tg::parse_pd("PD[" + text + "]") == pd);
  CHECK(tg::parse_pd("").crossings.empty());
  CHECK(tg::components(tg::parse_pd("")) == 1);
}

TEST_CASE("PD parse errors") {
  CHECK_THROWS_AS(tg::parse_pd("X[1,2,3]\n"), tg::ParseError);
  CHECK_THROWS_AS(tg::parse_pd("Y[1,2,3,4]\n"), tg::ParseError);
  CHECK(oracle::thrown([&] { tg::parse_pd("X[1,2,3,4]\n"); }) == tg::ErrorCode::InvalidDiagram);
  CHECK_FALSE(tg::validate_pd(PDCode{{{1, 2, 3, 4}}, 0}).empty());
}

TEST_CASE("diagram round trip through PD") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    tg::Diagram g = tg::random_diagram(14, rng);
    PDCode pd = g.to_pd();
    tg::Diagram h = tg::Diagram::from_pd(pd);
    h.check();
    REQUIRE(h.components() == g.components());
    REQUIRE(tg::Diagram::from_pd(h.to_pd()).to_pd() == h.to_pd());
    if (g.components() == 1) {
      REQUIRE(h.to_pd() == pd);
      REQUIRE(h.writhe() == g.writhe());
    }
  }
}

TEST_CASE("dt_code examples") {
  CHECK(tg::dt_code(tg::to_pd(TangleExpr::closed(TangleExpr::infinity(), Closure::Numerator))).entries.empty());
  tg::DTCode tre = tg::dt_code(numerator_of(Slope::integer(3)));
  REQUIRE(tre.entries.size() == 3);
  std::vector<int> abs_vals;
  for (int e : tre.entries) abs_vals.push_back(std::abs(e));
  std::sort(abs_vals.begin(), abs_vals.end());
  CHECK(abs_vals == std::vector<int>{2, 4, 6});
  CHECK(tg::dt_code(numerator_of(Slope::reduce(5, 2))).entries.size() == 4);
  CHECK(oracle::thrown([&] { tg::dt_code(numerator_of(Slope::integer(2))); }) == tg::ErrorCode::MultiComponent);
}

TEST_CASE("DT text format") {
  tg::DTCode dt{{4, -6, 2}};
  CHECK(tg::format_dt(dt) == "4,-6,2\n");
  CHECK(tg::parse_dt("4,-6,2\n") == dt);
  CHECK(tg::format_dt(tg::DTCode{}) == "\n");
  CHECK_THROWS_AS(tg::parse_dt("4,x"), tg::ParseError);
  CHECK(oracle::thrown([&] { tg::gauss_from_dt(tg::DTCode{{2, 2}}); }) == tg::ErrorCode::InvalidDiagram);
}

TEST_CASE("DT export preserves the determinant") {
  std::mt19937_64 rng(5);
  int knots = 0;
  for (int i = 0; i < 400 && knots < 120; ++i) {
    tg::Diagram g = tg::random_diagram(16, rng);
    if (g.components() != 1) continue;
    ++knots;
    PDCode pd = g.to_pd();
    tg::DTCode dt = tg::dt_code(pd);
    REQUIRE(static_cast<int>(dt.entries.size()) == g.size());
    std::vector<int> abs_vals;
    for (int e : dt.entries) {
      REQUIRE(e % 2 == 0);
      abs_vals.push_back(std::abs(e));
    }
    std::sort(abs_vals.begin(), abs_vals.end());
    for (std::size_t k = 0; k < abs_vals.size(); ++k) REQUIRE(abs_vals[k] == 2 * static_cast<int>(k) + 2);
    tg::DTCode back = tg::parse_dt(tg::format_dt(dt));
    REQUIRE(back == dt);
    auto col = tg::coloring_determinant(tg::gauss_from_dt(back));
    if (col) REQUIRE(*col == tg::goeritz_determinant(pd));
  }
  CHECK(knots >= 50);
}

TEST_CASE("mirror flips every crossing sign") {
  TangleExpr t = TangleExpr::closed(tg::rational_tangle(Slope::reduce(7, 2)), Closure::Numerator);
  tg::Diagram a = tg::build_diagram(t);
  tg::Diagram b = tg::build_diagram(t, true);
  CHECK(a.writhe() == -b.writhe());
  CHECK(a.size() == b.size());
}

// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include "tanglegraph/cover.hpp"
#include "tanglegraph/diagram.hpp"
#include "tanglegraph/frac.hpp"
#include "tanglegraph/invariants.hpp"
#include "tanglegraph/moves.hpp"
#include "tanglegraph/tangle.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

using namespace tg;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_ms;  // 0 means no time limit
  std::function<Outcome()> body;
};

std::vector<long long> signed_values(std::initializer_list<long long> mags) {
  std::vector<long long> v;
  for (long long m : mags) {
    v.push_back(-m);
    v.push_back(m);
  }
  return v;
}

Slope S(long long p, long long q) { return Slope::reduce(p, q); }

bool excluded(long long x, long long y) { return (x == 2 && y == 1) || (x == -2 && y == -1); }

bool has_trivial_fiber(const GraphManifold& gm) {
  for (const auto& piece : gm.pieces)
    for (const auto& a : piece.orders())
      if (a <= 1) return true;
  return false;
}

Outcome b_structure() {
  int valid = 0, good = 0;
  for (long long l : signed_values({2, 3}))
    for (long long m : signed_values({2, 3}))
      for (long long n : signed_values({3, 4, 5}))
        for (long long p : signed_values({2, 3}))
          for (long long q : signed_values({1, 2, 3})) {
            BParams bp{l, m, n, p, q};
            if (!validate_b(bp).ok()) continue;
            ++valid;
            GraphManifold g = build_b_graph(bp);
            JsjReport r = validate_jsj(g);
            good += g.pieces.size() == 6 && g.jsj_tori == 5 && r.pass && r.tori == 5;
          }
  return {valid > 0 && good == valid, std::to_string(good) + "/" + std::to_string(valid) + " tuples give 6 pieces, 5 tori, JSJ pass"};
}

Outcome q_structure() {
  int valid = 0, good = 0;
  for (long long a : signed_values({2, 3}))
    for (long long b : signed_values({1, 2, 3}))
      for (long long c : signed_values({2, 3}))
        for (long long d : signed_values({3, 4, 5}))
          for (long long e : signed_values({2, 3}))
            for (long long f : signed_values({1, 2, 3})) {
              QParams qp{a, b, c, d, e, f};
              if (!validate_q(qp).ok()) continue;
              ++valid;
              GraphManifold g = build_q_graph(qp);
              JsjReport r = validate_jsj(g);
              good += g.pieces.size() == 5 && g.jsj_tori == 4 && r.pass && r.tori == 4;
            }
  return {valid > 0 && good == valid, std::to_string(good) + "/" + std::to_string(valid) + " tuples give 5 pieces, 4 tori, JSJ pass"};
}

Outcome worked_instance() {
  const long long l = 2, m = 2, p = 3, q = 2;
  GraphManifold g = build_b_graph({l, m, 3, p, q});
  std::vector<Slope> first{S(2 * p * q - 2 + q, p * q - 1), S(l, m * l - 1)};
  std::vector<Slope> last{S(l, 1 - m * l), S(2 * p - 1, p)};
  bool ok = g.pieces.front().base == Base::Disk && g.pieces.front().fractions == first &&
            g.pieces.back().base == Base::Disk && g.pieces.back().fractions == last;
  auto show = [](const std::vector<Slope>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ", ") + x.str();
    return s;
  };
  return {ok, "first (D2; " + show(g.pieces.front().fractions) + "), last (D2; " + show(g.pieces.back().fractions) + ")"};
}

Outcome boundary_duality() {
  int total = 0, good = 0;
  for (long long l : signed_values({2, 3}))
    for (long long m : signed_values({2, 3}))
      for (long long n : signed_values({3, 4, 5}))
        for (long long s : {-1, 1}) {
          GraphManifold g = build_b_graph({l, m, n, 2 * s, s});
          ++total;
          good += has_trivial_fiber(g) && !validate_jsj(g).pass;
        }
  for (long long a : signed_values({2, 3}))
    for (long long b : signed_values({1, 2, 3}))
      for (long long c : signed_values({2, 3}))
        for (long long d : signed_values({3, 4, 5}))
          for (long long e : signed_values({2, 3}))
            for (long long f : signed_values({1, 2, 3})) {
              if (!excluded(a, b) && !excluded(e, f)) continue;
              GraphManifold g = build_q_graph({a, b, c, d, e, f});
              ++total;
              good += has_trivial_fiber(g) && !validate_jsj(g).pass;
            }
  return {total > 0 && good == total, std::to_string(good) + "/" + std::to_string(total) + " excluded tuples carry an order-1 fiber and fail JSJ"};
}

Outcome det_h1() {
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<int> count(1, 4), alpha(2, 7);
  int good = 0;
  const int total = 40;
  for (int i = 0; i < total; ++i) {
    std::vector<Slope> fr;
    for (int k = count(rng); k > 0; --k) {
      int a = alpha(rng);
      std::uniform_int_distribution<int> beta(-2 * a, 2 * a);
      int b = 0;
      while (b == 0 || std::gcd(a, b) != 1) b = beta(rng);
      fr.push_back(S(b, a));
    }
    ChainSpec spec{{fr}};
    Integer det = goeritz_determinant(to_pd(chain_link(spec)));
    Integer h1 = h1_order(GraphManifold{{dbc_montesinos(fr)}, 0});
    good += det == h1;
  }
  return {good == total, std::to_string(good) + "/" + std::to_string(total) + " Montesinos specs with det = |H1|"};
}

Outcome two_bridge() {
  int total = 0, good = 0;
  for (int p = 2; p <= 30; ++p)
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      ++total;
      good += goeritz_determinant(to_pd(TangleExpr::closed(rational_tangle(S(p, q)), Closure::Numerator))) == p;
    }
  return {good == total, std::to_string(good) + "/" + std::to_string(total) + " two-bridge closures with det = p"};
}

Outcome cf_round_trip() {
  int total = 0, good = 0;
  for (int p = -200; p <= 200; ++p)
    for (int q = -200; q <= 200; ++q) {
      if (q == 0 || std::gcd(p, q) != 1) continue;
      Slope s = S(p, q);
      ++total;
      good += cf_eval(cf_expand(s)) == s;
    }
  return {good == total, std::to_string(good) + "/" + std::to_string(total) + " coprime pairs round trip"};
}

Outcome bracket_invariance() {
  std::mt19937_64 rng(8);
  const LaurentPoly plus = LaurentPoly::monomial(3, -1), minus = LaurentPoly::monomial(-3, -1);
  int diagrams = 0, checks = 0, good = 0, r3 = 0, largest = 0;
  while (diagrams < 100) {
    Diagram g = random_diagram(8, rng);
    for (int tries = 0; tries < 50 && r3_sites(g).empty(); ++tries) {
      g = random_diagram(8, rng);
      if (auto h = random_move(g, MoveKind::R2Add, rng); h && h->size() <= 10) g = *h;
    }
    ++diagrams;
    LaurentPoly b = kauffman_bracket(g);
    for (MoveKind kind : {MoveKind::R1Add, MoveKind::R2Add, MoveKind::R3}) {
      auto h = random_move(g, kind, rng);
      if (!h) continue;
      ++checks;
      r3 += kind == MoveKind::R3;
      largest = std::max(largest, h->size());
      LaurentPoly bh = kauffman_bracket(*h);
      bool ok = kind == MoveKind::R1Add ? (bh == b * plus || bh == b * minus) : bh == b;
      good += ok;
    }
  }
  return {good == checks && largest <= 12,
          std::to_string(good) + "/" + std::to_string(checks) + " moves on " + std::to_string(diagrams) +
              " diagrams (" + std::to_string(r3) + " R3, at most " + std::to_string(largest) + " crossings)"};
}

Outcome unknot_certification() {
  std::mt19937_64 rng(9);
  int good = 0, largest = 0;
  const int total = 50;
  for (int i = 0; i < total; ++i) {
    Diagram g = random_unknot(6 + i % 10, rng);
    largest = std::max(largest, g.size());
    good += certify_unknot(g.to_pd()).verdict == Verdict::CertifiedUnknot;
  }
  return {good == total, std::to_string(good) + "/" + std::to_string(total) + " expansions certified (up to " + std::to_string(largest) + " crossings)"};
}

Outcome degenerate() {
  int total = 0, good = 0;
  std::map<int, int> after;
  int partial = 0;
  for (long long a : signed_values({2, 3}))
    for (long long b : signed_values({1, 2}))
      for (long long c : signed_values({2, 3})) {
        if (excluded(a, b)) continue;
        ++total;
        GraphManifold g = build_q_graph({a, b, c, -2, -1, 1});
        Reduction r = reduce_graph(g);
        good += r.merges >= 1 && r.gm.jsj_tori < 4;
        ++after[r.gm.jsj_tori];
        partial += !r.fully_reduced;
      }
  std::string shape;
  for (auto [tori, n] : after) shape += (shape.empty() ? "" : ", ") + std::to_string(n) + " reach " + std::to_string(tori) + " tori";
  return {good == total, std::to_string(good) + "/" + std::to_string(total) + " tuples merge (" + shape + "; " +
                             std::to_string(partial) + " not fully reduced)"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "B-family structure sweep", 1000, b_structure},
      {2, "Q-family structure sweep", 1000, q_structure},
      {3, "B(2,2,3,3,2) end pieces", 0, worked_instance},
      {4, "exclusions are the JSJ guard", 0, boundary_duality},
      {5, "Montesinos det = |H1|", 5000, det_h1},
      {6, "two-bridge determinant", 5000, two_bridge},
      {7, "continued-fraction round trip", 1000, cf_round_trip},
      {8, "bracket under Reidemeister moves", 30000, bracket_invariance},
      {9, "unknot certification", 10000, unknot_certification},
      {10, "degenerate family reduction", 0, degenerate},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    bool in_time = c.limit_ms == 0 || ms < c.limit_ms;
    bool pass = o.ok && in_time;
    failed += !pass;
    std::string limit = c.limit_ms == 0 ? "" : " (limit " + std::to_string(static_cast<int>(c.limit_ms)) + " ms)";
    std::printf("[%s] %2d %s: %s; %.1f ms%s\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), ms, limit.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

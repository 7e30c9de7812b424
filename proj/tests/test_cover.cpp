#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "tanglegraph/cover.hpp"
#include "tanglegraph/diagram.hpp"
#include "tanglegraph/invariants.hpp"
#include "tanglegraph/tangle.hpp"

using tg::Base;
using tg::GraphManifold;
using tg::SeifertPiece;
using tg::Slope;

namespace {

Slope S(long long p, long long q) { return Slope::reduce(p, q); }

tg::Integer det_of(const tg::ChainSpec& spec) {
  return tg::goeritz_determinant(tg::to_pd(tg::chain_link(spec)));
}

tg::ChainSpec random_chain(std::mt19937_64& rng, int max_pieces, int max_alpha) {
  std::uniform_int_distribution<int> P(1, max_pieces), F(1, 3), F2(2, 3);
  tg::ChainSpec spec;
  int n = P(rng);
  for (int i = 0; i < n; ++i) {
    std::vector<Slope> fibers;
    int k = (n > 1 && (i == 0 || i == n - 1)) ? F2(rng) : F(rng);
    for (int j = 0; j < k; ++j) fibers.push_back(oracle::random_fiber(rng, max_alpha));
    spec.pieces.push_back(fibers);
  }
  return spec;
}

}  // namespace

TEST_CASE("dbc_rational") {
  CHECK(tg::dbc_rational(S(0, 1)).meridian == S(0, 1));
  CHECK(tg::dbc_rational(Slope::infinity()).meridian == Slope::infinity());
  CHECK(tg::dbc_rational(S(5, 2)).meridian == S(5, 2));
}

TEST_CASE("dbc_montesinos") {
  SeifertPiece a = tg::dbc_montesinos({S(1, 2), S(1, 2)});
  CHECK(a.base == Base::Sphere);
  CHECK(a.fibers == std::vector<Slope>{S(1, 2), S(1, 2)});
  CHECK(a.euler_twist == 0);
  CHECK(tg::h1_order(GraphManifold{{a}, 0}) == 4);

  SeifertPiece b = tg::dbc_montesinos({S(3, 2)});
  CHECK(b.fibers == std::vector<Slope>{S(1, 2)});
  CHECK(b.euler_twist == 1);

  std::vector<Slope> fr{S(1, 2), S(2, 3), S(1, 7)};
  SeifertPiece c = tg::dbc_montesinos(fr);
  CHECK(c.fibers.size() == 3);
  CHECK(tg::h1_order(GraphManifold{{c}, 0}) == det_of(tg::ChainSpec{{fr}}));
  CHECK(tg::h1_order(GraphManifold{{c}, 0}) == 1 * 3 * 7 + 2 * 2 * 7 + 1 * 2 * 3);
}

TEST_CASE("single fiber sphere piece is the three-sphere") {
  for (long long p = 2; p <= 12; ++p) {
    SeifertPiece s = tg::dbc_montesinos({S(1, p)});
    CHECK(tg::h1_order(GraphManifold{{s}, 0}) == 1);
    CHECK(det_of(tg::ChainSpec{{{S(1, p)}}}) == 1);
  }
}

TEST_CASE("build_b_graph") {
  GraphManifold g = tg::build_b_graph({2, 2, 3, 3, 2});
  REQUIRE(g.pieces.size() == 6);
  CHECK(g.jsj_tori == 5);
  CHECK(g.pieces[0].base == Base::Disk);
  CHECK(g.pieces[0].fractions == std::vector<Slope>{S(12, 5), S(2, 3)});
  const Slope mid[] = {S(1, 2), S(1, 4), S(-1, 4), S(1, 2)};
  for (int i = 0; i < 4; ++i) {
    CHECK(g.pieces[i + 1].base == Base::Annulus);
    CHECK(g.pieces[i + 1].fractions == std::vector<Slope>{mid[i]});
  }
  CHECK(g.pieces[5].base == Base::Disk);
  CHECK(g.pieces[5].fractions == std::vector<Slope>{S(-2, 3), S(5, 3)});
  CHECK(g.pieces[2].fibers == std::vector<Slope>{S(1, 4)});
  CHECK(g.pieces[3].fibers == std::vector<Slope>{S(3, 4)});
  CHECK(g.pieces[3].euler_twist == -1);
  CHECK(oracle::thrown([] { tg::build_b_graph({2, 2, -1, 3, 2}); }) == tg::ErrorCode::InvalidParams);
}

TEST_CASE("build_q_graph") {
  GraphManifold g = tg::build_q_graph({2, 2, 2, 3, 3, 2});
  REQUIRE(g.pieces.size() == 5);
  CHECK(g.jsj_tori == 4);
  CHECK(g.pieces[0].fractions == std::vector<Slope>{S(2, 3), S(2, 5)});
  CHECK(g.pieces[1].fractions == std::vector<Slope>{S(1, 2)});
  CHECK(g.pieces[2].fractions == std::vector<Slope>{S(1, 2)});
  CHECK(g.pieces[3].fractions == std::vector<Slope>{S(-2, 5)});
  CHECK(g.pieces[4].fractions == std::vector<Slope>{S(2, 3), S(2, 3)});
}

TEST_CASE("validate_jsj") {
  auto b = tg::validate_jsj(tg::build_b_graph({2, 2, 3, 3, 2}));
  CHECK(b.pass);
  CHECK(b.tori == 5);
  auto q = tg::validate_jsj(tg::build_q_graph({2, 2, 2, 3, 3, 2}));
  CHECK(q.pass);
  CHECK(q.tori == 4);

  GraphManifold hand{{SeifertPiece::make(Base::Disk, {S(1, 2), S(1, 3)}),
                      SeifertPiece::make(Base::Annulus, {S(2, 1)}),
                      SeifertPiece::make(Base::Disk, {S(1, 2), S(1, 5)})},
                     2};
  auto r = tg::validate_jsj(hand);
  CHECK_FALSE(r.pass);
  CHECK(r.pieces[0].pass);
  CHECK_FALSE(r.pieces[1].pass);
  CHECK(r.pieces[1].orders == std::vector<tg::Integer>{1});
  CHECK(r.pieces[2].pass);
}

TEST_CASE("parameter sweeps give JSJ chains") {
  int valid = 0;
  for (int sl : {-1, 1}) for (int sm : {-1, 1}) for (int sn : {-1, 1}) for (int sp : {-1, 1}) for (int sq : {-1, 1})
    for (long long l : {2, 3}) for (long long m : {2, 3}) for (long long n : {3, 4, 5}) for (long long p : {2, 3})
      for (long long q : {1, 2, 3}) {
        tg::BParams bp{sl * l, sm * m, sn * n, sp * p, sq * q};
        if (!tg::validate_b(bp).ok()) continue;
        ++valid;
        GraphManifold g = tg::build_b_graph(bp);
        REQUIRE(g.pieces.size() == 6);
        REQUIRE(g.jsj_tori == 5);
        REQUIRE(tg::validate_jsj(g).pass);
        auto red = tg::reduce_graph(g);
        REQUIRE(red.fully_reduced);
        REQUIRE(red.merges == 0);
      }
  CHECK(valid == 2112);
}

TEST_CASE("boundary tuples fail JSJ validation") {
  CHECK_FALSE(tg::validate_b({2, 2, 3, 2, 1}).ok());
  CHECK_FALSE(tg::validate_jsj(tg::build_b_graph({2, 2, 3, 2, 1})).pass);
  CHECK_FALSE(tg::validate_jsj(tg::build_b_graph({2, 2, 3, -2, -1})).pass);
  CHECK_FALSE(tg::validate_jsj(tg::build_q_graph({2, 2, 2, 3, 2, 1})).pass);
  CHECK_FALSE(tg::validate_jsj(tg::build_q_graph({2, 1, 2, 3, 3, 2})).pass);
}

TEST_CASE("reduce_graph") {
  auto same = tg::reduce_graph(tg::build_b_graph({3, -2, 4, -3, 2}));
  CHECK(same.fully_reduced);
  CHECK(same.gm.jsj_tori == 5);

  GraphManifold q = tg::build_q_graph({2, 2, 2, 3, -1, 1});
  CHECK(q.pieces[4].fibers.size() == 1);
  auto red = tg::reduce_graph(q);
  CHECK(red.merges == 1);
  CHECK(red.gm.pieces.size() == 4);
  CHECK(red.gm.jsj_tori == 3);
  CHECK(tg::h1_order(red.gm) == tg::h1_order(q));

  GraphManifold two{{SeifertPiece::make(Base::Disk, {S(1, 2), S(1, 3)}),
                     SeifertPiece::make(Base::Disk, {S(2, 5), S(-1, 3)})},
                    1};
  auto r2 = tg::reduce_graph(two);
  CHECK(r2.fully_reduced);
  CHECK(r2.merges == 0);
  CHECK(r2.gm.jsj_tori == 1);
}

TEST_CASE("reduce_graph stops instead of guessing") {
  // Filling a solid torus along the fiber leaves gluing data undetermined.
  GraphManifold g{{SeifertPiece::make(Base::Disk, {S(3, 1)}, -3),
                   SeifertPiece::make(Base::Disk, {S(1, 3), S(1, 5)})},
                  1};
  auto r = tg::reduce_graph(g);
  CHECK_FALSE(r.fully_reduced);
  GraphManifold trivial{{SeifertPiece::make(Base::Disk, {S(1, 2), S(1, 3)}),
                         SeifertPiece::make(Base::Annulus, {S(3, 1)}),
                         SeifertPiece::make(Base::Disk, {S(1, 2), S(1, 5)})},
                        2};
  CHECK_FALSE(tg::reduce_graph(trivial).fully_reduced);
}

TEST_CASE("h1_order errors") {
  GraphManifold open{{SeifertPiece::make(Base::Annulus, {S(1, 2)})}, 0};
  CHECK(oracle::thrown([&] { tg::h1_order(open); }) == tg::ErrorCode::NotClosed);
  CHECK(oracle::thrown([] { SeifertPiece::make(Base::Disk, {Slope::infinity()}); }) == tg::ErrorCode::InvalidParams);
}

TEST_CASE("h1_order matches the presentation oracle") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    tg::ChainSpec spec = random_chain(rng, 5, 9);
    REQUIRE(tg::h1_order(tg::chain_dbc(spec)) == oracle::chain_h1(spec.pieces));
  }
  CHECK(tg::h1_order(tg::build_b_graph({2, 2, 3, 3, 2})) == 24480);
}

TEST_CASE("folding integer parts leaves h1 unchanged") {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<int> K(-3, 3);
  for (int i = 0; i < 200; ++i) {
    tg::ChainSpec spec = random_chain(rng, 4, 7);
    GraphManifold raw = tg::chain_dbc(spec);
    GraphManifold shifted = raw;
    for (auto& piece : shifted.pieces) {
      std::vector<Slope> fr = piece.fractions;
      long long k = K(rng);
      fr[0] = Slope::reduce(fr[0].num() + k * fr[0].den(), fr[0].den());
      SeifertPiece moved = SeifertPiece::make(piece.base, fr, -k);
      REQUIRE(moved.total() == piece.total());
      piece = moved;
    }
    REQUIRE(tg::h1_order(shifted) == tg::h1_order(raw));
  }
}

TEST_CASE("chain_link examples") {
  CHECK(det_of(tg::ChainSpec{{{S(1, 2)}}}) == 1);
  tg::PDCode hopf = tg::to_pd(tg::chain_link(tg::ChainSpec{{{S(2, 1)}}}));
  CHECK(tg::components(hopf) == 2);
  CHECK(hopf.crossings.size() == 2);
  CHECK(tg::goeritz_determinant(hopf) == 2);
  std::vector<Slope> fr{S(1, 2), S(1, 3), S(1, 7)};
  CHECK(det_of(tg::ChainSpec{{fr}}) == tg::h1_order(GraphManifold{{tg::dbc_montesinos(fr)}, 0}));
  CHECK(det_of(tg::ChainSpec{{fr}}) == 41);
  CHECK(oracle::thrown([] { tg::chain_link(tg::ChainSpec{}); }) == tg::ErrorCode::EmptySpec);
}

TEST_CASE("determinant equals H1 order") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 40; ++i) {
    std::vector<Slope> fr;
    int k = 1 + static_cast<int>(rng() % 4);
    for (int j = 0; j < k; ++j) fr.push_back(oracle::random_fiber(rng, 7));
    tg::ChainSpec spec{{fr}};
    REQUIRE(det_of(spec) == tg::h1_order(tg::chain_dbc(spec)));
  }
  for (int i = 0; i < 150; ++i) {
    tg::ChainSpec spec = random_chain(rng, 4, 5);
    REQUIRE(det_of(spec) == tg::h1_order(tg::chain_dbc(spec)));
  }
}

TEST_CASE("chain_spec inverts chain_dbc") {
  GraphManifold b = tg::build_b_graph({2, 2, 3, 3, 2});
  tg::ChainSpec spec = tg::chain_spec(b);
  CHECK(spec.pieces.size() == 6);
  CHECK(tg::h1_order(tg::chain_dbc(spec)) == tg::h1_order(b));
  CHECK(det_of(spec) == 24480);
}

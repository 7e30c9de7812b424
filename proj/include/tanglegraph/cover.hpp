#pragma once

#include "tanglegraph/frac.hpp"
#include "tanglegraph/tangle.hpp"

#include <string>
#include <vector>

namespace tg {

enum class Base { Disk, Annulus, Sphere };

const char* to_string(Base b);

/// One Seifert fibered piece. `fractions` keeps the values as supplied;
/// `fibers` holds their normalized exceptional parts 0 < beta < alpha and
/// `euler_twist` the integer parts plus any explicit twist.
struct SeifertPiece {
  Base base = Base::Sphere;
  std::vector<Slope> fractions;
  std::vector<Slope> fibers;
  Integer euler_twist = 0;

  /// Throws InvalidParams for an infinite fraction.
  static SeifertPiece make(Base base, std::vector<Slope> fractions, Integer twist = 0);

  /// alpha of every supplied fraction.
  std::vector<Integer> orders() const;
  /// euler_twist + sum of fibers, as one fraction.
  Slope total() const;
};

/// Linear chain of pieces. At every torus the fiber of one side is glued to
/// the boundary section of the other and vice versa.
struct GraphManifold {
  std::vector<SeifertPiece> pieces;
  int jsj_tori = 0;
};

/// Double branched cover of R(s): a solid torus with meridian s.
struct SolidTorus {
  Slope meridian;
};

SolidTorus dbc_rational(const Slope& s);

/// Sphere-based piece covering the Montesinos link N(R(f1) + ... + R(fk)).
SeifertPiece dbc_montesinos(const std::vector<Slope>& fractions);

/// Chain of the B family: six pieces, five tori. Throws InvalidParams if a
/// formula has a vanishing denominator; parameter constraints are not
/// checked here.
GraphManifold build_b_graph(const BParams& params);
/// Chain of the Q family: five pieces, four tori.
GraphManifold build_q_graph(const QParams& params);

struct PieceCheck {
  std::vector<Integer> orders;
  int exceptional = 0;
  bool pass = true;
  std::string note;
};

struct JsjReport {
  bool pass = true;
  int tori = 0;
  std::vector<PieceCheck> pieces;
};

JsjReport validate_jsj(const GraphManifold& gm);

struct Reduction {
  GraphManifold gm;
  bool fully_reduced = true;
  int merges = 0;
  std::vector<std::string> notes;
};

/// Absorbs solid-torus end pieces into their neighbors. Stops with
/// fully_reduced = false instead of inventing gluing data.
Reduction reduce_graph(const GraphManifold& gm);

/// |H1| of the closed chain, 0 when infinite. Throws NotClosed unless the
/// chain is a single sphere piece or runs disk, annulus..., disk.
Integer h1_order(const GraphManifold& gm);

/// Rational subtangle slopes for each piece of a linear Conway-sphere chain.
struct ChainSpec {
  std::vector<std::vector<Slope>> pieces;
};

/// N(M_n) where M_1 = R(f_11) + ... and M_i = rot(M_{i-1}) + R(f_i1) + ....
/// Throws EmptySpec for an empty chain.
TangleExpr chain_link(const ChainSpec& spec);
/// The graph manifold covering chain_link(spec).
GraphManifold chain_dbc(const ChainSpec& spec);
/// The chain whose cover is gm (inverse of chain_dbc up to normalization).
ChainSpec chain_spec(const GraphManifold& gm);

enum class Family { B, Q };

/// Bookkeeping for the covering knot: the lift of R(0) is a solid torus
/// whose core is the covering knot, and filling with 1/0 is a surgery on it
/// along a slope that is carried symbolically.
struct CoveringKnotSpec {
  Family family = Family::B;
  std::vector<long long> params;
  Slope trivializing = Slope::integer(0);
  Slope exceptional = Slope::infinity();
  std::string surgery_slope = "r";
};

}  // namespace tg

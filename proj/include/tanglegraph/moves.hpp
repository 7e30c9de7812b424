#pragma once

#include "tanglegraph/diagram.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace tg {

/// Boundary cycles of the complementary regions. A face is stored as the
/// darts it leaves crossings through; from a leaving dart d the walk arrives
/// at partner(d) = (c, m) and leaves again at (c, m+1).
struct Faces {
  std::vector<std::vector<int>> cycles;
  std::vector<int> face_of;  // leaving dart -> face index
};

Faces trace_faces(const Diagram& g);

/// True when the crossings form one connected 4-valent graph and there are
/// no free loops (or the diagram is a single crossingless circle).
bool is_connected(const Diagram& g);

/// Euler-characteristic check per connected piece: V - E + F = 2.
bool is_planar(const Diagram& g);

/// A triangle face; k[i] is the slot the face leaves crossing c[i] through.
struct R3Site {
  std::array<int, 3> c;
  std::array<int, 3> k;
};

std::vector<int> r1_sites(const Diagram& g);
std::vector<std::array<int, 2>> r2_sites(const Diagram& g);
std::vector<R3Site> r3_sites(const Diagram& g);

/// Deletes crossings and splices every strand straight through them.
/// Closed strands lying entirely inside the removed set become free loops.
Diagram remove_crossings(const Diagram& g, const std::vector<int>& removed);

Diagram apply_r3(const Diagram& g, const R3Site& site);

/// Adds a kink on the arc leaving dart `out` (an outgoing dart). Variants
/// 0..3 select the side and sign. On a crossingless diagram the kink is put
/// on a free loop and only the sign (variant parity) matters.
Diagram add_r1(const Diagram& g, int out, int variant);

/// Pushes the arc leaving `a1` over or under the arc leaving `a2`. Both are
/// leaving darts of the same face and must be distinct.
Diagram add_r2(const Diagram& g, int a1, int a2, bool first_over);

struct SimplifyOptions {
  int r3_depth = 3;
};

/// Greedy R1/R2 reduction; when no reduction applies, a bounded search over
/// R3 sequences looks for a diagram where one does.
Diagram simplify(const Diagram& g, const SimplifyOptions& opts = {});
PDCode simplify(const PDCode& pd, const SimplifyOptions& opts = {});

enum class MoveKind { R1Add, R2Add, R3 };

/// Applies one random move of the given kind. Returns nullopt when the
/// diagram has no site for it.
std::optional<Diagram> random_move(const Diagram& g, MoveKind kind, std::mt19937_64& rng);

/// Random diagram of the unknot with `crossings` crossings built by R1, R2
/// and R3 moves from the trivial circle.
Diagram random_unknot(int crossings, std::mt19937_64& rng);

/// Random connected diagram from a closed algebraic tangle with at most
/// `max_crossings` crossings.
Diagram random_diagram(int max_crossings, std::mt19937_64& rng);

}  // namespace tg

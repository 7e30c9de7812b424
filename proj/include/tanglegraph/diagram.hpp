#pragma once

#include "tanglegraph/tangle.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace tg {

/// Planar-diagram code. Each crossing lists its four edge labels
/// counterclockwise starting from the incoming under-strand. Components
/// without crossings are counted in free_loops.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;
  int free_loops = 0;

  friend bool operator==(const PDCode&, const PDCode&) = default;
};

/// Signed Dowker-Thistlethwaite code of a knot: entry i pairs odd label 2i+1
/// with |entry|; an entry is negative when the even visit passes over.
struct DTCode {
  std::vector<int> entries;

  friend bool operator==(const DTCode&, const DTCode&) = default;
};

/// Crossing visits per component, +c for over and -c for under (c 1-based).
struct GaussCode {
  std::vector<std::vector<int>> components;
};

/// Oriented planar 4-valent map. Dart 4*c+s is slot s of crossing c; slots are
/// counterclockwise, slot 0 is the incoming under-strand, slot 2 the outgoing
/// one, and the over-strand enters at over_in (1 or 3).
class Diagram {
 public:
  struct Crossing {
    std::array<int, 4> link{};  // partner dart across each arc
    int over_in = 1;
  };

  std::vector<Crossing> crossings;
  int free_loops = 0;

  static int dart(int crossing, int slot) { return 4 * crossing + slot; }
  static int crossing_of(int d) { return d / 4; }
  static int slot_of(int d) { return d % 4; }

  int size() const { return static_cast<int>(crossings.size()); }
  int partner(int d) const { return crossings[crossing_of(d)].link[slot_of(d)]; }
  void connect(int a, int b) {
    crossings[crossing_of(a)].link[slot_of(a)] = b;
    crossings[crossing_of(b)].link[slot_of(b)] = a;
  }

  bool is_over(int d) const { return slot_of(d) % 2 == 1; }
  bool is_incoming(int d) const {
    int s = slot_of(d);
    return s == 0 || s == crossings[crossing_of(d)].over_in;
  }
  /// Dart where the strand entering at d leaves the crossing.
  static int through(int d) { return dart(crossing_of(d), (slot_of(d) + 2) % 4); }

  /// +1 for a right-handed crossing.
  int sign(int c) const { return crossings[c].over_in == 3 ? 1 : -1; }
  int writhe() const;
  int components() const;

  /// Throws InvalidDiagram when links are not an orientation-consistent
  /// involution.
  void check() const;

  PDCode to_pd() const;
  static Diagram from_pd(const PDCode& pd);
};

/// Builds the diagram of a ground, closed expression. Throws NotClosed for an
/// open tangle and UnboundParam when slots remain. With mirror set, every
/// crossing is switched.
Diagram build_diagram(const TangleExpr& closed, bool mirror = false);

PDCode to_pd(const TangleExpr& closed, bool mirror = false);
int components(const PDCode& pd);

/// Structural check of a PD code: every label exactly twice, orientations
/// consistent. Returns the list of problems.
std::vector<std::string> validate_pd(const PDCode& pd);

/// One `X[a,b,c,d]` per line, newline-terminated.
std::string format_pd(const PDCode& pd);
/// Accepts the format_pd output, optionally wrapped in PD[...]; an empty
/// input is the crossingless unknot. Throws ParseError / InvalidDiagram.
PDCode parse_pd(std::string_view text);

/// Throws MultiComponent for links.
DTCode dt_code(const PDCode& pd);
/// Comma-separated, newline-terminated.
std::string format_dt(const DTCode& dt);
DTCode parse_dt(std::string_view text);

GaussCode gauss_code(const PDCode& pd);
/// Throws InvalidDiagram for malformed codes.
GaussCode gauss_from_dt(const DTCode& dt);

}  // namespace tg

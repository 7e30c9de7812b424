#include "tanglegraph/diagram.hpp"

#include "tanglegraph/error.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>

namespace tg {

// ---------------------------------------------------------------------------
// Diagram basics

int Diagram::writhe() const {
  int w = 0;
  for (int c = 0; c < size(); ++c) w += sign(c);
  return w;
}

int Diagram::components() const {
  std::vector<bool> seen(4 * crossings.size(), false);
  int count = free_loops;
  for (int d0 = 0; d0 < 4 * size(); ++d0) {
    if (seen[d0] || is_incoming(d0)) continue;
    ++count;
    int d = d0;
    do {
      seen[d] = true;
      int in = partner(d);
      seen[in] = true;
      d = through(in);
    } while (d != d0);
  }
  return count;
}

void Diagram::check() const {
  const int n = 4 * size();
  for (int c = 0; c < size(); ++c) {
    int o = crossings[c].over_in;
    if (o != 1 && o != 3) throw Error(ErrorCode::InvalidDiagram, "crossing " + std::to_string(c) + " has bad over_in");
  }
  for (int d = 0; d < n; ++d) {
    int e = partner(d);
    if (e < 0 || e >= n || partner(e) != d) {
      throw Error(ErrorCode::InvalidDiagram, "dart " + std::to_string(d) + " is not paired");
    }
    if (e == d) throw Error(ErrorCode::InvalidDiagram, "dart " + std::to_string(d) + " linked to itself");
    if (is_incoming(d) == is_incoming(e)) {
      throw Error(ErrorCode::InvalidDiagram, "arc at dart " + std::to_string(d) + " has inconsistent orientation");
    }
  }
}

PDCode Diagram::to_pd() const {
  PDCode pd;
  pd.free_loops = free_loops;
  const int n = 4 * size();
  std::vector<int> label(n, 0);
  int next = 1;
  for (int c = 0; c < size(); ++c) {
    for (int start : {dart(c, 2), dart(c, (crossings[c].over_in + 2) % 4)}) {
      if (label[start]) continue;
      int d = start;
      do {
        int in = partner(d);
        label[d] = label[in] = next++;
        d = through(in);
      } while (d != start);
    }
  }
  pd.crossings.resize(crossings.size());
  for (int c = 0; c < size(); ++c) {
    for (int s = 0; s < 4; ++s) pd.crossings[c][s] = label[dart(c, s)];
  }
  return pd;
}

Diagram Diagram::from_pd(const PDCode& pd) {
  Diagram g;
  g.free_loops = pd.free_loops;
  const int nc = static_cast<int>(pd.crossings.size());
  g.crossings.resize(nc);
  std::map<int, std::vector<int>> where;
  for (int c = 0; c < nc; ++c) {
    for (int s = 0; s < 4; ++s) where[pd.crossings[c][s]].push_back(dart(c, s));
  }
  for (const auto& [lab, ds] : where) {
    if (ds.size() != 2) {
      throw Error(ErrorCode::InvalidDiagram,
                  "edge " + std::to_string(lab) + " occurs " + std::to_string(ds.size()) + " times");
    }
    if (ds[0] == ds[1]) throw Error(ErrorCode::InvalidDiagram, "edge repeated within one slot");
    g.crossings[crossing_of(ds[0])].link[slot_of(ds[0])] = ds[1];
    g.crossings[crossing_of(ds[1])].link[slot_of(ds[1])] = ds[0];
  }
  // Orientation: +1 incoming, -1 outgoing, 0 unknown.
  std::vector<int> dir(4 * nc, 0);
  std::vector<int> stack;
  auto set = [&](int d, int v) {
    if (dir[d] == v) return;
    if (dir[d] != 0) throw Error(ErrorCode::InvalidDiagram, "inconsistent orientation at dart " + std::to_string(d));
    dir[d] = v;
    stack.push_back(d);
  };
  auto propagate = [&]() {
    while (!stack.empty()) {
      int d = stack.back();
      stack.pop_back();
      set(g.partner(d), -dir[d]);
      set(through(d), -dir[d]);
    }
  };
  for (int c = 0; c < nc; ++c) {
    set(dart(c, 0), +1);
    set(dart(c, 2), -1);
  }
  propagate();
  for (int c = 0; c < nc; ++c) {
    if (dir[dart(c, 1)] != 0) continue;
    // Free choice: the smaller label leaves, matching how to_pd numbers
    // a component from its first crossing.
    const auto& x = pd.crossings[c];
    set(dart(c, 1), x[1] > x[3] ? +1 : -1);
    propagate();
  }
  for (int c = 0; c < nc; ++c) g.crossings[c].over_in = dir[dart(c, 1)] > 0 ? 1 : 3;
  g.check();
  return g;
}

// ---------------------------------------------------------------------------
// Construction from tangle expressions

namespace {

/// Unoriented planar graph assembled while walking the expression tree.
/// Crossing slots are nodes of degree one; joint nodes have degree two.
class Builder {
 public:
  struct Ports {
    int nw, ne, sw, se;
  };

  explicit Builder(bool mirror) : root_mirror_(mirror) {}

  Ports build(const TangleExpr& t, bool mirror) {
    using K = TangleExpr::Kind;
    switch (t.kind()) {
      case K::Zero: {
        Ports p{joint(), joint(), joint(), joint()};
        segment(p.nw, p.ne);
        segment(p.sw, p.se);
        return p;
      }
      case K::Infinity: {
        Ports p{joint(), joint(), joint(), joint()};
        segment(p.nw, p.sw);
        segment(p.ne, p.se);
        return p;
      }
      case K::HTwist:
      case K::VTwist: {
        Ports p = build(t.child(), mirror);
        const Integer n = t.count().eval({});
        Integer reps = n < 0 ? Integer(-n) : n;
        for (Integer i = 0; i < reps; ++i) {
          Ports x = crossing((n > 0) != mirror);
          p = t.kind() == K::HTwist ? hsum(p, x) : vsum(p, x);
        }
        return p;
      }
      case K::HSum: {
        Ports a = build(t.child(0), mirror);
        Ports b = build(t.child(1), mirror);
        return hsum(a, b);
      }
      case K::VSum: {
        Ports a = build(t.child(0), mirror);
        Ports b = build(t.child(1), mirror);
        return vsum(a, b);
      }
      case K::Rotate90: {
        Ports p = build(t.child(), mirror);
        return Ports{p.ne, p.se, p.nw, p.sw};
      }
      case K::Mirror:
        return build(t.child(), !mirror);
      case K::RationalLeaf:
        return build(rational_tangle(Slope::reduce(t.count().eval({}), t.denominator().eval({}))), mirror);
      case K::ParamSlot:
        throw Error(ErrorCode::UnboundParam, "slot '" + t.slot_name() + "' is not instantiated");
      case K::Closed:
        throw Error(ErrorCode::NotClosed, "nested closure");
    }
    throw Error(ErrorCode::InvalidDiagram, "unknown tangle node");
  }

  Diagram finish(const TangleExpr& closed) {
    if (!closed.is_closed()) throw Error(ErrorCode::NotClosed, "expression is an open tangle: " + closed.str());
    Ports p = build(closed.child(), root_mirror_);
    if (closed.closure() == Closure::Numerator) {
      segment(p.nw, p.ne);
      segment(p.sw, p.se);
    } else {
      segment(p.nw, p.sw);
      segment(p.ne, p.se);
    }
    return orient();
  }

 private:
  int joint() {
    node_dart_.push_back(-1);
    adj_.emplace_back();
    return static_cast<int>(node_dart_.size()) - 1;
  }

  void segment(int a, int b) {
    int id = static_cast<int>(seg_.size());
    seg_.push_back({a, b});
    adj_[a].push_back(id);
    adj_[b].push_back(id);
  }

  /// Positive crossing has its over-strand from SW to NE. Slots are NE, NW,
  /// SW, SE (counterclockwise).
  Ports crossing(bool positive) {
    int c = static_cast<int>(over_even_.size());
    over_even_.push_back(positive);
    int first = static_cast<int>(node_dart_.size());
    for (int s = 0; s < 4; ++s) {
      node_dart_.push_back(4 * c + s);
      adj_.emplace_back();
    }
    return Ports{first + 1, first + 0, first + 2, first + 3};
  }

  Ports hsum(const Ports& a, const Ports& b) {
    segment(a.ne, b.nw);
    segment(a.se, b.sw);
    return Ports{a.nw, b.ne, a.sw, b.se};
  }

  Ports vsum(const Ports& a, const Ports& b) {
    segment(a.sw, b.nw);
    segment(a.se, b.ne);
    return Ports{a.nw, a.ne, b.sw, b.se};
  }

  Diagram orient() {
    const int nc = static_cast<int>(over_even_.size());
    const int nodes = static_cast<int>(node_dart_.size());
    std::vector<int> raw_link(4 * nc, -1);
    std::vector<bool> visited(nodes, false);
    for (int u = 0; u < nodes; ++u) {
      if (node_dart_[u] < 0) {
        if (adj_[u].size() != 2) throw Error(ErrorCode::InvalidDiagram, "dangling tangle endpoint");
        continue;
      }
      if (adj_[u].size() != 1) throw Error(ErrorCode::InvalidDiagram, "crossing slot with bad degree");
      if (raw_link[node_dart_[u]] >= 0) continue;
      int prev_seg = adj_[u][0];
      int v = other(prev_seg, u);
      while (node_dart_[v] < 0) {
        visited[v] = true;
        int s = adj_[v][0] == prev_seg ? adj_[v][1] : adj_[v][0];
        prev_seg = s;
        v = other(s, v);
      }
      raw_link[node_dart_[u]] = node_dart_[v];
      raw_link[node_dart_[v]] = node_dart_[u];
    }
    int loops = 0;
    for (int u = 0; u < nodes; ++u) {
      if (node_dart_[u] >= 0 || visited[u]) continue;
      ++loops;
      int prev_seg = adj_[u][0];
      int v = u;
      do {
        visited[v] = true;
        v = other(prev_seg, v);
        prev_seg = adj_[v][0] == prev_seg ? adj_[v][1] : adj_[v][0];
      } while (v != u);
    }

    // Orient each strand; +1 incoming.
    std::vector<int> dir(4 * nc, 0);
    for (int d0 = 0; d0 < 4 * nc; ++d0) {
      if (dir[d0] != 0) continue;
      int d = d0;
      do {
        dir[d] = -1;
        int in = raw_link[d];
        dir[in] = +1;
        d = 4 * (in / 4) + (in % 4 + 2) % 4;
      } while (d != d0);
    }

    Diagram g;
    g.free_loops = loops;
    g.crossings.resize(nc);
    std::vector<int> shift(nc);
    for (int c = 0; c < nc; ++c) {
      const int under_a = over_even_[c] ? 1 : 0;
      const int under_in = dir[4 * c + under_a] > 0 ? under_a : under_a + 2;
      const int over_a = over_even_[c] ? 0 : 1;
      const int over_in = dir[4 * c + over_a] > 0 ? over_a : over_a + 2;
      shift[c] = under_in;
      g.crossings[c].over_in = (over_in - under_in + 4) % 4;
    }
    auto remap = [&](int raw) { return 4 * (raw / 4) + (raw % 4 - shift[raw / 4] + 4) % 4; };
    for (int d = 0; d < 4 * nc; ++d) {
      int nd = remap(d);
      g.crossings[nd / 4].link[nd % 4] = remap(raw_link[d]);
    }
    g.check();
    return g;
  }

  int other(int seg, int node) const { return seg_[seg].first == node ? seg_[seg].second : seg_[seg].first; }

  bool root_mirror_;
  std::vector<int> node_dart_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> seg_;
  std::vector<bool> over_even_;
};

}  // namespace

Diagram build_diagram(const TangleExpr& closed, bool mirror) {
  if (!closed.is_ground()) throw Error(ErrorCode::UnboundParam, "expression has uninstantiated slots");
  Builder b(mirror);
  return b.finish(closed);
}

PDCode to_pd(const TangleExpr& closed, bool mirror) { return build_diagram(closed, mirror).to_pd(); }

int components(const PDCode& pd) { return Diagram::from_pd(pd).components(); }

std::vector<std::string> validate_pd(const PDCode& pd) {
  std::vector<std::string> problems;
  try {
    Diagram::from_pd(pd);
  } catch (const Error& e) {
    problems.push_back(e.what());
  }
  return problems;
}

// ---------------------------------------------------------------------------
// Text formats

std::string format_pd(const PDCode& pd) {
  std::string out;
  for (const auto& x : pd.crossings) {
    out += "X[" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," + std::to_string(x[2]) + "," +
           std::to_string(x[3]) + "]\n";
  }
  return out;
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  void skip() {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) advance();
  }
  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  bool eat(char c) {
    if (pos < text.size() && text[pos] == c) {
      advance();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line, col, msg); }
  int integer() {
    while (pos < text.size() && text[pos] == ' ') advance();
    bool neg = eat('-');
    if (!neg) eat('+');
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) advance();
    if (start == pos) fail("expected integer");
    long v = std::strtol(std::string(text.substr(start, pos - start)).c_str(), nullptr, 10);
    return static_cast<int>(neg ? -v : v);
  }
};

}  // namespace

PDCode parse_pd(std::string_view text) {
  PDCode pd;
  Cursor cur{text};
  cur.skip();
  bool wrapped = false;
  if (text.substr(cur.pos, 3) == "PD[") {
    for (int i = 0; i < 3; ++i) cur.advance();
    wrapped = true;
  }
  while (true) {
    cur.skip();
    if (cur.pos >= text.size()) break;
    if (wrapped && cur.eat(']')) {
      wrapped = false;
      continue;
    }
    if (!cur.eat('X')) cur.fail("expected 'X['");
    if (!cur.eat('[')) cur.fail("expected '['");
    std::array<int, 4> x{};
    for (int i = 0; i < 4; ++i) {
      while (cur.pos < text.size() && text[cur.pos] == ' ') cur.advance();
      if (i > 0 && !cur.eat(',')) cur.fail("expected ','");
      x[i] = cur.integer();
    }
    while (cur.pos < text.size() && text[cur.pos] == ' ') cur.advance();
    if (!cur.eat(']')) cur.fail("expected ']'");
    pd.crossings.push_back(x);
  }
  if (wrapped) cur.fail("missing ']' closing PD[");
  if (pd.crossings.empty()) pd.free_loops = 1;
  Diagram::from_pd(pd);  // validates
  return pd;
}

std::string format_dt(const DTCode& dt) {
  std::string out;
  for (std::size_t i = 0; i < dt.entries.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(dt.entries[i]);
  }
  out += "\n";
  return out;
}

DTCode parse_dt(std::string_view text) {
  DTCode dt;
  Cursor cur{text};
  while (true) {
    cur.skip();
    if (cur.pos >= text.size()) break;
    dt.entries.push_back(cur.integer());
  }
  gauss_from_dt(dt);  // validates
  return dt;
}

// ---------------------------------------------------------------------------
// Traversal codes

GaussCode gauss_code(const PDCode& pd) {
  Diagram g = Diagram::from_pd(pd);
  GaussCode gc;
  std::vector<bool> seen(4 * g.size(), false);
  for (int d0 = 0; d0 < 4 * g.size(); ++d0) {
    if (seen[d0] || g.is_incoming(d0)) continue;
    std::vector<int> seq;
    int d = d0;
    do {
      seen[d] = true;
      int in = g.partner(d);
      seen[in] = true;
      int c = Diagram::crossing_of(in) + 1;
      seq.push_back(g.is_over(in) ? c : -c);
      d = Diagram::through(in);
    } while (d != d0);
    // Rotate so the sequence starts at the visit through d0's crossing.
    std::rotate(seq.begin(), seq.end() - 1, seq.end());
    gc.components.push_back(std::move(seq));
  }
  for (int i = 0; i < g.free_loops; ++i) gc.components.emplace_back();
  return gc;
}

DTCode dt_code(const PDCode& pd) {
  Diagram g = Diagram::from_pd(pd);
  if (g.components() != 1) {
    throw Error(ErrorCode::MultiComponent, "DT codes are defined for knots only");
  }
  DTCode dt;
  if (g.size() == 0) return dt;
  const int n = g.size();
  // Visits in traversal order starting just after crossing 0's under-strand.
  std::vector<std::pair<int, bool>> visits;  // crossing, passes over
  int d = Diagram::dart(0, 2);
  do {
    int in = g.partner(d);
    visits.emplace_back(Diagram::crossing_of(in), g.is_over(in));
    d = Diagram::through(in);
  } while (d != Diagram::dart(0, 2));
  auto first_over = std::find_if(visits.begin(), visits.end(), [](const auto& v) { return v.second; });
  std::rotate(visits.begin(), first_over, visits.end());

  std::vector<int> odd_label(n, 0), even_label(n, 0);
  std::vector<bool> even_over(n, false);
  for (int i = 0; i < 2 * n; ++i) {
    int label = i + 1;
    auto [c, over] = visits[i];
    if (label % 2 == 1) {
      if (odd_label[c]) throw Error(ErrorCode::InvalidDiagram, "diagram is not realizable as a DT code");
      odd_label[c] = label;
    } else {
      if (even_label[c]) throw Error(ErrorCode::InvalidDiagram, "diagram is not realizable as a DT code");
      even_label[c] = label;
      even_over[c] = over;
    }
  }
  dt.entries.assign(n, 0);
  for (int c = 0; c < n; ++c) {
    dt.entries[(odd_label[c] - 1) / 2] = even_over[c] ? -even_label[c] : even_label[c];
  }
  return dt;
}

GaussCode gauss_from_dt(const DTCode& dt) {
  const int n = static_cast<int>(dt.entries.size());
  GaussCode gc;
  gc.components.emplace_back(2 * n, 0);
  auto& seq = gc.components[0];
  std::vector<bool> used(2 * n + 1, false);
  for (int i = 0; i < n; ++i) {
    int e = dt.entries[i];
    int a = std::abs(e);
    if (a == 0 || a % 2 != 0 || a > 2 * n || used[a]) {
      throw Error(ErrorCode::InvalidDiagram, "DT entry " + std::to_string(e) + " is not a fresh even label");
    }
    used[a] = true;
    int odd = 2 * i + 1;
    bool even_over = e < 0;
    seq[odd - 1] = even_over ? -(i + 1) : (i + 1);
    seq[a - 1] = even_over ? (i + 1) : -(i + 1);
  }
  return gc;
}

}  // namespace tg

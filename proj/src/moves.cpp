#include "tanglegraph/moves.hpp"

#include "tanglegraph/error.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace tg {

namespace {

int slot_add(int s, int k) { return ((s + k) % 4 + 4) % 4; }

int next_leaving(const Diagram& g, int d) {
  int e = g.partner(d);
  return Diagram::dart(Diagram::crossing_of(e), slot_add(Diagram::slot_of(e), 1));
}

std::vector<int> crossing_pieces(const Diagram& g, int& count) {
  std::vector<int> piece(g.size(), -1);
  count = 0;
  for (int s = 0; s < g.size(); ++s) {
    if (piece[s] >= 0) continue;
    std::vector<int> stack{s};
    piece[s] = count;
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      for (int k = 0; k < 4; ++k) {
        int o = Diagram::crossing_of(g.crossings[c].link[k]);
        if (piece[o] < 0) {
          piece[o] = count;
          stack.push_back(o);
        }
      }
    }
    ++count;
  }
  return piece;
}

}  // namespace

Faces trace_faces(const Diagram& g) {
  Faces f;
  const int n = 4 * g.size();
  f.face_of.assign(n, -1);
  for (int d0 = 0; d0 < n; ++d0) {
    if (f.face_of[d0] >= 0) continue;
    const int id = static_cast<int>(f.cycles.size());
    f.cycles.emplace_back();
    int d = d0;
    do {
      f.face_of[d] = id;
      f.cycles.back().push_back(d);
      d = next_leaving(g, d);
    } while (d != d0);
  }
  return f;
}

bool is_connected(const Diagram& g) {
  if (g.size() == 0) return g.free_loops == 1;
  if (g.free_loops != 0) return false;
  int count = 0;
  crossing_pieces(g, count);
  return count == 1;
}

bool is_planar(const Diagram& g) {
  int count = 0;
  std::vector<int> piece = crossing_pieces(g, count);
  std::vector<int> vertices(count, 0), faces(count, 0);
  for (int c = 0; c < g.size(); ++c) ++vertices[piece[c]];
  for (const auto& cyc : trace_faces(g).cycles) ++faces[piece[Diagram::crossing_of(cyc[0])]];
  for (int i = 0; i < count; ++i) {
    if (faces[i] != vertices[i] + 2) return false;
  }
  return true;
}

std::vector<int> r1_sites(const Diagram& g) {
  std::vector<int> out;
  for (int c = 0; c < g.size(); ++c) {
    for (int k = 0; k < 4; ++k) {
      if (g.partner(Diagram::dart(c, k)) == Diagram::dart(c, slot_add(k, 1))) {
        out.push_back(c);
        break;
      }
    }
  }
  return out;
}

std::vector<std::array<int, 2>> r2_sites(const Diagram& g) {
  std::set<std::array<int, 2>> found;
  for (const auto& cyc : trace_faces(g).cycles) {
    if (cyc.size() != 2) continue;
    int c1 = Diagram::crossing_of(cyc[0]);
    int c2 = Diagram::crossing_of(cyc[1]);
    if (c1 == c2) continue;
    int k1 = Diagram::slot_of(cyc[0]);
    int m2 = Diagram::slot_of(g.partner(cyc[0]));
    if (k1 % 2 != m2 % 2) continue;
    found.insert({std::min(c1, c2), std::max(c1, c2)});
  }
  return {found.begin(), found.end()};
}

std::vector<R3Site> r3_sites(const Diagram& g) {
  std::vector<R3Site> out;
  for (const auto& cyc : trace_faces(g).cycles) {
    if (cyc.size() != 3) continue;
    R3Site s;
    std::array<int, 3> m{};
    for (int i = 0; i < 3; ++i) {
      s.c[i] = Diagram::crossing_of(cyc[i]);
      s.k[i] = Diagram::slot_of(cyc[i]);
      m[i] = slot_add(s.k[i], -1);
    }
    if (s.c[0] == s.c[1] || s.c[1] == s.c[2] || s.c[0] == s.c[2]) continue;
    bool sliding = false;
    for (int i = 0; i < 3; ++i) {
      if (s.k[i] % 2 == m[(i + 1) % 3] % 2) sliding = true;
    }
    if (!sliding) continue;
    bool clean = true;
    for (int i = 0; i < 3; ++i) {
      for (int slot : {slot_add(s.k[i], 2), slot_add(m[i], 2)}) {
        int x = Diagram::crossing_of(g.partner(Diagram::dart(s.c[i], slot)));
        if (x == s.c[0] || x == s.c[1] || x == s.c[2]) clean = false;
      }
    }
    if (clean) out.push_back(s);
  }
  return out;
}

Diagram remove_crossings(const Diagram& g, const std::vector<int>& removed) {
  std::vector<bool> gone(g.size(), false);
  for (int c : removed) gone[c] = true;
  std::vector<int> new_index(g.size(), -1);
  Diagram h;
  h.free_loops = g.free_loops;
  for (int c = 0; c < g.size(); ++c) {
    if (gone[c]) continue;
    new_index[c] = h.size();
    h.crossings.push_back(g.crossings[c]);
  }
  auto is_gone = [&](int d) { return gone[Diagram::crossing_of(d)]; };
  auto remap = [&](int d) { return Diagram::dart(new_index[Diagram::crossing_of(d)], Diagram::slot_of(d)); };
  std::vector<bool> seen(4 * g.size(), false);
  for (int x = 0; x < 4 * g.size(); ++x) {
    if (is_gone(x)) continue;
    int r = g.partner(x);
    if (!is_gone(r)) {
      h.crossings[new_index[Diagram::crossing_of(x)]].link[Diagram::slot_of(x)] = remap(r);
      continue;
    }
    while (is_gone(r)) {
      seen[r] = true;
      int y = Diagram::through(r);
      seen[y] = true;
      r = g.partner(y);
    }
    h.crossings[new_index[Diagram::crossing_of(x)]].link[Diagram::slot_of(x)] = remap(r);
  }
  for (int r0 = 0; r0 < 4 * g.size(); ++r0) {
    if (!is_gone(r0) || seen[r0]) continue;
    ++h.free_loops;
    int r = r0;
    do {
      seen[r] = true;
      int y = Diagram::through(r);
      seen[y] = true;
      r = g.partner(y);
    } while (r != r0);
  }
  return h;
}

Diagram apply_r3(const Diagram& g, const R3Site& s) {
  const auto [c1, c2, c3] = s.c;
  const auto [k1, k2, k3] = s.k;
  const int m1 = slot_add(k1, -1), m2 = slot_add(k2, -1), m3 = slot_add(k3, -1);
  auto D = [](int c, int k) { return Diagram::dart(c, slot_add(k, 0)); };
  auto P = [&](int c, int k) { return g.partner(Diagram::dart(c, slot_add(k, 0))); };
  const int x1a = P(c1, k1 + 2), x2b = P(c2, m2 + 2);
  const int x1b = P(c1, m1 + 2), x3a = P(c3, k3 + 2);
  const int x2a = P(c2, k2 + 2), x3b = P(c3, m3 + 2);
  Diagram h = g;
  h.connect(D(c1, k1), x2b);
  h.connect(D(c1, k1 + 2), D(c2, m2 + 2));
  h.connect(D(c2, m2), x1a);
  h.connect(D(c1, m1), x3a);
  h.connect(D(c1, m1 + 2), D(c3, k3 + 2));
  h.connect(D(c3, k3), x1b);
  h.connect(D(c2, k2), x3b);
  h.connect(D(c2, k2 + 2), D(c3, m3 + 2));
  h.connect(D(c3, m3), x2a);
  return h;
}

Diagram add_r1(const Diagram& g, int out, int variant) {
  Diagram h = g;
  const int c = h.size();
  h.crossings.emplace_back();
  auto n = [c](int s) { return Diagram::dart(c, s); };
  if (g.size() == 0) {
    if (g.free_loops < 1) throw Error(ErrorCode::InvalidDiagram, "no strand to kink");
    --h.free_loops;
    if (variant % 2 == 0) {
      h.connect(n(0), n(3));
      h.connect(n(2), n(1));
      h.crossings[c].over_in = 1;
    } else {
      h.connect(n(2), n(3));
      h.connect(n(1), n(0));
      h.crossings[c].over_in = 3;
    }
    return h;
  }
  if (g.is_incoming(out)) throw Error(ErrorCode::InvalidDiagram, "kink must start at an outgoing dart");
  const int b = g.partner(out);
  switch (variant & 3) {
    case 0:
      h.connect(out, n(0));
      h.connect(n(2), n(1));
      h.connect(n(3), b);
      h.crossings[c].over_in = 1;
      break;
    case 1:
      h.connect(out, n(0));
      h.connect(n(2), n(3));
      h.connect(n(1), b);
      h.crossings[c].over_in = 3;
      break;
    case 2:
      h.connect(out, n(1));
      h.connect(n(3), n(0));
      h.connect(n(2), b);
      h.crossings[c].over_in = 1;
      break;
    default:
      h.connect(out, n(3));
      h.connect(n(1), n(0));
      h.connect(n(2), b);
      h.crossings[c].over_in = 3;
      break;
  }
  return h;
}

Diagram add_r2(const Diagram& g, int a1, int a2, bool first_over) {
  const int b1 = g.partner(a1);
  const int b2 = g.partner(a2);
  if (a1 == a2 || a2 == b1) throw Error(ErrorCode::InvalidDiagram, "R2 needs two distinct arcs");
  enum { E = 0, N = 1, W = 2, S = 3 };
  const int x = g.size(), y = g.size() + 1;
  // Direction index at which each strand enters X and Y.
  const bool alpha_fwd = !g.is_incoming(a1);
  const bool beta_fwd = !g.is_incoming(a2);
  const int alpha_x = alpha_fwd ? N : S, alpha_y = alpha_fwd ? S : N;
  const int beta_in = beta_fwd ? W : E;
  auto frame = [&](int alpha_in) {
    int u = first_over ? beta_in : alpha_in;
    int o = first_over ? alpha_in : beta_in;
    return std::pair{u, slot_add(o, -u)};
  };
  const auto [ux, ox] = frame(alpha_x);
  const auto [uy, oy] = frame(alpha_y);
  auto X = [&](int dir) { return Diagram::dart(x, slot_add(dir, -ux)); };
  auto Y = [&](int dir) { return Diagram::dart(y, slot_add(dir, -uy)); };
  Diagram h = g;
  h.crossings.resize(g.size() + 2);
  h.crossings[x].over_in = ox;
  h.crossings[y].over_in = oy;
  h.connect(X(E), Y(W));
  h.connect(X(N), Y(N));
  h.connect(X(W), a2);
  h.connect(X(S), b1);
  h.connect(Y(E), b2);
  h.connect(Y(S), a1);
  return h;
}

namespace {

std::optional<Diagram> reduce_once(const Diagram& g) {
  auto r1 = r1_sites(g);
  if (!r1.empty()) return remove_crossings(g, {r1.front()});
  auto r2 = r2_sites(g);
  if (!r2.empty()) return remove_crossings(g, {r2.front()[0], r2.front()[1]});
  return std::nullopt;
}

std::optional<Diagram> r3_search(const Diagram& g, int depth) {
  if (depth == 0) return std::nullopt;
  for (const auto& site : r3_sites(g)) {
    Diagram h = apply_r3(g, site);
    if (auto reduced = reduce_once(h)) return reduced;
    if (auto deeper = r3_search(h, depth - 1)) return deeper;
  }
  return std::nullopt;
}

}  // namespace

Diagram simplify(const Diagram& g, const SimplifyOptions& opts) {
  Diagram cur = g;
  while (cur.size() > 0) {
    if (auto next = reduce_once(cur)) {
      cur = std::move(*next);
      continue;
    }
    std::optional<Diagram> found;
    for (int depth = 1; depth <= opts.r3_depth && !found; ++depth) found = r3_search(cur, depth);
    if (!found) break;
    cur = std::move(*found);
  }
  return cur;
}

PDCode simplify(const PDCode& pd, const SimplifyOptions& opts) {
  return simplify(Diagram::from_pd(pd), opts).to_pd();
}

std::optional<Diagram> random_move(const Diagram& g, MoveKind kind, std::mt19937_64& rng) {
  auto pick = [&rng](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  switch (kind) {
    case MoveKind::R1Add: {
      const int variant = static_cast<int>(pick(4));
      if (g.size() == 0) {
        if (g.free_loops == 0) return std::nullopt;
        return add_r1(g, 0, variant);
      }
      std::vector<int> outs;
      for (int d = 0; d < 4 * g.size(); ++d) {
        if (!g.is_incoming(d)) outs.push_back(d);
      }
      return add_r1(g, outs[pick(outs.size())], variant);
    }
    case MoveKind::R2Add: {
      if (g.size() == 0) return std::nullopt;
      Faces f = trace_faces(g);
      std::vector<const std::vector<int>*> usable;
      for (const auto& cyc : f.cycles) {
        if (cyc.size() >= 2) usable.push_back(&cyc);
      }
      if (usable.empty()) return std::nullopt;
      const auto& cyc = *usable[pick(usable.size())];
      std::size_t i = pick(cyc.size());
      std::size_t j = (i + 1 + pick(cyc.size() - 1)) % cyc.size();
      return add_r2(g, cyc[i], cyc[j], pick(2) == 0);
    }
    case MoveKind::R3: {
      auto sites = r3_sites(g);
      if (sites.empty()) return std::nullopt;
      return apply_r3(g, sites[pick(sites.size())]);
    }
  }
  return std::nullopt;
}

Diagram random_unknot(int crossings, std::mt19937_64& rng) {
  Diagram g;
  g.free_loops = 1;
  std::uniform_int_distribution<int> choice(0, 9);
  int guard = 0;
  while (g.size() < crossings && guard++ < 100 * (crossings + 1)) {
    const int room = crossings - g.size();
    const int r = choice(rng);
    MoveKind kind = r < 2 ? MoveKind::R1Add : r < 6 ? MoveKind::R2Add : MoveKind::R3;
    if (g.size() == 0 || (kind == MoveKind::R2Add && room < 2)) kind = MoveKind::R1Add;
    if (auto next = random_move(g, kind, rng)) g = std::move(*next);
  }
  for (int i = 0; i < crossings; ++i) {
    if (auto next = random_move(g, MoveKind::R3, rng)) g = std::move(*next);
  }
  return g;
}

Diagram random_diagram(int max_crossings, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> twist(-3, 3);
  std::uniform_int_distribution<int> coin(0, 3);
  std::function<TangleExpr(int)> grow = [&](int budget) -> TangleExpr {
    if (budget <= 3 || coin(rng) == 0) {
      int n = twist(rng);
      if (n == 0) n = 1;
      if (std::abs(n) > budget) n = n > 0 ? budget : -budget;
      return coin(rng) % 2 ? TangleExpr::htwist(TangleExpr::zero(), n) : TangleExpr::vtwist(TangleExpr::infinity(), n);
    }
    int left = std::uniform_int_distribution<int>(1, budget - 1)(rng);
    TangleExpr a = grow(left);
    TangleExpr b = grow(budget - left);
    switch (coin(rng)) {
      case 0: return TangleExpr::hsum(a, b);
      case 1: return TangleExpr::vsum(a, b);
      case 2: return TangleExpr::hsum(TangleExpr::rotate(a), b);
      default: return TangleExpr::vsum(a, TangleExpr::rotate(b));
    }
  };
  for (;;) {
    int budget = std::uniform_int_distribution<int>(1, std::max(1, max_crossings))(rng);
    TangleExpr t = grow(budget);
    Closure cl = coin(rng) % 2 ? Closure::Numerator : Closure::Denominator;
    Diagram g = build_diagram(TangleExpr::closed(t, cl));
    if (g.size() > 0 && is_connected(g)) return g;
  }
}

}  // namespace tg

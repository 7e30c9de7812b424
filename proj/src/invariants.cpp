#include "tanglegraph/invariants.hpp"

#include "tanglegraph/error.hpp"
#include "tanglegraph/linalg.hpp"
#include "tanglegraph/moves.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace tg {

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::monomial(int exponent, long long coef) {
  LaurentPoly p;
  p.add(exponent, coef);
  return p;
}

long long LaurentPoly::coef(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add(int exponent, long long coef) {
  if (coef == 0) return;
  long long& slot = terms_[exponent];
  slot += coef;
  if (slot == 0) terms_.erase(exponent);
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.add(-e, c);
  return p;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += ", ";
    out += std::to_string(e) + ":" + std::to_string(c);
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  LaurentPoly p;
  std::string s(text);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && (s[i] == ' ' || s[i] == ',' || s[i] == '\n' || s[i] == '\t')) ++i;
  };
  auto number = [&]() -> long long {
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start])))) {
      throw ParseError(1, static_cast<int>(start) + 1, "expected integer");
    }
    return std::stoll(s.substr(start, i - start));
  };
  skip();
  if (s.substr(i) == "0") return p;
  while (skip(), i < s.size()) {
    long long e = number();
    if (i >= s.size() || s[i] != ':') throw ParseError(1, static_cast<int>(i) + 1, "expected ':'");
    ++i;
    p.add(static_cast<int>(e), number());
  }
  return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add(e, c);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add(e, -c);
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [e1, c1] : a.terms_) {
    for (const auto& [e2, c2] : b.terms_) r.add(e1 + e2, c1 * c2);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Bracket state sum

namespace {

/// Union-find with undo, used to count state loops while walking the state
/// tree depth first.
class RollbackDsu {
 public:
  explicit RollbackDsu(int n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      history_.push_back(-1);
      return;
    }
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    ++merges_;
  }
  void undo() {
    int b = history_.back();
    history_.pop_back();
    if (b < 0) return;
    int a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
    --merges_;
  }
  int merges() const { return merges_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
  int merges_ = 0;
};

}  // namespace

LaurentPoly kauffman_bracket(const Diagram& g, int cap) {
  const int n = g.size();
  if (n > cap) {
    throw Error(ErrorCode::TooLarge,
                std::to_string(n) + " crossings exceeds the bracket cap of " + std::to_string(cap));
  }
  const LaurentPoly loop = LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(-2, -1);
  const int max_loops = 2 * n + g.free_loops + 1;
  std::vector<LaurentPoly> loop_pow(max_loops + 1);
  loop_pow[0] = LaurentPoly::constant(1);
  for (int i = 1; i <= max_loops; ++i) loop_pow[i] = loop_pow[i - 1] * loop;
  if (n == 0) return loop_pow[std::max(0, g.free_loops - 1)];

  std::vector<int> arc(4 * n, -1);
  int arcs = 0;
  for (int d = 0; d < 4 * n; ++d) {
    if (arc[d] < 0) arc[d] = arc[g.partner(d)] = arcs++;
  }
  // counts[a][l]: states with a A-smoothings and l loops.
  std::vector<std::vector<long long>> counts(n + 1, std::vector<long long>(arcs + 1, 0));
  RollbackDsu dsu(arcs);
  auto at = [&](int c, int s) { return arc[Diagram::dart(c, s)]; };
  auto walk = [&](auto&& self, int c, int a_count) -> void {
    if (c == n) {
      ++counts[a_count][arcs - dsu.merges()];
      return;
    }
    dsu.unite(at(c, 0), at(c, 1));
    dsu.unite(at(c, 2), at(c, 3));
    self(self, c + 1, a_count + 1);
    dsu.undo();
    dsu.undo();
    dsu.unite(at(c, 1), at(c, 2));
    dsu.unite(at(c, 3), at(c, 0));
    self(self, c + 1, a_count);
    dsu.undo();
    dsu.undo();
  };
  walk(walk, 0, 0);

  LaurentPoly result;
  for (int a = 0; a <= n; ++a) {
    for (int l = 1; l <= arcs; ++l) {
      if (counts[a][l] == 0) continue;
      LaurentPoly term = LaurentPoly::monomial(a - (n - a), counts[a][l]) * loop_pow[l - 1 + g.free_loops];
      result = result + term;
    }
  }
  return result;
}

LaurentPoly kauffman_bracket(const PDCode& pd, int cap) { return kauffman_bracket(Diagram::from_pd(pd), cap); }

LaurentPoly jones(const Diagram& g, int cap) {
  const int w = g.writhe();
  return LaurentPoly::monomial(-3 * w, w % 2 == 0 ? 1 : -1) * kauffman_bracket(g, cap);
}

LaurentPoly jones(const PDCode& pd, int cap) { return jones(Diagram::from_pd(pd), cap); }

Integer jones_determinant(const LaurentPoly& f) {
  if (f.is_zero()) return 0;
  const int r = f.terms().begin()->first;
  Integer sum = 0;
  for (const auto& [e, c] : f.terms()) {
    const int steps = (e - r) / 4;
    if ((e - r) % 4 != 0) {
      throw Error(ErrorCode::InvalidDiagram, "exponents are not congruent mod 4");
    }
    sum += steps % 2 == 0 ? Integer(c) : Integer(-c);
  }
  return sum < 0 ? Integer(-sum) : sum;
}

// ---------------------------------------------------------------------------
// Determinants

Integer goeritz_determinant(const Diagram& g) {
  if (g.size() == 0) return g.free_loops == 1 ? 1 : 0;
  if (!is_connected(g)) return 0;
  const Faces f = trace_faces(g);
  const int nf = static_cast<int>(f.cycles.size());
  std::vector<int> color(nf, -1);
  std::vector<int> queue{f.face_of[0]};
  color[f.face_of[0]] = 0;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (int d : f.cycles[queue[qi]]) {
      int other = f.face_of[g.partner(d)];
      if (color[other] < 0) {
        color[other] = 1 - color[queue[qi]];
        queue.push_back(other);
      } else if (color[other] == color[queue[qi]]) {
        throw Error(ErrorCode::InvalidDiagram, "diagram has no checkerboard coloring");
      }
    }
  }
  std::vector<int> white_index(nf, -1);
  int whites = 0;
  for (int i = 0; i < nf; ++i) {
    if (color[i] == 0) white_index[i] = whites++;
  }
  Matrix gm(whites, std::vector<Integer>(whites, 0));
  for (int c = 0; c < g.size(); ++c) {
    const int f0 = f.face_of[Diagram::dart(c, 0)];
    int eta, i, j;
    if (color[f0] == 0) {
      eta = 1;
      i = white_index[f0];
      j = white_index[f.face_of[Diagram::dart(c, 2)]];
    } else {
      eta = -1;
      i = white_index[f.face_of[Diagram::dart(c, 1)]];
      j = white_index[f.face_of[Diagram::dart(c, 3)]];
    }
    if (i == j) continue;
    gm[i][j] -= eta;
    gm[j][i] -= eta;
    gm[i][i] += eta;
    gm[j][j] += eta;
  }
  Matrix minor(whites - 1, std::vector<Integer>(whites - 1));
  for (int i = 1; i < whites; ++i) {
    for (int j = 1; j < whites; ++j) minor[i - 1][j - 1] = gm[i][j];
  }
  Integer det = bareiss_determinant(std::move(minor));
  return det < 0 ? Integer(-det) : det;
}

Integer goeritz_determinant(const PDCode& pd) { return goeritz_determinant(Diagram::from_pd(pd)); }

std::optional<Integer> coloring_determinant(const GaussCode& code) {
  // Over-arcs run between consecutive undercrossings along a component.
  int crossings = 0;
  for (const auto& comp : code.components) {
    for (int v : comp) crossings = std::max(crossings, std::abs(v));
  }
  if (crossings == 0) return code.components.size() == 1 ? std::optional<Integer>(1) : std::optional<Integer>(0);
  std::vector<int> over_arc(crossings + 1, -1), in_arc(crossings + 1, -1), out_arc(crossings + 1, -1);
  int arcs = 0;
  for (const auto& comp : code.components) {
    if (comp.empty()) return Integer(0);
    auto first_under = std::find_if(comp.begin(), comp.end(), [](int v) { return v < 0; });
    if (first_under == comp.end()) return std::nullopt;
    const std::size_t start = static_cast<std::size_t>(first_under - comp.begin());
    const std::size_t len = comp.size();
    const int base = arcs;
    for (std::size_t t = 1; t <= len; ++t) {
      int v = comp[(start + t) % len];
      if (v > 0) {
        over_arc[v] = arcs;
      } else {
        in_arc[-v] = arcs;
        out_arc[-v] = t == len ? base : arcs + 1;
        if (t != len) ++arcs;
      }
    }
    ++arcs;
  }
  if (arcs != crossings) return std::nullopt;
  Matrix m(crossings, std::vector<Integer>(arcs, 0));
  for (int c = 1; c <= crossings; ++c) {
    m[c - 1][over_arc[c]] += 2;
    m[c - 1][in_arc[c]] -= 1;
    m[c - 1][out_arc[c]] -= 1;
  }
  Matrix minor(crossings - 1, std::vector<Integer>(arcs - 1));
  for (int i = 1; i < crossings; ++i) {
    for (int j = 1; j < arcs; ++j) minor[i - 1][j - 1] = m[i][j];
  }
  Integer det = bareiss_determinant(std::move(minor));
  return det < 0 ? Integer(-det) : det;
}

// ---------------------------------------------------------------------------
// Unknot certification

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::CertifiedUnknot: return "certified_unknot";
    case Verdict::CertifiedKnotted: return "certified_knotted";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

UnknotVerdict certify_unknot(const PDCode& pd, const CertifyOptions& opts) {
  UnknotVerdict v;
  Diagram g = Diagram::from_pd(pd);
  const int comps = g.components();
  if (comps != 1) {
    v.verdict = Verdict::CertifiedKnotted;
    v.evidence = "diagram has " + std::to_string(comps) + " components";
    v.simplified_crossings = g.size();
    return v;
  }
  Diagram s = simplify(g, SimplifyOptions{opts.r3_depth});
  v.simplified_crossings = s.size();
  if (s.size() == 0) {
    v.verdict = Verdict::CertifiedUnknot;
    v.evidence = "reduced from " + std::to_string(g.size()) + " to 0 crossings by Reidemeister moves";
    return v;
  }
  Integer det = goeritz_determinant(s);
  if (det != 1) {
    v.verdict = Verdict::CertifiedKnotted;
    v.evidence = "determinant " + det.str();
    return v;
  }
  if (s.size() > opts.bracket_cap) {
    v.evidence = "stuck at " + std::to_string(s.size()) + " crossings; determinant 1; Jones skipped (cap " +
                 std::to_string(opts.bracket_cap) + ")";
    return v;
  }
  LaurentPoly f = jones(s, opts.bracket_cap);
  if (f != LaurentPoly::constant(1)) {
    v.verdict = Verdict::CertifiedKnotted;
    v.evidence = "Jones polynomial " + f.str();
    return v;
  }
  v.evidence = "stuck at " + std::to_string(s.size()) + " crossings; determinant 1 and trivial Jones polynomial";
  return v;
}

}  // namespace tg

#include "tanglegraph/cover.hpp"

#include "tanglegraph/error.hpp"
#include "tanglegraph/linalg.hpp"

namespace tg {

const char* to_string(Base b) {
  switch (b) {
    case Base::Disk: return "disk";
    case Base::Annulus: return "annulus";
    case Base::Sphere: return "sphere";
  }
  return "sphere";
}

SeifertPiece SeifertPiece::make(Base base, std::vector<Slope> fractions, Integer twist) {
  SeifertPiece p;
  p.base = base;
  p.euler_twist = std::move(twist);
  for (const auto& f : fractions) {
    if (f.is_infinite()) throw Error(ErrorCode::InvalidParams, "fiber fraction 1/0 is undefined");
    Integer k = f.floor();
    p.euler_twist += k;
    Slope rest = f - Slope::integer(k);
    if (!rest.is_zero()) p.fibers.push_back(rest);
  }
  p.fractions = std::move(fractions);
  return p;
}

std::vector<Integer> SeifertPiece::orders() const {
  std::vector<Integer> out;
  for (const auto& f : fractions) out.push_back(f.den());
  return out;
}

Slope SeifertPiece::total() const {
  Slope t = Slope::integer(euler_twist);
  for (const auto& f : fibers) t = t + f;
  return t;
}

SolidTorus dbc_rational(const Slope& s) { return SolidTorus{s}; }

SeifertPiece dbc_montesinos(const std::vector<Slope>& fractions) {
  return SeifertPiece::make(Base::Sphere, fractions);
}

namespace {

Slope frac(long long p, long long q) {
  if (q == 0) {
    throw Error(ErrorCode::InvalidParams,
                "fraction " + std::to_string(p) + "/0 is undefined for these parameters");
  }
  return Slope::reduce(p, q);
}

GraphManifold chain_of(std::vector<SeifertPiece> pieces) {
  GraphManifold gm;
  gm.jsj_tori = static_cast<int>(pieces.size()) - 1;
  gm.pieces = std::move(pieces);
  return gm;
}

Base end_base(std::size_t index, std::size_t count) {
  if (count == 1) return Base::Sphere;
  return index == 0 || index + 1 == count ? Base::Disk : Base::Annulus;
}

}  // namespace

GraphManifold build_b_graph(const BParams& b) {
  const long long l = b.l, m = b.m, n = b.n, p = b.p, q = b.q;
  return chain_of({
      SeifertPiece::make(Base::Disk, {frac(2 * p * q - 2 + q, p * q - 1), frac(l, m * l - 1)}),
      SeifertPiece::make(Base::Annulus, {frac(1, 2)}),
      SeifertPiece::make(Base::Annulus, {frac(1, n + 1)}),
      SeifertPiece::make(Base::Annulus, {frac(-1, n + 1)}),
      SeifertPiece::make(Base::Annulus, {frac(1, 2)}),
      SeifertPiece::make(Base::Disk, {frac(l, 1 - m * l), frac(2 * p - 1, p)}),
  });
}

GraphManifold build_q_graph(const QParams& x) {
  const long long a = x.a, b = x.b, c = x.c, d = x.d, e = x.e, f = x.f;
  return chain_of({
      SeifertPiece::make(Base::Disk, {frac(a, a * b - 1), frac(f, e * f - 1)}),
      SeifertPiece::make(Base::Annulus, {frac(1, c)}),
      SeifertPiece::make(Base::Annulus, {frac(1, d - 1)}),
      SeifertPiece::make(Base::Annulus, {frac(c, 1 - c * d)}),
      SeifertPiece::make(Base::Disk, {frac(a, a * b - 1), frac(e - 1, e)}),
  });
}

JsjReport validate_jsj(const GraphManifold& gm) {
  JsjReport r;
  r.tori = gm.jsj_tori;
  for (const auto& piece : gm.pieces) {
    PieceCheck pc;
    pc.orders = piece.orders();
    for (const auto& a : pc.orders) {
      if (a >= 2) ++pc.exceptional;
    }
    switch (piece.base) {
      case Base::Disk:
        if (pc.exceptional < 2) {
          pc.pass = false;
          pc.note = "disk piece needs two exceptional fibers";
        } else if (pc.exceptional == 2 && piece.fibers.size() == 2 && piece.fibers[0] == Slope::reduce(1, 2) &&
                   piece.fibers[1] == Slope::reduce(1, 2)) {
          pc.note = "twisted I-bundle over the Klein bottle";
        }
        break;
      case Base::Annulus:
        if (pc.exceptional < 1) {
          pc.pass = false;
          pc.note = "annulus piece needs an exceptional fiber";
        }
        break;
      case Base::Sphere:
        break;
    }
    r.pass = r.pass && pc.pass;
    r.pieces.push_back(std::move(pc));
  }
  if (r.tori != static_cast<int>(gm.pieces.size()) - 1) r.pass = false;
  return r;
}

namespace {

/// Merges the solid torus at `end` (0 = first, 1 = last) into its neighbor.
/// Returns false when the merge fills along the fiber.
bool absorb_end(GraphManifold& gm, bool last, std::vector<std::string>& notes) {
  const std::size_t idx = last ? gm.pieces.size() - 1 : 0;
  const std::size_t nb = last ? idx - 1 : 1;
  const Slope t = gm.pieces[idx].total();
  if (t.is_zero()) {
    notes.push_back("piece " + std::to_string(idx + 1) +
                    " is a solid torus whose meridian is the fiber of its neighbor; the result is reducible");
    return false;
  }
  const Slope fiber = slope_rotate(t);
  SeifertPiece& n = gm.pieces[nb];
  std::vector<Slope> fr = n.fractions;
  fr.push_back(fiber);
  Integer twist = n.euler_twist;
  for (const auto& f : n.fractions) twist -= f.floor();
  gm.pieces.erase(gm.pieces.begin() + static_cast<std::ptrdiff_t>(idx));
  const std::size_t at = last ? gm.pieces.size() - 1 : 0;
  gm.pieces[at] = SeifertPiece::make(end_base(at, gm.pieces.size()), std::move(fr), std::move(twist));
  --gm.jsj_tori;
  notes.push_back("solid torus end absorbed as fiber " + fiber.str());
  return true;
}

bool is_solid_torus(const SeifertPiece& p) { return p.base == Base::Disk && p.fibers.size() < 2; }

}  // namespace

Reduction reduce_graph(const GraphManifold& gm) {
  Reduction r;
  r.gm = gm;
  bool progress = true;
  while (progress && r.gm.pieces.size() >= 2) {
    progress = false;
    for (bool last : {false, true}) {
      const auto& end = last ? r.gm.pieces.back() : r.gm.pieces.front();
      if (!is_solid_torus(end)) continue;
      if (!absorb_end(r.gm, last, r.notes)) {
        r.fully_reduced = false;
        return r;
      }
      ++r.merges;
      progress = true;
      break;
    }
  }
  for (std::size_t i = 0; i < r.gm.pieces.size(); ++i) {
    const auto& p = r.gm.pieces[i];
    if (p.base == Base::Annulus && p.fibers.empty()) {
      r.fully_reduced = false;
      r.notes.push_back("annulus piece " + std::to_string(i + 1) +
                        " has no exceptional fiber; removing it needs a composed gluing");
    }
    if (p.base == Base::Disk && p.fibers.size() == 2 && p.fibers[0] == Slope::reduce(1, 2) &&
        p.fibers[1] == Slope::reduce(1, 2)) {
      r.notes.push_back("piece " + std::to_string(i + 1) + " is a twisted I-bundle over the Klein bottle");
    }
  }
  return r;
}

Integer h1_order(const GraphManifold& gm) {
  const std::size_t n = gm.pieces.size();
  if (n == 0) throw Error(ErrorCode::NotClosed, "empty chain");
  for (std::size_t i = 0; i < n; ++i) {
    if (gm.pieces[i].base != end_base(i, n)) {
      throw Error(ErrorCode::NotClosed, "piece " + std::to_string(i + 1) + " has base " +
                                            to_string(gm.pieces[i].base) + ", expected " +
                                            to_string(end_base(i, n)));
    }
  }
  // Generator layout per piece: h, one c per fiber, then d_in, d_out.
  std::vector<std::size_t> h(n), d_in(n), d_out(n), first_c(n);
  std::size_t gens = 0;
  for (std::size_t i = 0; i < n; ++i) {
    h[i] = gens++;
    first_c[i] = gens;
    gens += gm.pieces[i].fibers.size();
    if (i > 0) d_in[i] = gens++;
    if (i + 1 < n) d_out[i] = gens++;
  }
  Matrix rel;
  auto row = [&] { return std::vector<Integer>(gens, 0); };
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = gm.pieces[i];
    auto euler = row();
    for (std::size_t j = 0; j < p.fibers.size(); ++j) {
      auto r = row();
      r[first_c[i] + j] = p.fibers[j].den();
      r[h[i]] = p.fibers[j].num();
      rel.push_back(std::move(r));
      euler[first_c[i] + j] = 1;
    }
    if (i > 0) euler[d_in[i]] = 1;
    if (i + 1 < n) euler[d_out[i]] = 1;
    euler[h[i]] = -p.euler_twist;
    rel.push_back(std::move(euler));
    if (i + 1 < n) {
      auto a = row();
      a[h[i + 1]] = 1;
      a[d_out[i]] = -1;
      rel.push_back(std::move(a));
      auto b = row();
      b[d_in[i + 1]] = 1;
      b[h[i]] = -1;
      rel.push_back(std::move(b));
    }
  }
  return presentation_order(rel, gens);
}

namespace {

TangleExpr rational_sum(const std::vector<Slope>& slopes) {
  if (slopes.empty()) return TangleExpr::zero();
  TangleExpr t = rational_tangle(slopes[0]);
  for (std::size_t i = 1; i < slopes.size(); ++i) t = TangleExpr::hsum(t, rational_tangle(slopes[i]));
  return t;
}

}  // namespace

TangleExpr chain_link(const ChainSpec& spec) {
  if (spec.pieces.empty()) throw Error(ErrorCode::EmptySpec, "chain has no pieces");
  TangleExpr m = rational_sum(spec.pieces[0]);
  for (std::size_t i = 1; i < spec.pieces.size(); ++i) {
    TangleExpr rest = rational_sum(spec.pieces[i]);
    m = spec.pieces[i].empty() ? TangleExpr::rotate(m) : TangleExpr::hsum(TangleExpr::rotate(m), rest);
  }
  return TangleExpr::closed(m, Closure::Numerator);
}

GraphManifold chain_dbc(const ChainSpec& spec) {
  if (spec.pieces.empty()) throw Error(ErrorCode::EmptySpec, "chain has no pieces");
  std::vector<SeifertPiece> pieces;
  for (std::size_t i = 0; i < spec.pieces.size(); ++i) {
    pieces.push_back(SeifertPiece::make(end_base(i, spec.pieces.size()), spec.pieces[i]));
  }
  return chain_of(std::move(pieces));
}

ChainSpec chain_spec(const GraphManifold& gm) {
  ChainSpec spec;
  for (const auto& p : gm.pieces) {
    std::vector<Slope> slopes = p.fibers;
    if (p.euler_twist != 0) slopes.push_back(Slope::integer(p.euler_twist));
    spec.pieces.push_back(std::move(slopes));
  }
  return spec;
}

}  // namespace tg

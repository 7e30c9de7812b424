#include "tanglegraph/cli.hpp"

#include "tanglegraph/cover.hpp"
#include "tanglegraph/diagram.hpp"
#include "tanglegraph/error.hpp"
#include "tanglegraph/invariants.hpp"
#include "tanglegraph/moves.hpp"
#include "tanglegraph/template.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

namespace tg::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Settings {
  bool mirror = false;
  bool pretty = false;
  int bracket_cap = kDefaultBracketCap;
  int r3_depth = 3;
};

/// Reported inside the JSON, distinct from hard input errors.
struct Outcome {
  json report = json::object();
  int code = kOk;
};

json num(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max()) {
    return json(static_cast<long long>(x));
  }
  return json(x.str());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<long long> parse_int_list(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw Error(ErrorCode::Parse, "'" + item + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

json piece_json(const SeifertPiece& p) {
  json j;
  j["base"] = to_string(p.base);
  j["fractions"] = json::array();
  for (const auto& f : p.fractions) j["fractions"].push_back(f.str());
  j["fibers"] = json::array();
  for (const auto& f : p.fibers) j["fibers"].push_back(f.str());
  j["euler_twist"] = num(p.euler_twist);
  return j;
}

json graph_json(const GraphManifold& gm) {
  json j;
  j["pieces"] = json::array();
  for (const auto& p : gm.pieces) j["pieces"].push_back(piece_json(p));
  j["jsj_tori"] = gm.jsj_tori;
  return j;
}

json jsj_json(const JsjReport& r) {
  json j;
  j["pass"] = r.pass;
  j["tori"] = r.tori;
  j["pieces"] = json::array();
  for (const auto& pc : r.pieces) {
    json p;
    p["orders"] = json::array();
    for (const auto& a : pc.orders) p["orders"].push_back(num(a));
    p["exceptional"] = pc.exceptional;
    p["pass"] = pc.pass;
    if (!pc.note.empty()) p["note"] = pc.note;
    j["pieces"].push_back(p);
  }
  return j;
}

json reduction_json(const Reduction& r) {
  json j;
  j["merges"] = r.merges;
  j["fully_reduced"] = r.fully_reduced;
  j["jsj_tori"] = r.gm.jsj_tori;
  j["graph"] = graph_json(r.gm);
  j["notes"] = r.notes;
  return j;
}

json error_json(const Error& e) {
  json j;
  j["error"] = to_string(e.code());
  j["message"] = e.what();
  return j;
}

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(json report, const Settings& s, Clock::time_point start, std::ostream& out) {
  report["timing_ms"] = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  if (s.pretty) {
    flatten(report, "", out);
  } else {
    out << report.dump(2) << "\n";
  }
}

// ---------------------------------------------------------------------------
// family

Bindings family_bindings(const std::string& fam, const std::vector<long long>& v) {
  static const std::vector<std::string> b_names{"l", "m", "n", "p", "q"};
  static const std::vector<std::string> q_names{"a", "b", "c", "d", "e", "f"};
  const auto& names = fam == "b" ? b_names : q_names;
  Bindings out;
  for (std::size_t i = 0; i < names.size(); ++i) out[names[i]] = v[i];
  return out;
}

Outcome cmd_family(const std::string& fam, const std::string& params_text, const std::vector<std::string>& checks,
                   const std::string& template_path, const Settings& s) {
  Outcome o;
  const std::vector<long long> v = parse_int_list(params_text);
  const std::size_t want = fam == "b" ? 5 : 6;
  if (v.size() != want) {
    throw Error(ErrorCode::Parse, "family " + fam + " takes " + std::to_string(want) + " parameters, got " +
                                      std::to_string(v.size()));
  }
  json& r = o.report;
  r["inputs"] = {{"family", fam}, {"params", v}, {"checks", checks}};
  if (!template_path.empty()) r["inputs"]["template"] = template_path;
  if (s.mirror) r["inputs"]["mirror"] = true;

  ValidationResult vr = fam == "b" ? validate_b({v[0], v[1], v[2], v[3], v[4]})
                                   : validate_q({v[0], v[1], v[2], v[3], v[4], v[5]});
  json verdicts;
  verdicts["params_valid"] = vr.ok();
  r["outputs"]["violations"] = vr.violations;
  if (!vr.ok()) {
    r["verdicts"] = verdicts;
    o.code = kConstraintViolation;
    return o;
  }

  GraphManifold gm = fam == "b" ? build_b_graph({v[0], v[1], v[2], v[3], v[4]})
                                : build_q_graph({v[0], v[1], v[2], v[3], v[4], v[5]});
  r["outputs"]["graph"] = graph_json(gm);
  auto wants = [&](const char* name) { return std::find(checks.begin(), checks.end(), name) != checks.end(); };
  Integer h1 = -1;
  if (wants("jsj")) {
    JsjReport jr = validate_jsj(gm);
    r["outputs"]["jsj"] = jsj_json(jr);
    verdicts["jsj"] = jr.pass;
  }
  if (wants("reduce")) r["outputs"]["reduction"] = reduction_json(reduce_graph(gm));
  if (wants("h1")) {
    h1 = h1_order(gm);
    r["outputs"]["h1_order"] = num(h1);
  }
  if (wants("det") || wants("unknot")) {
    if (template_path.empty()) throw Error(ErrorCode::Parse, "checks det/unknot need --template");
    Template tpl = parse_template(read_file(template_path));
    TangleExpr t = tpl.instantiate(family_bindings(fam, v));
    if (wants("det")) {
      Diagram g = build_diagram(fill(t, Slope::infinity(), Closure::Numerator), s.mirror);
      Integer det = goeritz_determinant(g);
      r["outputs"]["exceptional_filling"] = {{"crossings", g.size()}, {"components", g.components()},
                                             {"determinant", num(det)}};
      if (h1 < 0) h1 = h1_order(gm);
      verdicts["det_equals_h1"] = det == h1;
      if (det != h1) o.code = kMismatch;
    }
    if (wants("unknot")) {
      Diagram g = build_diagram(fill(t, Slope::integer(0), Closure::Numerator), s.mirror);
      UnknotVerdict uv = certify_unknot(g.to_pd(), CertifyOptions{s.bracket_cap, s.r3_depth});
      r["outputs"]["trivial_filling"] = {{"crossings", g.size()},
                                         {"components", g.components()},
                                         {"verdict", to_string(uv.verdict)},
                                         {"evidence", uv.evidence}};
      verdicts["trivial_filling"] = to_string(uv.verdict);
    }
  }
  r["verdicts"] = verdicts;
  return o;
}

// ---------------------------------------------------------------------------
// tangle / export

TangleExpr load_closed(const std::string& path, const std::string& bind_text, const std::string& fill_text,
                       const std::string& closure_text, json* inputs) {
  Template tpl = parse_template(read_file(path));
  Bindings b = bind_text.empty() ? Bindings{} : parse_bindings(bind_text);
  TangleExpr t = tpl.instantiate(b);
  if (inputs) {
    (*inputs)["file"] = path;
    if (!bind_text.empty()) (*inputs)["bindings"] = bind_text;
  }
  if (closure_text != "numerator" && closure_text != "denominator") {
    throw Error(ErrorCode::Parse, "closure must be numerator or denominator");
  }
  if (!fill_text.empty()) {
    Slope s = Slope::parse(fill_text);
    Closure c = closure_text == "numerator" ? Closure::Numerator : Closure::Denominator;
    if (inputs) {
      (*inputs)["fill"] = s.str();
      (*inputs)["closure"] = closure_text;
    }
    return fill(t, s, c);
  }
  if (!t.is_closed()) throw Error(ErrorCode::NotClosed, "expression is an open tangle; pass --fill");
  return t;
}

struct InvariantFlags {
  bool det = false, jones = false, bracket = false, certify = false, simplify = false, pd = false;
};

Outcome cmd_tangle(const std::string& path, const std::string& bind, const std::string& fill_text,
                   const std::string& closure, const InvariantFlags& f, const Settings& s) {
  Outcome o;
  json& r = o.report;
  r["inputs"] = json::object();
  TangleExpr t = load_closed(path, bind, fill_text, closure, &r["inputs"]);
  if (s.mirror) r["inputs"]["mirror"] = true;
  Diagram g = build_diagram(t, s.mirror);
  PDCode pd = g.to_pd();
  json& out = r["outputs"];
  out["crossings"] = g.size();
  out["components"] = g.components();
  if (f.pd) out["pd"] = format_pd(pd);
  if (f.simplify) {
    Diagram sg = simplify(g, SimplifyOptions{s.r3_depth});
    out["simplified"] = {{"crossings", sg.size()}, {"components", sg.components()}};
  }
  if (f.det) out["determinant"] = num(goeritz_determinant(g));
  auto bracket_like = [&](const char* key, auto fn) {
    try {
      out[key] = fn().str();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TooLarge) throw;
      out[key] = error_json(e);
    }
  };
  if (f.bracket) bracket_like("bracket", [&] { return kauffman_bracket(g, s.bracket_cap); });
  if (f.jones) bracket_like("jones", [&] { return jones(g, s.bracket_cap); });
  if (f.certify) {
    UnknotVerdict uv = certify_unknot(pd, CertifyOptions{s.bracket_cap, s.r3_depth});
    out["unknot"] = {{"verdict", to_string(uv.verdict)}, {"evidence", uv.evidence}};
    r["verdicts"]["unknot"] = to_string(uv.verdict);
  }
  return o;
}

int cmd_export(const std::string& path, const std::string& bind, const std::string& fill_text,
               const std::string& closure, const std::string& format, bool simp, const Settings& s,
               std::ostream& out) {
  TangleExpr t = load_closed(path, bind, fill_text, closure, nullptr);
  Diagram g = build_diagram(t, s.mirror);
  if (simp) g = simplify(g, SimplifyOptions{s.r3_depth});
  PDCode pd = g.to_pd();
  if (format == "pd") {
    out << format_pd(pd);
  } else if (format == "dt") {
    out << format_dt(dt_code(pd));
  } else {
    throw Error(ErrorCode::Parse, "format must be pd or dt");
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// crosscheck

struct CrossCase {
  ChainSpec chain;
  std::optional<ChainSpec> seifert;  // overrides chain_dbc(chain)
  std::string text;
};

std::string spec_text(const ChainSpec& spec) {
  std::string s;
  for (std::size_t i = 0; i < spec.pieces.size(); ++i) {
    if (i) s += " | ";
    for (std::size_t j = 0; j < spec.pieces[i].size(); ++j) {
      if (j) s += " ";
      s += spec.pieces[i][j].str();
    }
  }
  return s;
}

ChainSpec parse_chain(const std::string& text, int line) {
  ChainSpec spec;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, '|')) {
    std::vector<Slope> slopes;
    std::string tok;
    for (char& ch : piece) {
      if (ch == ',') ch = ' ';
    }
    std::stringstream ps(piece);
    while (ps >> tok) {
      try {
        slopes.push_back(Slope::parse(tok));
      } catch (const ParseError& e) {
        throw ParseError(line, 1, "bad slope '" + tok + "': " + e.message());
      }
      if (slopes.back().is_infinite()) throw ParseError(line, 1, "fiber slope 1/0 is not allowed");
    }
    spec.pieces.push_back(std::move(slopes));
  }
  if (spec.pieces.empty()) throw ParseError(line, 1, "empty chain");
  return spec;
}

std::vector<CrossCase> parse_spec_file(const std::string& text) {
  std::vector<CrossCase> cases;
  std::stringstream ss(text);
  std::string line;
  int no = 0;
  while (std::getline(ss, line)) {
    ++no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    CrossCase c;
    auto arrow = line.find("=>");
    c.chain = parse_chain(line.substr(0, arrow), no);
    if (arrow != std::string::npos) c.seifert = parse_chain(line.substr(arrow + 2), no);
    c.text = spec_text(c.chain);
    if (c.seifert) c.text += " => " + spec_text(*c.seifert);
    cases.push_back(std::move(c));
  }
  return cases;
}

std::vector<CrossCase> random_cases(int count, int max_alpha, int max_pieces, std::uint64_t seed) {
  if (count < 0 || max_alpha < 2 || max_pieces < 1) {
    throw Error(ErrorCode::Parse, "need --random >= 0, --max-alpha >= 2, --max-pieces >= 1");
  }
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::vector<CrossCase> cases;
  for (int i = 0; i < count; ++i) {
    CrossCase c;
    const int pieces = uniform(1, max_pieces);
    for (int k = 0; k < pieces; ++k) {
      const bool interior = k > 0 && k + 1 < pieces;
      const int fibers = pieces == 1 ? uniform(1, 4) : interior ? uniform(1, 2) : uniform(1, 3);
      std::vector<Slope> slopes;
      for (int j = 0; j < fibers; ++j) {
        const int alpha = uniform(2, max_alpha);
        int beta = 0;
        do {
          beta = uniform(-alpha, alpha);
        } while (beta == 0 || boost::multiprecision::gcd(Integer(alpha), Integer(beta)) != 1);
        slopes.push_back(Slope::reduce(beta, alpha));
      }
      c.chain.pieces.push_back(std::move(slopes));
    }
    c.text = spec_text(c.chain);
    cases.push_back(std::move(c));
  }
  return cases;
}

Outcome cmd_crosscheck(const std::vector<CrossCase>& cases, json inputs, const Settings& s) {
  Outcome o;
  json& r = o.report;
  r["inputs"] = std::move(inputs);
  if (s.mirror) r["inputs"]["mirror"] = true;
  r["outputs"]["cases"] = json::array();
  int equal = 0;
  for (const auto& c : cases) {
    Diagram g = build_diagram(chain_link(c.chain), s.mirror);
    Integer det = goeritz_determinant(g);
    Integer h1 = h1_order(chain_dbc(c.seifert ? *c.seifert : c.chain));
    const bool same = det == h1;
    equal += same ? 1 : 0;
    r["outputs"]["cases"].push_back(
        {{"spec", c.text}, {"crossings", g.size()}, {"determinant", num(det)}, {"h1_order", num(h1)}, {"equal", same}});
  }
  r["verdicts"] = {{"total", cases.size()}, {"equal", equal}, {"all_equal", equal == static_cast<int>(cases.size())}};
  if (equal != static_cast<int>(cases.size())) o.code = kMismatch;
  return o;
}

// ---------------------------------------------------------------------------
// sweep

std::vector<long long> signed_values(std::initializer_list<long long> mags) {
  std::vector<long long> out;
  for (long long m : mags) {
    out.push_back(-m);
    out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Outcome cmd_sweep(const std::string& kind, bool list) {
  Outcome o;
  json& r = o.report;
  r["inputs"] = {{"sweep", kind}};
  json rows = json::array();
  int tuples = 0, valid = 0, pass = 0;
  std::map<std::string, int> shapes;
  auto record = [&](const std::vector<long long>& params, const GraphManifold& gm) {
    JsjReport jr = validate_jsj(gm);
    ++valid;
    pass += jr.pass ? 1 : 0;
    ++shapes[std::to_string(gm.pieces.size()) + " pieces/" + std::to_string(gm.jsj_tori) + " tori"];
    if (list || !jr.pass) {
      rows.push_back({{"params", params},
                      {"pieces", gm.pieces.size()},
                      {"tori", gm.jsj_tori},
                      {"jsj", jr.pass},
                      {"h1_order", num(h1_order(gm))}});
    }
  };
  if (kind == "b") {
    for (long long l : signed_values({2, 3}))
      for (long long m : signed_values({2, 3}))
        for (long long n : signed_values({3, 4, 5}))
          for (long long p : signed_values({2, 3}))
            for (long long q : signed_values({1, 2, 3})) {
              ++tuples;
              BParams bp{l, m, n, p, q};
              if (validate_b(bp).ok()) record({l, m, n, p, q}, build_b_graph(bp));
            }
  } else if (kind == "q") {
    for (long long a : signed_values({2, 3}))
      for (long long b : signed_values({1, 2, 3}))
        for (long long c : signed_values({2, 3}))
          for (long long d : signed_values({3, 4, 5}))
            for (long long e : signed_values({2, 3}))
              for (long long f : signed_values({1, 2, 3})) {
                ++tuples;
                QParams qp{a, b, c, d, e, f};
                if (validate_q(qp).ok()) record({a, b, c, d, e, f}, build_q_graph(qp));
              }
  } else if (kind == "degenerate") {
    for (long long a : signed_values({2, 3}))
      for (long long b : signed_values({1, 2}))
        for (long long c : signed_values({2, 3})) {
          ++tuples;
          if ((a == 2 && b == 1) || (a == -2 && b == -1)) continue;
          ++valid;
          GraphManifold gm = build_q_graph({a, b, c, -2, -1, 1});
          Reduction red = reduce_graph(gm);
          const bool fired = red.merges > 0 && red.gm.jsj_tori < gm.jsj_tori;
          pass += fired ? 1 : 0;
          ++shapes[std::to_string(red.gm.jsj_tori) + " tori after reduction"];
          rows.push_back({{"params", {a, b, c, -2, -1, 1}},
                          {"tori_before", gm.jsj_tori},
                          {"tori_after", red.gm.jsj_tori},
                          {"merges", red.merges},
                          {"fully_reduced", red.fully_reduced},
                          {"notes", red.notes}});
        }
  } else {
    throw Error(ErrorCode::Parse, "sweep kind must be b, q or degenerate");
  }
  r["outputs"]["tuples"] = tuples;
  r["outputs"]["valid"] = valid;
  r["outputs"]["shapes"] = shapes;
  r["outputs"]["rows"] = rows;
  r["verdicts"] = {{"pass", pass}, {"all_pass", pass == valid}};
  return o;
}

void load_config(const std::string& path, Settings& s, const CLI::App& app) {
  json cfg;
  try {
    cfg = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, "config " + path + ": " + e.what());
  }
  auto unset = [&](const char* flag) { return app.get_option(flag)->count() == 0; };
  if (cfg.contains("mirror") && unset("--mirror")) s.mirror = cfg["mirror"].get<bool>();
  if (cfg.contains("pretty") && unset("--pretty")) s.pretty = cfg["pretty"].get<bool>();
  if (cfg.contains("bracket_cap") && unset("--cap")) s.bracket_cap = cfg["bracket_cap"].get<int>();
  if (cfg.contains("r3_depth") && unset("--r3-depth")) s.r3_depth = cfg["r3_depth"].get<int>();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  CLI::App app{"Tangle families, link invariants and double branched covers"};
  app.require_subcommand(1);
  Settings s;
  std::string config;
  app.add_flag("--mirror", s.mirror, "Switch every crossing");
  app.add_flag("--pretty", s.pretty, "Print a flat key: value view instead of JSON");
  app.add_option("--config", config, "JSON file with mirror, pretty, bracket_cap, r3_depth");
  app.add_option("--cap", s.bracket_cap, "Largest crossing count for the bracket state sum");
  app.add_option("--r3-depth", s.r3_depth, "Depth of the R3 search during simplification");

  std::string fam, params, tpl_path;
  std::vector<std::string> checks{"jsj", "reduce", "h1"};
  auto* family = app.add_subcommand("family", "Build and check the graph manifold of a family member");
  family->add_option("family", fam, "b or q")->required()->check(CLI::IsMember({"b", "q"}));
  family->add_option("params", params, "Comma-separated parameters")->required();
  family->add_option("--checks", checks, "Any of jsj, reduce, h1, det, unknot")->delimiter(',');
  family->add_option("--template", tpl_path, "Template file for the det and unknot checks");

  std::string file, bind, fill_text, closure = "numerator", format = "pd";
  InvariantFlags flags;
  auto* tangle = app.add_subcommand("tangle", "Close a tangle expression and compute invariants");
  tangle->add_option("file", file, "Expression or template file")->required();
  tangle->add_option("--bind", bind, "Bindings such as l=2,m=-3");
  tangle->add_option("--fill", fill_text, "Slope of the rational filling");
  tangle->add_option("--closure", closure, "numerator or denominator");
  tangle->add_flag("--det", flags.det);
  tangle->add_flag("--jones", flags.jones);
  tangle->add_flag("--bracket", flags.bracket);
  tangle->add_flag("--certify-unknot", flags.certify);
  tangle->add_flag("--simplify", flags.simplify);
  tangle->add_flag("--pd", flags.pd);

  bool export_simplify = false;
  auto* exporter = app.add_subcommand("export", "Write the PD or DT code of a closed expression");
  exporter->add_option("file", file, "Expression or template file")->required();
  exporter->add_option("--bind", bind);
  exporter->add_option("--fill", fill_text);
  exporter->add_option("--closure", closure);
  exporter->add_option("--format", format, "pd or dt");
  exporter->add_flag("--simplify", export_simplify);

  std::string spec_file;
  int random_count = -1, max_alpha = 7, max_pieces = 1;
  std::uint64_t seed = 1;
  auto* cross = app.add_subcommand("crosscheck", "Compare link determinants with |H1| of the covers");
  cross->add_option("specs", spec_file, "File with one chain per line");
  cross->add_option("--random", random_count, "Number of random chains");
  cross->add_option("--max-alpha", max_alpha);
  cross->add_option("--max-pieces", max_pieces);
  cross->add_option("--seed", seed);

  std::string sweep_kind;
  bool sweep_list = false;
  auto* sweep = app.add_subcommand("sweep", "Run a family over its standard parameter box");
  sweep->add_option("kind", sweep_kind, "b, q or degenerate")->required();
  sweep->add_flag("--list", sweep_list, "Include every tuple");

  std::vector<std::string> argv_store{"tanglegraph"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (!config.empty()) load_config(config, s, app);
    Outcome o;
    json command = args;
    if (family->parsed()) {
      o = cmd_family(fam, params, checks, tpl_path, s);
    } else if (tangle->parsed()) {
      o = cmd_tangle(file, bind, fill_text, closure, flags, s);
    } else if (exporter->parsed()) {
      return cmd_export(file, bind, fill_text, closure, format, export_simplify, s, out);
    } else if (cross->parsed()) {
      std::vector<CrossCase> cases;
      json inputs;
      if (!spec_file.empty()) {
        cases = parse_spec_file(read_file(spec_file));
        inputs["specs"] = spec_file;
      } else if (random_count >= 0) {
        cases = random_cases(random_count, max_alpha, max_pieces, seed);
        inputs = {{"random", random_count}, {"max_alpha", max_alpha}, {"max_pieces", max_pieces}, {"seed", seed}};
      } else {
        throw Error(ErrorCode::Parse, "crosscheck needs a spec file or --random N");
      }
      o = cmd_crosscheck(cases, inputs, s);
    } else if (sweep->parsed()) {
      o = cmd_sweep(sweep_kind, sweep_list);
    }
    json report;
    report["command"] = command;
    for (auto& [k, v] : o.report.items()) report[k] = v;
    emit(report, s, start, out);
    return o.code;
  } catch (const ConstraintViolation& e) {
    err << "error: " << e.what() << "\n";
    json report;
    report["command"] = args;
    report["verdicts"] = {{"params_valid", false}};
    report["outputs"]["violations"] = e.report().violations;
    emit(report, s, start, out);
    return kConstraintViolation;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace tg::cli

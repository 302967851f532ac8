#include "floppy/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "floppy/surgery.hpp"

namespace floppy {

namespace {

using ojson = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& msg) { throw ParseError(msg); }

ojson parse_text(const std::string& text, const char* what) {
  ojson j = ojson::parse(text, nullptr, false);
  if (j.is_discarded()) bad(std::string(what) + ": not valid JSON");
  return j;
}

const ojson& need(const ojson& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where + ": missing field '" + key + "'");
  return *it;
}

std::string get_str(const ojson& j, const char* key, const std::string& where) {
  const ojson& v = need(j, key, where);
  if (!v.is_string()) bad(where + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

long long get_int(const ojson& j, const char* key, const std::string& where) {
  const ojson& v = need(j, key, where);
  if (!v.is_number_integer()) bad(where + ": field '" + key + "' must be an integer");
  return v.get<long long>();
}

bool get_bool(const ojson& j, const char* key, const std::string& where) {
  const ojson& v = need(j, key, where);
  if (!v.is_boolean()) bad(where + ": field '" + key + "' must be a boolean");
  return v.get<bool>();
}

Rat as_rat(const ojson& v, const std::string& where) {
  if (v.is_number_integer()) return Rat(v.get<long long>());
  if (v.is_string()) {
    try {
      return rat_parse(v.get<std::string>());
    } catch (const std::exception& e) {
      bad(where + ": " + e.what());
    }
  }
  bad(where + ": expected an integer or a \"p/q\" string");
}

Side as_side(const std::string& s, const std::string& where) {
  if (s == "+" || s == "plus") return Side::plus;
  if (s == "-" || s == "minus") return Side::minus;
  bad(where + ": expected '+' or '-', got '" + s + "'");
}

std::vector<std::string> str_list(const ojson& v, const std::string& where) {
  if (!v.is_array()) bad(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) bad(where + ": expected an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

// ---- diagram ----

Arc arc_from(const ojson& j) {
  Arc a;
  a.id = get_str(j, "id", "arc");
  const std::string where = "arc '" + a.id + "'";
  a.closed = j.contains("closed") ? get_bool(j, "closed", where) : !j.contains("from");
  if (!a.closed) {
    a.from = get_str(j, "from", where);
    a.to = get_str(j, "to", where);
  }
  a.thick_start = j.contains("thick") ? get_bool(j, "thick", where) : true;
  if (j.contains("flops"))
    for (const auto& f : str_list(j.at("flops"), where + ".flops")) a.flops.push_back({f});
  return a;
}

ArcEnd arc_end_from(const ojson& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_number_integer())
    bad(where + ": an arc end is [\"arc\", 0|1]");
  ArcEnd e;
  e.arc = v[0].get<std::string>();
  e.end = v[1].get<int>();
  if (e.end != 0 && e.end != 1) bad(where + ": arc end index must be 0 or 1");
  return e;
}

Crossing crossing_from(const ojson& j) {
  Crossing c;
  c.id = get_str(j, "id", "vertex");
  const std::string where = "vertex '" + c.id + "'";
  const ojson& ends = need(j, "ends", where);
  if (!ends.is_array() || ends.size() != 4) bad(where + ": 'ends' must list four arc ends");
  for (int i = 0; i < 4; ++i) c.ends[i] = arc_end_from(ends[i], where);
  return c;
}

Constituent constituent_from(const ojson& j) {
  Constituent c;
  c.id = get_str(j, "id", "constituent");
  const std::string where = "constituent '" + c.id + "'";
  const ojson& steps = need(j, "steps", where);
  if (!steps.is_array()) bad(where + ": 'steps' must be an array");
  for (const auto& s : steps) {
    if (!s.is_array() || s.size() != 2 || !s[0].is_string() || !s[1].is_boolean())
      bad(where + ": a step is [\"arc\", reversed]");
    c.steps.push_back({s[0].get<std::string>(), s[1].get<bool>()});
  }
  c.one_sided = j.contains("one_sided") ? get_bool(j, "one_sided", where) : false;
  return c;
}

Face face_from(const ojson& j) {
  Face f;
  f.id = get_str(j, "id", "face");
  const std::string where = "face '" + f.id + "'";
  f.euler = static_cast<int>(get_int(j, "euler", where));
  f.orientable = j.contains("orientable") ? get_bool(j, "orientable", where) : true;
  if (j.contains("side") && !j.at("side").is_null())
    f.side = as_side(get_str(j, "side", where), where);
  if (j.contains("boundary")) {
    const ojson& cycles = j.at("boundary");
    if (!cycles.is_array()) bad(where + ": 'boundary' must be an array of cycles");
    for (const auto& cy : cycles) {
      if (!cy.is_array()) bad(where + ": a boundary cycle must be an array");
      BoundaryCycle cycle;
      for (const auto& inc : cy) {
        if (!inc.is_array() || inc.size() != 3 || !inc[0].is_string() ||
            !inc[1].is_number_integer() || !inc[2].is_boolean())
          bad(where + ": a boundary entry is [\"arc\", slot, reversed]");
        cycle.push_back({inc[0].get<std::string>(), inc[1].get<int>(), inc[2].get<bool>()});
      }
      f.boundary.push_back(std::move(cycle));
    }
  }
  return f;
}

WSpec w_from(const ojson& j) {
  WSpec w;
  w.on_curve = j.contains("on_curve") ? get_bool(j, "on_curve", "w") : false;
  if (j.contains("face")) w.face = get_str(j, "face", "w");
  if (j.contains("corners")) {
    const ojson& cs = j.at("corners");
    if (!cs.is_array()) bad("w: 'corners' must be an array");
    for (const auto& c : cs) {
      CornerFlag flag;
      flag.vertex = get_str(c, "vertex", "w corner");
      const ojson& fs = need(c, "faces", "w corner");
      if (!fs.is_array() || fs.size() != 2 || !fs[0].is_string() || !fs[1].is_string())
        bad("w corner: 'faces' must be two face ids");
      flag.face_a = fs[0].get<std::string>();
      flag.face_b = fs[1].get<std::string>();
      flag.crosses = get_bool(c, "crosses", "w corner");
      w.corner_flags.push_back(std::move(flag));
    }
  }
  return w;
}

CurveDiagram diagram_from(const ojson& j, int degree) {
  CurveDiagram d;
  d.degree = degree;
  if (j.contains("vertices"))
    for (const auto& c : j.at("vertices")) d.crossings.push_back(crossing_from(c));
  if (j.contains("arcs"))
    for (const auto& a : j.at("arcs")) d.arcs.push_back(arc_from(a));
  if (j.contains("constituents"))
    for (const auto& c : j.at("constituents")) d.constituents.push_back(constituent_from(c));
  if (j.contains("faces"))
    for (const auto& f : j.at("faces")) d.faces.push_back(face_from(f));
  if (j.contains("isolated"))
    for (const auto& p : j.at("isolated")) {
      IsolatedPoint ip;
      ip.id = get_str(p, "id", "isolated point");
      ip.face = get_str(p, "face", "isolated point '" + ip.id + "'");
      d.isolated.push_back(std::move(ip));
    }
  if (j.contains("w") && !j.at("w").is_null()) d.w = w_from(j.at("w"));
  return d;
}

void apply_global(FloppyCurve& F, const ojson& g) {
  const std::string where = "global";
  if (!g.is_object()) bad("global: expected an object");
  if (g.contains("chi")) F.chi = get_int(g, "chi", where);
  if (g.contains("nu_plus")) F.nu_plus = get_int(g, "nu_plus", where);
  if (g.contains("nu_minus")) F.nu_minus = get_int(g, "nu_minus", where);
  if (g.contains("n")) F.n = get_int(g, "n", where);
  if (g.contains("c")) F.c = get_int(g, "c", where);
  if (g.contains("epsilon")) F.epsilon = static_cast<int>(get_int(g, "epsilon", where));
  if (g.contains("dividing")) {
    try {
      F.dividing = dividing_parse(get_str(g, "dividing", where));
    } catch (const std::exception& e) {
      bad(std::string("global: ") + e.what());
    }
  }
  if (g.contains("strongly_irreducible"))
    F.strongly_irreducible = get_bool(g, "strongly_irreducible", where);
  if (g.contains("two_irreducible")) F.two_irreducible = get_bool(g, "two_irreducible", where);
  if (g.contains("complex_orientation")) {
    const ojson& co = g.at("complex_orientation");
    if (!co.is_object()) bad("global: 'complex_orientation' must map constituents to +1/-1");
    for (auto it = co.begin(); it != co.end(); ++it) {
      if (!it.value().is_number_integer())
        bad("global: 'complex_orientation' must map constituents to +1/-1");
      F.complex_orientation[it.key()] = it.value().get<int>();
    }
  }
  if (g.contains("assumptions"))
    for (auto& s : str_list(g.at("assumptions"), "global.assumptions"))
      F.assumptions.push_back(std::move(s));
}

FloppyCurve curve_from(const ojson& j) {
  FloppyCurve F;
  F.m = get_int(j, "degree", "curve");
  if (F.m < 2 || F.m % 2) bad("curve: 'degree' must be even and at least 2");
  F.diagram = diagram_from(j, static_cast<int>(F.m));
  if (j.contains("global")) apply_global(F, j.at("global"));
  return F;
}

// ---- link ----

LinkInstance link_from(const ojson& j) {
  LinkInstance L;
  const ojson& classes = need(j, "classes", "link");
  if (!classes.is_array()) bad("link: 'classes' must be an array of integers");
  for (const auto& c : classes) {
    if (!c.is_number_integer()) bad("link: 'classes' must be an array of integers");
    L.classes.push_back(h1(c.get<long long>()));
  }
  const ojson& lk = need(j, "lk", "link");
  if (!lk.is_array()) bad("link: 'lk' must be a square matrix");
  for (const auto& row : lk) {
    if (!row.is_array()) bad("link: 'lk' must be a square matrix");
    std::vector<Rat> r;
    for (const auto& e : row) r.push_back(as_rat(e, "link.lk"));
    L.lk.push_back(std::move(r));
  }
  L.gamma = h1(get_int(j, "gamma", "link"));
  try {
    L.q = qtag_parse(get_str(j, "q", "link"));
  } catch (const std::exception& e) {
    bad(std::string("link: ") + e.what());
  }
  if (j.contains("surface") && !j.at("surface").is_null()) {
    const ojson& s = j.at("surface");
    SurfaceData sd;
    sd.brown = get_int(s, "beta", "link.surface");
    sd.e = as_rat(need(s, "e", "link.surface"), "link.surface.e");
    sd.lambda = as_rat(need(s, "lambda", "link.surface"), "link.surface.lambda");
    L.surface = sd;
  }
  return L;
}

// ---- serialization ----

ojson arc_to(const Arc& a) {
  ojson j;
  j["id"] = a.id;
  j["closed"] = a.closed;
  if (!a.closed) {
    j["from"] = a.from;
    j["to"] = a.to;
  }
  j["thick"] = a.thick_start;
  if (!a.flops.empty()) {
    ojson fl = ojson::array();
    for (const auto& f : a.flops) fl.push_back(f.into_face);
    j["flops"] = std::move(fl);
  }
  return j;
}

ojson curve_to(const FloppyCurve& F) {
  ojson j;
  j["degree"] = F.m;
  ojson vs = ojson::array();
  for (const auto& c : F.diagram.crossings) {
    ojson v;
    v["id"] = c.id;
    ojson ends = ojson::array();
    for (const auto& e : c.ends) ends.push_back(ojson::array({e.arc, e.end}));
    v["ends"] = std::move(ends);
    vs.push_back(std::move(v));
  }
  j["vertices"] = std::move(vs);
  ojson as = ojson::array();
  for (const auto& a : F.diagram.arcs) as.push_back(arc_to(a));
  j["arcs"] = std::move(as);
  ojson cs = ojson::array();
  for (const auto& c : F.diagram.constituents) {
    ojson v;
    v["id"] = c.id;
    ojson steps = ojson::array();
    for (const auto& s : c.steps) steps.push_back(ojson::array({s.arc, s.reversed}));
    v["steps"] = std::move(steps);
    v["one_sided"] = c.one_sided;
    cs.push_back(std::move(v));
  }
  j["constituents"] = std::move(cs);
  ojson fs = ojson::array();
  for (const auto& f : F.diagram.faces) {
    ojson v;
    v["id"] = f.id;
    v["euler"] = f.euler;
    v["orientable"] = f.orientable;
    if (f.side)
      v["side"] = side_str(*f.side);
    else
      v["side"] = nullptr;
    ojson cycles = ojson::array();
    for (const auto& cy : f.boundary) {
      ojson cycle = ojson::array();
      for (const auto& inc : cy) cycle.push_back(ojson::array({inc.arc, inc.slot, inc.reversed}));
      cycles.push_back(std::move(cycle));
    }
    v["boundary"] = std::move(cycles);
    fs.push_back(std::move(v));
  }
  j["faces"] = std::move(fs);
  ojson ps = ojson::array();
  for (const auto& p : F.diagram.isolated) {
    ojson v;
    v["id"] = p.id;
    v["face"] = p.face;
    ps.push_back(std::move(v));
  }
  j["isolated"] = std::move(ps);
  if (F.diagram.w) {
    ojson w;
    w["on_curve"] = F.diagram.w->on_curve;
    w["face"] = F.diagram.w->face;
    ojson corners = ojson::array();
    for (const auto& c : F.diagram.w->corner_flags) {
      ojson v;
      v["vertex"] = c.vertex;
      v["faces"] = ojson::array({c.face_a, c.face_b});
      v["crosses"] = c.crosses;
      corners.push_back(std::move(v));
    }
    w["corners"] = std::move(corners);
    j["w"] = std::move(w);
  }
  ojson g;
  g["chi"] = F.chi;
  g["nu_plus"] = F.nu_plus;
  g["nu_minus"] = F.nu_minus;
  g["n"] = F.n;
  g["c"] = F.c;
  g["epsilon"] = F.epsilon;
  g["dividing"] = dividing_str(F.dividing);
  g["strongly_irreducible"] = F.strongly_irreducible;
  g["two_irreducible"] = F.two_irreducible;
  ojson co = ojson::object();
  for (const auto& [k, v] : F.complex_orientation) co[k] = v;
  g["complex_orientation"] = std::move(co);
  g["assumptions"] = F.assumptions;
  j["global"] = std::move(g);
  return j;
}

ojson link_to(const LinkInstance& L) {
  ojson j;
  ojson classes = ojson::array();
  for (const auto& c : L.classes) classes.push_back(c.coeff);
  j["classes"] = std::move(classes);
  ojson lk = ojson::array();
  for (const auto& row : L.lk) {
    ojson r = ojson::array();
    for (const auto& e : row) r.push_back(rat_str(e));
    lk.push_back(std::move(r));
  }
  j["lk"] = std::move(lk);
  j["gamma"] = L.gamma.coeff;
  j["q"] = qtag_str(L.q);
  if (L.surface) {
    ojson s;
    s["beta"] = L.surface->brown;
    s["e"] = rat_str(L.surface->e);
    s["lambda"] = rat_str(L.surface->lambda);
    j["surface"] = std::move(s);
  }
  return j;
}

// ---- derivation scripts ----

ArcRewriteSpec rewrite_from(const ojson& j) {
  ArcRewriteSpec spec;
  if (!j.is_object()) bad("rewrite: expected an object");
  if (j.contains("remove_arcs")) spec.remove_arcs = str_list(j.at("remove_arcs"), "rewrite.remove_arcs");
  if (j.contains("remove_crossings"))
    spec.remove_crossings = str_list(j.at("remove_crossings"), "rewrite.remove_crossings");
  if (j.contains("remove_faces"))
    spec.remove_faces = str_list(j.at("remove_faces"), "rewrite.remove_faces");
  if (j.contains("add_arcs"))
    for (const auto& a : j.at("add_arcs")) spec.add_arcs.push_back(arc_from(a));
  if (j.contains("add_crossings"))
    for (const auto& c : j.at("add_crossings")) spec.add_crossings.push_back(crossing_from(c));
  if (j.contains("upsert_faces"))
    for (const auto& f : j.at("upsert_faces")) {
      FacePatch p;
      p.id = get_str(f, "id", "rewrite face");
      const std::string where = "rewrite face '" + p.id + "'";
      if (f.contains("euler")) p.euler = static_cast<int>(get_int(f, "euler", where));
      if (f.contains("orientable")) p.orientable = get_bool(f, "orientable", where);
      if (f.contains("side") && !f.at("side").is_null())
        p.side = as_side(get_str(f, "side", where), where);
      spec.upsert_faces.push_back(std::move(p));
    }
  if (j.contains("slot_faces")) {
    const ojson& sf = j.at("slot_faces");
    if (!sf.is_array()) bad("rewrite: 'slot_faces' must be an array");
    for (const auto& e : sf) {
      std::string arc = get_str(e, "arc", "rewrite slot");
      long long slot = get_int(e, "slot", "rewrite slot");
      std::string face = get_str(e, "face", "rewrite slot");
      if (slot != 0 && slot != 1) bad("rewrite slot: 'slot' must be 0 or 1");
      spec.slot_faces[{arc, static_cast<int>(slot)}] = face;
    }
  }
  if (j.contains("quadrant_faces")) {
    const ojson& qf = j.at("quadrant_faces");
    if (!qf.is_object()) bad("rewrite: 'quadrant_faces' must map vertices to four faces");
    for (auto it = qf.begin(); it != qf.end(); ++it) {
      auto faces = str_list(it.value(), "rewrite.quadrant_faces");
      if (faces.size() != 4) bad("rewrite: 'quadrant_faces' must map vertices to four faces");
      spec.quadrant_faces[it.key()] = {faces[0], faces[1], faces[2], faces[3]};
    }
  }
  if (j.contains("arc_heritage")) {
    const ojson& ah = j.at("arc_heritage");
    if (!ah.is_object()) bad("rewrite: 'arc_heritage' must map arcs to constituent lists");
    for (auto it = ah.begin(); it != ah.end(); ++it)
      spec.arc_heritage[it.key()] = str_list(it.value(), "rewrite.arc_heritage");
  }
  if (j.contains("assumptions"))
    spec.assumptions = str_list(j.at("assumptions"), "rewrite.assumptions");
  return spec;
}

std::optional<bool> move_compat(const ojson& mv) {
  if (!mv.contains("compatible") || mv.at("compatible").is_null()) return std::nullopt;
  if (!mv.at("compatible").is_boolean()) bad("move: 'compatible' must be a boolean or null");
  return mv.at("compatible").get<bool>();
}

std::vector<std::string> move_assumes(const ojson& mv) {
  if (!mv.contains("assume")) return {};
  const ojson& a = mv.at("assume");
  if (a.is_string()) return {a.get<std::string>()};
  return str_list(a, "move.assume");
}

FloppyCurve apply_move(const FloppyCurve& cur, const ojson& mv) {
  std::string op = get_str(mv, "op", "move");
  auto assumes = move_assumes(mv);
  auto planned = [&](ArcRewriteSpec spec, AmbientKind kind) {
    for (auto& s : assumes) spec.assumptions.push_back(std::move(s));
    return ambient_surgery(cur, kind, spec, move_compat(mv));
  };
  if (op == "join_ovals")
    return planned(plan_join_ovals(cur, get_str(mv, "a", "join_ovals"),
                                   get_str(mv, "b", "join_ovals")),
                   AmbientKind::simple);
  if (op == "wall_join")
    return planned(plan_wall_join(cur, get_str(mv, "from", "wall_join"),
                                  get_str(mv, "wall", "wall_join"),
                                  get_str(mv, "to", "wall_join")),
                   AmbientKind::crossing);
  if (op == "figure_eight")
    return planned(plan_figure_eight(cur, get_str(mv, "oval", "figure_eight")),
                   AmbientKind::figure_eight);
  if (op == "ambient") {
    AmbientKind kind;
    try {
      kind = ambient_kind_parse(get_str(mv, "kind", "ambient"));
    } catch (const std::exception& e) {
      bad(std::string("ambient: ") + e.what());
    }
    return planned(rewrite_from(need(mv, "rewrite", "ambient")), kind);
  }

  FloppyCurve next;
  if (op == "resolve") {
    std::string choice = get_str(mv, "choice", "resolve");
    if (choice != "A" && choice != "B") bad("resolve: 'choice' must be \"A\" or \"B\"");
    next = resolve_crossing(cur, get_str(mv, "vertex", "resolve"), choice[0], move_compat(mv));
  } else if (op == "conjugate") {
    next = resolve_conjugate_pair(cur, as_side(get_str(mv, "sign", "conjugate"), "conjugate"));
  } else if (op == "isolated_to_oval") {
    next = isolated_to_oval(cur, get_str(mv, "point", "isolated_to_oval"));
  } else if (op == "oval_to_isolated") {
    next = oval_to_isolated(cur, get_str(mv, "constituent", "oval_to_isolated"));
  } else {
    bad("move: unknown op '" + op + "'");
  }
  for (auto& s : assumes) next.assumptions.push_back(std::move(s));
  return next;
}

}  // namespace

FloppyCurve curve_from_json(const std::string& text) {
  return curve_from(parse_text(text, "curve"));
}

std::string curve_to_json(const FloppyCurve& F, int indent) {
  return curve_to(F).dump(indent) + "\n";
}

LinkInstance link_from_json(const std::string& text) {
  ojson j = parse_text(text, "link");
  if (j.is_object() && j.contains("link")) return link_from(j.at("link"));
  return link_from(j);
}

std::string link_to_json(const LinkInstance& L, int indent) {
  return link_to(L).dump(indent) + "\n";
}

Derivation run_derivation(const std::string& text) {
  ojson j = parse_text(text, "derivation");
  Derivation out;
  std::string scheme = get_str(j, "scheme", "derivation");
  long long degree = get_int(j, "degree", "derivation");
  SchemeExpr expr;
  try {
    expr = parse_scheme(scheme);
  } catch (const std::exception& e) {
    bad(std::string("derivation: ") + e.what());
  }
  FloppyCurve cur = expand_scheme(expr, degree);
  if (j.contains("global")) apply_global(cur, j.at("global"));
  if (j.contains("assumptions"))
    for (auto& s : str_list(j.at("assumptions"), "derivation.assumptions"))
      cur.assumptions.push_back(std::move(s));
  if (j.contains("moves")) {
    const ojson& moves = j.at("moves");
    if (!moves.is_array()) bad("derivation: 'moves' must be an array");
    for (const auto& mv : moves) cur = apply_move(cur, mv);
  }
  if (j.contains("link") && !j.at("link").is_null()) out.link = link_from(j.at("link"));
  out.curve = std::move(cur);
  return out;
}

std::string verdict_to_json(const Verdict& v, int indent) {
  ojson j;
  j["verdict"] = v.verdict;
  j["assumptions"] = v.assumptions;
  ojson checks = ojson::array();
  for (const auto& r : v.results) {
    ojson c;
    c["id"] = r.id;
    c["status"] = check_status_str(r.status);
    c["lhs"] = r.lhs ? ojson(rat_str(*r.lhs)) : ojson(nullptr);
    c["rhs"] = r.rhs ? ojson(rat_str(*r.rhs)) : ojson(nullptr);
    c["notes"] = r.notes;
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  if (v.analysis) {
    const Analysis& A = *v.analysis;
    ojson s;
    s["degree"] = A.curve.m;
    s["k"] = A.k;
    s["chi"] = A.curve.chi;
    s["delta"] = A.delta_v;
    s["h"] = A.h;
    s["dividing"] = dividing_str(A.curve.dividing);
    s["dividing_effective"] = dividing_str(A.dividing_effective);
    s["dividing_forced"] = A.dividing_forced;
    s["o_plus"] = A.o_plus;
    s["o_minus"] = A.o_minus;
    s["chi_b_plus"] = A.chi_b_plus;
    s["chi_b_minus"] = A.chi_b_minus;
    ojson counts;
    counts["r_plus"] = A.counts.r_plus;
    counts["r_minus"] = A.counts.r_minus;
    counts["iota_plus"] = A.counts.iota_plus;
    counts["iota_minus"] = A.counts.iota_minus;
    counts["ell"] = A.counts.ell;
    counts["nu_plus"] = A.counts.nu_plus;
    counts["nu_minus"] = A.counts.nu_minus;
    counts["d"] = A.counts.d();
    counts["d_plus"] = A.counts.d_plus();
    counts["d_minus"] = A.counts.d_minus();
    s["counts"] = std::move(counts);
    auto matrix_block = [](const PairingMatrix& m, const InertiaResult& in) {
      ojson b;
      b["regions"] = m.order;
      ojson rows = ojson::array();
      for (const auto& row : m.entries2) {
        ojson r = ojson::array();
        for (const auto& e : row) r.push_back(e.str());
        rows.push_back(std::move(r));
      }
      b["entries2"] = std::move(rows);
      ojson inj;
      inj["sigma_plus"] = in.sigma_plus;
      inj["sigma_minus"] = in.sigma_minus;
      inj["eta"] = in.eta;
      b["inertia"] = std::move(inj);
      return b;
    };
    s["matrix_plus"] = matrix_block(A.m_plus, A.in_plus);
    s["matrix_minus"] = matrix_block(A.m_minus, A.in_minus);
    j["summary"] = std::move(s);
  }
  return j.dump(indent) + "\n";
}

std::string verdict_to_text(const Verdict& v) {
  std::ostringstream os;
  os << "verdict: " << v.verdict << "\n";
  if (v.analysis) {
    const Analysis& A = *v.analysis;
    os << "degree " << A.curve.m << " (k=" << A.k << ")  chi=" << A.curve.chi
       << "  delta=" << A.delta_v << "  h=" << A.h
       << "  dividing=" << dividing_str(A.dividing_effective)
       << (A.dividing_forced ? " (forced)" : "") << "\n";
  }
  if (!v.assumptions.empty()) {
    os << "assumptions:\n";
    for (const auto& a : v.assumptions) os << "  - " << a << "\n";
  }
  os << "checks:\n";
  for (const auto& r : v.results) {
    os << "  " << std::left << std::setw(22) << r.id << " " << std::setw(14)
       << check_status_str(r.status);
    if (r.lhs) os << " lhs=" << rat_str(*r.lhs);
    if (r.rhs) os << " rhs=" << rat_str(*r.rhs);
    if (!r.notes.empty()) os << "  " << r.notes;
    os << "\n";
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace floppy

#include "floppy/curve.hpp"

#include <stdexcept>

namespace floppy {

std::string dividing_str(Dividing d) {
  switch (d) {
    case Dividing::yes: return "yes";
    case Dividing::no: return "no";
    default: return "unknown";
  }
}

Dividing dividing_parse(const std::string& s) {
  if (s == "yes") return Dividing::yes;
  if (s == "no") return Dividing::no;
  if (s == "unknown") return Dividing::unknown;
  throw std::runtime_error("dividing: expected yes|no|unknown, got '" + s + "'");
}

DerivedCounts derived_counts(const FloppyCurve& F) {
  DerivedCounts c;
  auto rc = count_crossings(F.diagram);
  c.r_plus = rc.r_plus;
  c.r_minus = rc.r_minus;
  auto ic = count_isolated(F.diagram);
  c.iota_plus = ic.in_plus;
  c.iota_minus = ic.in_minus;
  c.ell = static_cast<long long>(F.diagram.constituents.size());
  c.nu_plus = F.nu_plus;
  c.nu_minus = F.nu_minus;
  return c;
}

namespace {

// d and d± without the per-side iota split, so no coloring needed
struct FlatCounts {
  long long r_plus = 0, r_minus = 0, iota = 0;
};

FlatCounts flat_counts(const FloppyCurve& F) {
  FlatCounts c;
  auto rc = count_crossings(F.diagram);
  c.r_plus = rc.r_plus;
  c.r_minus = rc.r_minus;
  c.iota = static_cast<long long>(F.diagram.isolated.size());
  return c;
}

}  // namespace

long long delta(const FloppyCurve& F) {
  auto c = flat_counts(F);
  long long d_plus = 2 * F.nu_plus + c.iota + c.r_plus;
  long long d_minus = 2 * F.nu_minus + c.r_minus;
  return F.chi - d_plus + d_minus + F.m * F.m - 3 * F.m;
}

long long harnack_h(const FloppyCurve& F) {
  auto c = flat_counts(F);
  long long d = 2 * (F.nu_plus + F.nu_minus) + c.iota + c.r_plus + c.r_minus;
  long long ell = static_cast<long long>(F.diagram.constituents.size());
  return 4 * F.c - F.chi - 2 * ell - d;
}

ValidationReport validate_curve(const FloppyCurve& F) {
  ValidationReport rep = validate_diagram(F.diagram);
  auto bad = [&rep](std::string msg) { rep.violations.push_back(std::move(msg)); };

  if (F.m != F.diagram.degree) bad("degree: curve and diagram disagree");
  if (F.m < 2 || F.m % 2 != 0) bad("degree: must be even and >= 2");
  if (F.nu_plus < 0 || F.nu_minus < 0) bad("nu: negative conjugate-pair count");
  if (F.n < 1) bad("n: at least one complex component");
  if (F.c < 1) bad("c: at least one real component");
  if (F.c > F.n) bad("components: c must not exceed n");
  if (F.epsilon != 0 && F.epsilon != 1) bad("epsilon: must be 0 or 1");
  if (F.strongly_irreducible && !F.two_irreducible)
    bad("irreducibility: strongly irreducible implies 2-irreducible");
  if (F.two_irreducible && !F.strongly_irreducible && F.n != 2)
    bad("irreducibility: 2-irreducible needs strong irreducibility or n = 2");
  for (const auto& [cid, sign] : F.complex_orientation) {
    bool known = false;
    for (const auto& cc : F.diagram.constituents) known = known || cc.id == cid;
    if (!known) bad("orientation: unknown constituent '" + cid + "'");
    if (sign != 1 && sign != -1) bad("orientation: sign for '" + cid + "' must be +1 or -1");
  }
  if (!F.complex_orientation.empty() && F.dividing == Dividing::no)
    bad("orientation: complex orientations require a dividing curve");

  bool colored = !F.diagram.faces.empty();
  for (const auto& f : F.diagram.faces) colored = colored && f.side.has_value();
  if (rep.ok() && colored) {
    long long D = delta(F);
    long long o_plus = flop_excess_side(F.diagram, Side::plus);
    long long o_minus = flop_excess_side(F.diagram, Side::minus);
    if (o_plus % 2 != 0) bad("parity: O+ must be even");
    if (o_minus % 2 != 0) bad("parity: O- must be even");
    if (D % 2 != 0) bad("parity: delta must be even");
    auto mod4 = [](long long x) { return ((x % 4) + 4) % 4; };
    if (mod4(D) != mod4(o_plus)) bad("parity: delta and O+ differ mod 4");
    if (mod4(D) != mod4(o_minus)) bad("parity: delta and O- differ mod 4");
    auto c = flat_counts(F);
    long long d = 2 * (F.nu_plus + F.nu_minus) + c.iota + c.r_plus + c.r_minus;
    if (((F.chi - d) % 2 + 2) % 2 != 0) bad("parity: chi and d differ mod 2");
  }
  return rep;
}

FloppyCurve expand_scheme(const SchemeExpr& expr, long long degree) {
  if (has_one_sided(expr)) throw std::runtime_error("expand: one-sided component not supported");
  if (degree < 2 || degree % 2 != 0) throw std::runtime_error("expand: degree must be even and >= 2");

  SchemeExpr canon = canonicalize(expr);
  CurveDiagram d;
  d.degree = degree;

  struct Walker {
    CurveDiagram& d;
    long long next = 1;

    // Expands the ovals of e, returns their arc ids (the faces they bound
    // from outside attach these at slot 1).
    std::vector<std::string> expand(const SchemeExpr& e) {
      std::vector<std::string> arcs;
      for (const auto& it : e.items) {
        for (long long rep = 0; rep < it.count; ++rep) {
          long long id = next++;
          std::string oid = "o" + std::to_string(id);
          Arc a;
          a.id = oid;
          a.closed = true;
          a.thick_start = true;
          d.arcs.push_back(a);
          Constituent c;
          c.id = "c" + std::to_string(id);
          c.steps.push_back({oid, false});
          d.constituents.push_back(c);
          std::vector<std::string> children = expand(it.contents);
          Face f;
          f.id = "f" + std::to_string(id);
          f.euler = 1 - static_cast<long long>(children.size());
          f.orientable = true;
          f.boundary.push_back({ArcIncidence{oid, 0, false}});
          for (const auto& ch : children) f.boundary.push_back({ArcIncidence{ch, 1, false}});
          d.faces.push_back(f);
          arcs.push_back(oid);
        }
      }
      return arcs;
    }
  };

  Walker w{d};
  std::vector<std::string> roots = w.expand(canon);
  Face outer;
  outer.id = "fO";
  outer.euler = 1 - static_cast<long long>(roots.size());
  outer.orientable = false;
  for (const auto& rt : roots) outer.boundary.push_back({ArcIncidence{rt, 1, false}});
  d.faces.push_back(outer);
  d.w = WSpec{false, "fO", {}};

  color_canonical(d);

  FloppyCurve F;
  F.diagram = std::move(d);
  F.m = degree;
  F.chi = 3 * degree - degree * degree;
  F.n = F.c = 1;
  F.epsilon = 0;
  F.dividing = Dividing::unknown;
  F.strongly_irreducible = true;
  F.two_irreducible = true;
  return F;
}

}  // namespace floppy

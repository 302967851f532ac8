#include "floppy/checks.hpp"

#include <algorithm>
#include <stdexcept>

namespace floppy {

namespace {

long long mod4(long long x) { return ((x % 4) + 4) % 4; }
long long mod2(long long x) { return ((x % 2) + 2) % 2; }

std::string num(long long v) { return std::to_string(v); }

CheckResult make(std::string id, CheckStatus st, std::optional<Rat> lhs, std::optional<Rat> rhs,
                 std::string notes) {
  CheckResult r;
  r.id = std::move(id);
  r.status = st;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.notes = std::move(notes);
  return r;
}

struct SideContext {
  Side side;
  std::string tag;  // "plus" / "minus"
  long long o = 0;
  long long chi_b = 0;
  const PairingMatrix* mat = nullptr;
  const InertiaResult* in = nullptr;
  bool odd_kernel = false;
  bool all_relevant = true;
};

SideContext side_ctx(const Analysis& A, Side s) {
  SideContext c;
  c.side = s;
  c.tag = s == Side::plus ? "plus" : "minus";
  c.o = s == Side::plus ? A.o_plus : A.o_minus;
  c.chi_b = s == Side::plus ? A.chi_b_plus : A.chi_b_minus;
  c.mat = s == Side::plus ? &A.m_plus : &A.m_minus;
  c.in = s == Side::plus ? &A.in_plus : &A.in_minus;
  c.odd_kernel = s == Side::plus ? A.odd_kernel_plus : A.odd_kernel_minus;
  c.all_relevant = s == Side::plus ? A.all_relevant_plus : A.all_relevant_minus;
  return c;
}

// spare eigenvalue budget after the complex components absorb the kernel
long long eta_excess(const Analysis& A, const SideContext& c) {
  long long e = c.in->eta - A.curve.n + A.curve.epsilon;
  return std::max(0LL, e);
}

Rat bound_sigma_plus(const Analysis& A, const SideContext& c) {
  return Rat((A.k - 1) * (A.k - 2)) / 2 - Rat(A.delta_v - c.o) / 4;
}

Rat bound_sigma_minus(const Analysis& A, const SideContext& c) {
  const DerivedCounts& n = A.counts;
  return Rat(3 * A.k * (A.k - 1)) / 2 + Rat(c.chi_b) - Rat(A.delta_v + c.o) / 4 +
         Rat(n.r() - n.iota() - n.d_plus() + n.d_minus()) / 2;
}

}  // namespace

std::string check_status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "not_applicable";
    case CheckStatus::conditional: return "conditional";
  }
  return "fail";
}

Analysis analyze(const FloppyCurve& F) {
  Analysis A;
  A.curve = F;
  bool colored = !F.diagram.faces.empty();
  for (const auto& f : F.diagram.faces) colored = colored && f.side.has_value();
  if (!colored) color_canonical(A.curve.diagram);

  A.counts = derived_counts(A.curve);
  A.k = A.curve.k();
  A.delta_v = delta(A.curve);
  A.h = harnack_h(A.curve);

  A.dividing_effective = F.dividing;
  if (F.dividing == Dividing::unknown) {
    if (A.h == 0) {
      A.dividing_effective = Dividing::yes;
      A.dividing_forced = true;
    } else if (mod4(A.h) == 2) {
      A.dividing_effective = Dividing::no;
      A.dividing_forced = true;
    }
  }

  const CurveDiagram& d = A.curve.diagram;
  A.o_plus = flop_excess_side(d, Side::plus);
  A.o_minus = flop_excess_side(d, Side::minus);
  A.chi_b_plus = chi_side(d, Side::plus);
  A.chi_b_minus = chi_side(d, Side::minus);
  A.m_plus = build_side_matrix(d, A.k, Side::plus);
  A.m_minus = build_side_matrix(d, A.k, Side::minus);
  A.in_plus = inertia(A.m_plus);
  A.in_minus = inertia(A.m_minus);
  A.odd_kernel_plus = odd_kernel_witness(A.m_plus).has_value();
  A.odd_kernel_minus = odd_kernel_witness(A.m_minus).has_value();

  A.profiles = region_profiles(d, static_cast<int>(A.k));
  long long nonor = 0;
  bool nonor_minus = false;
  for (const auto& p : A.profiles) {
    if (p.side == Side::plus)
      A.all_relevant_plus = A.all_relevant_plus && p.relevant;
    else
      A.all_relevant_minus = A.all_relevant_minus && p.relevant;
    if (!p.orientable) {
      nonor += 1;
      nonor_minus = p.side == Side::minus;
    }
  }
  bool two_sided = true;
  for (const auto& c : d.constituents) two_sided = two_sided && !c.one_sided;
  A.canonical_plus = nonor == 1 && nonor_minus && two_sided;
  return A;
}

std::vector<CheckResult> check_harnack(const Analysis& A) {
  std::vector<CheckResult> out;
  Rat h(A.h);
  out.push_back(make("harnack", A.h >= 0 ? CheckStatus::pass : CheckStatus::fail, h, Rat(0),
                     A.h >= 0 ? "defect 4c - chi - 2l - d is non-negative"
                              : "defect 4c - chi - 2l - d is negative"));
  out.push_back(make("harnack_parity", mod2(A.h) == 0 ? CheckStatus::pass : CheckStatus::fail,
                     Rat(mod2(A.h)), Rat(0), "defect parity"));

  CheckStatus st = CheckStatus::pass;
  std::string notes;
  if (A.curve.dividing == Dividing::yes && mod4(A.h) != 0) {
    st = CheckStatus::fail;
    notes = "a dividing curve needs its defect divisible by four";
  } else if (A.curve.dividing == Dividing::no && A.h == 0) {
    st = CheckStatus::fail;
    notes = "zero defect forces a dividing curve";
  } else if (A.dividing_forced && A.dividing_effective == Dividing::yes) {
    notes = "zero defect: the curve divides";
  } else if (A.dividing_forced && A.dividing_effective == Dividing::no) {
    notes = "defect 2 mod 4: the curve cannot divide";
  }
  out.push_back(make("harnack_dividing", st, Rat(mod4(A.h)), Rat(0), notes));
  return out;
}

std::vector<CheckResult> check_parity(const Analysis& A) {
  std::vector<CheckResult> out;
  auto item = [&](std::string id, long long lhs, long long rhs, long long modulus,
                  std::string notes) {
    long long diff = lhs - rhs;
    bool ok = ((diff % modulus) + modulus) % modulus == 0;
    out.push_back(make(std::move(id), ok ? CheckStatus::pass : CheckStatus::fail, Rat(lhs),
                       Rat(rhs), std::move(notes)));
  };
  item("parity_o_plus", A.o_plus, 0, 2, "flop excess of '+' is even");
  item("parity_o_minus", A.o_minus, 0, 2, "flop excess of '-' is even");
  item("parity_delta", A.delta_v, 0, 2, "delta is even");
  item("parity_delta_o_plus", A.delta_v, A.o_plus, 4, "delta matches O+ mod 4");
  item("parity_delta_o_minus", A.delta_v, A.o_minus, 4, "delta matches O- mod 4");
  item("parity_chi_d", A.curve.chi, A.counts.d(), 2, "chi matches d mod 2");
  return out;
}

std::vector<CheckResult> check_viro(const Analysis& A) {
  std::vector<CheckResult> out;
  for (Side s : {Side::plus, Side::minus}) {
    SideContext c = side_ctx(A, s);
    long long excess = eta_excess(A, c);
    {
      Rat lhs = Rat(c.in->sigma_plus + excess);
      Rat rhs = bound_sigma_plus(A, c);
      CheckStatus st = lhs <= rhs ? CheckStatus::pass : CheckStatus::fail;
      std::string notes = lhs == rhs ? "sharp" : "";
      out.push_back(make("viro_1_" + c.tag, st, lhs, rhs, notes));
    }
    {
      Rat lhs = Rat(c.in->sigma_minus + excess);
      Rat rhs = bound_sigma_minus(A, c);
      CheckStatus st = lhs <= rhs ? CheckStatus::pass : CheckStatus::fail;
      std::string notes = lhs == rhs ? "sharp" : "";
      out.push_back(make("viro_2_" + c.tag, st, lhs, rhs, notes));
    }
  }
  return out;
}

std::vector<CheckResult> check_addenda(const Analysis& A) {
  std::vector<CheckResult> out;
  const bool via_two = A.curve.two_irreducible;
  const bool via_canonical = A.curve.strongly_irreducible && A.canonical_plus;
  struct Item {
    std::string id;
    Side side;
    Rat lhs, rhs;
  };
  std::vector<Item> items;
  for (Side s : {Side::plus, Side::minus}) {
    SideContext c = side_ctx(A, s);
    items.push_back({"addendum_3_" + c.tag, s, Rat(c.in->sigma_plus + c.in->eta),
                     bound_sigma_plus(A, c)});
    items.push_back({"addendum_4_" + c.tag, s, Rat(c.in->sigma_minus + c.in->eta),
                     bound_sigma_minus(A, c)});
  }
  if (!via_two && !via_canonical) {
    for (auto& it : items)
      out.push_back(make(it.id, CheckStatus::not_applicable, it.lhs, it.rhs,
                         "needs a 2-irreducible curve or the canonical assembly"));
    return out;
  }

  bool plus_bad = false, minus_bad = false;
  for (const auto& it : items) {
    if (it.lhs <= it.rhs) continue;
    (it.side == Side::plus ? plus_bad : minus_bad) = true;
  }
  const bool cross_kill = A.curve.strongly_irreducible && plus_bad && minus_bad;

  for (const auto& it : items) {
    Rat margin = it.lhs - it.rhs;
    if (margin <= 0) {
      out.push_back(make(it.id, CheckStatus::pass, it.lhs, it.rhs, margin == 0 ? "sharp" : ""));
      continue;
    }
    if (margin >= 2) {
      out.push_back(make(it.id, CheckStatus::fail, it.lhs, it.rhs,
                         "exceeds the eigenvalue budget by more than one"));
      continue;
    }
    if (margin != 1) {
      // quarter-integral overshoot cannot be the extremal case
      out.push_back(
          make(it.id, CheckStatus::fail, it.lhs, it.rhs, "fractional overshoot"));
      continue;
    }
    if (cross_kill) {
      out.push_back(make(it.id, CheckStatus::fail, it.lhs, it.rhs,
                         "a strongly irreducible curve cannot be extremal on both covers"));
      continue;
    }
    if (via_canonical &&
        ((it.side == Side::plus && A.k % 2 != 0) || (it.side == Side::minus && A.k % 2 == 0))) {
      out.push_back(make(it.id, CheckStatus::fail, it.lhs, it.rhs,
                         "the canonical assembly forbids this extremal cover"));
      continue;
    }
    SideContext c = side_ctx(A, it.side);
    if (!c.all_relevant) {
      out.push_back(make(it.id, CheckStatus::fail, it.lhs, it.rhs,
                         "extremal case needs every region of the side to count"));
      continue;
    }
    if (!c.odd_kernel) {
      out.push_back(make(it.id, CheckStatus::fail, it.lhs, it.rhs,
                         "extremal case needs an all-odd kernel vector"));
      continue;
    }
    switch (A.dividing_effective) {
      case Dividing::yes:
        out.push_back(make(it.id, CheckStatus::conditional, it.lhs, it.rhs, "extremal, allowed"));
        break;
      case Dividing::no:
        out.push_back(make(it.id, CheckStatus::fail, it.lhs, it.rhs,
                           "extremal case needs a dividing curve"));
        break;
      case Dividing::unknown:
        out.push_back(make(it.id, CheckStatus::conditional, it.lhs, it.rhs,
                           "extremal: allowed only if the curve divides"));
        break;
    }
  }
  return out;
}

std::vector<CheckResult> check_determinant(const Analysis& A) {
  std::vector<CheckResult> out;
  for (Side s : {Side::plus, Side::minus}) {
    SideContext c = side_ctx(A, s);
    const std::string id = "determinant_" + c.tag;
    if (!A.curve.two_irreducible) {
      out.push_back(make(id, CheckStatus::not_applicable, std::nullopt, std::nullopt,
                         "needs a 2-irreducible curve"));
      continue;
    }
    const DerivedCounts& n = A.counts;
    long long rho = static_cast<long long>(c.mat->order.size());
    long long iota_opp = s == Side::plus ? n.iota_minus : n.iota_plus;
    long long pi = 0;
    for (const auto& p : A.profiles) pi += p.side == s && !p.relevant ? 1 : 0;
    Rat hcov = Rat(3 + n.r() + c.chi_b) + Rat(n.d() - A.curve.chi) / 2 -
               Rat(2 * rho + 2 * iota_opp + 2 * pi);
    if (!is_integer(hcov) || hcov < 0) {
      out.push_back(make(id, CheckStatus::fail, hcov, Rat(0),
                         "membrane homology rank is negative or fractional"));
      continue;
    }
    Rat P = Rat(1 + c.chi_b) + Rat(n.r() - n.iota() - A.curve.chi) / 2;
    if (Rat(rho) != P) {
      out.push_back(make(id, CheckStatus::not_applicable, Rat(rho), P,
                         "region count differs from the rank bound"));
      continue;
    }
    long long exponent =
        static_cast<long long>(rat_num(hcov)) + rho - n.d();
    Int det = det_abs(c.mat->entries2);
    bool ok = det_power_square(*c.mat, exponent);
    out.push_back(make(id, ok ? CheckStatus::pass : CheckStatus::fail, Rat(det),
                       std::nullopt,
                       ok ? "determinant is a square times 2^" + num(exponent)
                          : "determinant is not a square times 2^" + num(exponent)));
  }
  return out;
}

std::vector<CheckResult> cover_diagnostics(const Analysis& A) {
  std::vector<CheckResult> out;
  const DerivedCounts& n = A.counts;
  long long chi_y_plus = 2 * A.chi_b_plus + n.r() - n.iota();
  long long chi_y_minus = 2 * A.chi_b_minus + n.r() - n.iota();
  {
    long long sum = chi_y_plus + chi_y_minus;
    out.push_back(make("cover_euler", sum == 2 ? CheckStatus::pass : CheckStatus::fail, Rat(sum),
                       Rat(2), "the two covers glue to the double plane"));
  }
  auto bound = [&](std::string id, Rat v, std::string notes) {
    CheckStatus st = is_integer(v) && v >= 0 ? CheckStatus::pass : CheckStatus::fail;
    out.push_back(make(std::move(id), st, v, Rat(0), std::move(notes)));
  };
  Rat genus = Rat((A.k - 1) * (A.k - 2)) / 2;
  Rat torus = Rat(3 * A.k * (A.k - 1)) / 2;
  bound("cover_a", genus - Rat(A.delta_v - A.o_plus) / 4, "handle count of the '+' cover");
  bound("cover_b", torus + Rat(chi_y_plus - n.d_plus() + n.d_minus()) / 2 -
                       Rat(A.delta_v + A.o_plus) / 4,
        "complementary handle count of the '+' cover");
  bound("cover_c", genus - Rat(A.delta_v + A.o_plus) / 4, "handle count of the '-' cover");
  bound("cover_d", torus + Rat(chi_y_minus - n.d_plus() + n.d_minus()) / 2 -
                       Rat(A.delta_v - A.o_plus) / 4,
        "complementary handle count of the '-' cover");
  out.push_back(make("cover_signature_plus", CheckStatus::pass, Rat(-chi_y_plus + A.o_plus),
                     std::nullopt, "signature of the '+' branched cover"));
  out.push_back(make("cover_signature_minus", CheckStatus::pass, Rat(-chi_y_minus + A.o_minus),
                     std::nullopt, "signature of the '-' branched cover"));
  return out;
}

std::vector<CheckResult> check_congruence(const Analysis& A,
                                          const std::optional<LinkInstance>& link) {
  std::vector<CheckResult> out;
  auto na = [&](std::string notes) {
    out.push_back(make("congruence_arf", CheckStatus::not_applicable, std::nullopt, std::nullopt,
                       std::move(notes)));
  };
  if (!link) {
    na("no link data supplied");
    return out;
  }
  if (A.h != 0) {
    na("needs zero defect");
    return out;
  }
  if (A.curve.nu_plus + A.curve.nu_minus != 0) {
    na("needs no conjugate pairs");
    return out;
  }
  if (A.curve.n != A.curve.c) {
    na("needs every complex component real");
    return out;
  }
  if (!is_proper(*link)) {
    na("link fails the properness congruence");
    return out;
  }
  auto target = required_arf(A.k, link->gamma, link->q);
  if (!target) {
    na("no congruence target for this class and refinement");
    return out;
  }
  if (!link->surface) {
    na("no spanning-surface data");
    return out;
  }
  Rat actual = mod8(arf_eval(*link->surface));
  Rat expected = mod8(*target);
  bool ok = actual == expected;
  out.push_back(make("congruence_arf", ok ? CheckStatus::pass : CheckStatus::fail, actual,
                     expected,
                     ok ? "invariant meets the congruence"
                        : "invariant misses the congruence target"));
  return out;
}

Verdict run_all_checks(const FloppyCurve& F, const std::optional<LinkInstance>& link,
                       bool strict) {
  Verdict v;
  v.assumptions = F.assumptions;
  auto prohibited_name = [&]() {
    return v.assumptions.empty() ? std::string("prohibited")
                                 : std::string("prohibited_under_assumptions");
  };

  FloppyCurve colored = F;
  {
    auto rep = validate_diagram(F.diagram);
    if (rep.ok()) {
      bool has_color = !F.diagram.faces.empty();
      for (const auto& f : F.diagram.faces) has_color = has_color && f.side.has_value();
      if (!has_color) {
        try {
          color_canonical(colored.diagram);
        } catch (const std::exception& e) {
          v.results.push_back(make("validity", CheckStatus::fail, std::nullopt, std::nullopt,
                                   std::string("coloring failed: ") + e.what()));
          v.verdict = strict ? prohibited_name() : "invalid";
          return v;
        }
      }
    }
  }
  auto rep = validate_curve(colored);
  if (!rep.ok()) {
    v.results.push_back(
        make("validity", CheckStatus::fail, std::nullopt, std::nullopt, rep.joined()));
    v.verdict = strict ? prohibited_name() : "invalid";
    return v;
  }
  if (link) {
    auto lrep = validate_link(*link);
    if (!lrep.ok()) {
      v.results.push_back(
          make("validity", CheckStatus::fail, std::nullopt, std::nullopt, lrep.joined()));
      v.verdict = strict ? prohibited_name() : "invalid";
      return v;
    }
  }

  Analysis A = analyze(colored);
  auto absorb = [&](std::vector<CheckResult> rs) {
    for (auto& r : rs) v.results.push_back(std::move(r));
  };
  absorb(check_harnack(A));
  absorb(check_parity(A));
  absorb(check_viro(A));
  absorb(check_addenda(A));
  absorb(check_determinant(A));
  absorb(cover_diagnostics(A));
  absorb(check_congruence(A, link));

  bool any_fail = false;
  for (const auto& r : v.results) any_fail = any_fail || r.status == CheckStatus::fail;
  v.verdict = any_fail ? prohibited_name() : "not_prohibited";
  v.analysis = std::move(A);
  return v;
}

}  // namespace floppy

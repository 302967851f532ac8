#include "floppy/arf.hpp"

#include <stdexcept>

namespace floppy {

H1Class h1(long long a) { return H1Class{static_cast<int>(((a % 4) + 4) % 4)}; }
H1Class operator+(H1Class a, H1Class b) { return h1(a.coeff + b.coeff); }
H1Class operator*(long long s, H1Class a) { return h1(s * a.coeff); }

Rat linking_form(H1Class a, H1Class b) {
  return mod1(Rat(-static_cast<long long>(a.coeff) * b.coeff, 4));
}

std::string qtag_str(QTag t) { return t == QTag::q_minus_eighth ? "q_-1/8" : "q_3/8"; }

QTag qtag_parse(const std::string& s) {
  if (s == "q_-1/8" || s == "q_minus_eighth") return QTag::q_minus_eighth;
  if (s == "q_3/8" || s == "q_three_eighths") return QTag::q_three_eighths;
  throw std::runtime_error("q: expected q_-1/8 or q_3/8, got '" + s + "'");
}

Rat qform_value(QTag t, H1Class a) {
  Rat v = t == QTag::q_minus_eighth ? Rat(-1, 8) : Rat(3, 8);
  return mod1(Rat(static_cast<long long>(a.coeff) * a.coeff) * v);
}

ValidationReport validate_link(const LinkInstance& L) {
  ValidationReport rep;
  auto bad = [&rep](std::string msg) { rep.violations.push_back(std::move(msg)); };
  std::size_t n = L.classes.size();
  if (L.lk.size() != n) {
    bad("lk: table size differs from component count");
    return rep;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (L.lk[i].size() != n) {
      bad("lk: row " + std::to_string(i) + " has wrong length");
      return rep;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (L.lk[i][i] != 0) bad("lk: nonzero self entry at " + std::to_string(i));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (L.lk[i][j] != L.lk[j][i])
        bad("lk: asymmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (mod1(L.lk[i][j] - linking_form(L.classes[i], L.classes[j])) != 0)
        bad("lk: entry (" + std::to_string(i) + "," + std::to_string(j) +
            ") incompatible with the linking form");
    }
  }
  return rep;
}

H1Class total_class(const LinkInstance& L) {
  H1Class t;
  for (const auto& c : L.classes) t = t + c;
  return t;
}

bool is_proper(const LinkInstance& L) {
  if (total_class(L) != 2 * L.gamma)
    throw std::runtime_error("proper: [L] differs from twice gamma");
  std::size_t n = L.classes.size();
  for (std::size_t i = 0; i < n; ++i) {
    Rat rest = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) rest += L.lk[i][j];
    Rat lhs = qform_value(L.q, L.classes[i]) + rest / 2;
    Rat rhs = linking_form(L.classes[i], L.gamma);
    if (mod1(lhs - rhs) != 0) return false;
  }
  return true;
}

Rat arf_eval(const SurfaceData& s) {
  Rat v = Rat(s.brown) + s.e / 2 - s.lambda;
  if (rat_den(2 * v) != 1) throw std::runtime_error("arf: value not half-integral");
  return rat_mod(v, 8);
}

H1Class lplus_class(const CurveDiagram& C) {
  if (!C.crossings.empty()) throw std::runtime_error("lift class: resolve all crossings first");
  long long flops = 0;
  for (const auto& a : C.arcs) flops += static_cast<long long>(a.flops.size());
  long long two_sided = 0, thick_one = 0, thin_one = 0, one_sided = 0;
  std::map<std::string, const Arc*> arcs;
  for (const auto& a : C.arcs) arcs[a.id] = &a;
  for (const auto& c : C.constituents) {
    if (!c.one_sided) {
      ++two_sided;
      continue;
    }
    ++one_sided;
    if (one_sided > 1) throw std::runtime_error("lift class: more than one one-sided component");
    bool any_flop = false;
    bool thick = true;
    for (const auto& st : c.steps) {
      const Arc& a = *arcs.at(st.arc);
      any_flop = any_flop || !a.flops.empty();
      thick = a.thick_start;
    }
    if (any_flop)
      throw std::runtime_error("lift class: one-sided component with flops has no thickness");
    (thick ? thick_one : thin_one)++;
  }
  return h1(2 * flops + 2 * two_sided + thick_one - thin_one);
}

LinkInstance reference_family(long long k, long long e0) {
  if (k < 1 || e0 < 0) throw std::runtime_error("reference family: need k >= 1, e0 >= 0");
  LinkInstance L;
  long long n = 2 * k + 2 * e0;
  L.classes.reserve(n);
  std::vector<int> sign(n, 1);
  for (long long i = 0; i < n; ++i) {
    bool thin = i >= 2 * k + e0;
    sign[i] = thin ? -1 : 1;
    L.classes.push_back(h1(sign[i]));
  }
  L.lk.assign(n, std::vector<Rat>(n, 0));
  for (long long i = 0; i < n; ++i)
    for (long long j = i + 1; j < n; ++j) {
      Rat v(-sign[i] * sign[j], 4);
      L.lk[i][j] = v;
      L.lk[j][i] = v;
    }
  L.gamma = h1(k);
  L.q = QTag::q_minus_eighth;
  Rat lambda = 0;
  for (long long i = 0; i < n; ++i)
    for (long long j = i + 1; j < n; ++j) lambda += L.lk[i][j];
  SurfaceData s;
  s.brown = 0;
  s.e = Rat(k + e0, 2);
  s.lambda = lambda;  // equals (e0 - k(2k-1))/4
  L.surface = s;
  return L;
}

LinkInstance with_form(LinkInstance L, H1Class gamma, QTag q) {
  L.gamma = gamma;
  L.q = q;
  return L;
}

std::optional<Rat> required_arf(long long k, H1Class gamma, QTag q) {
  Rat base = rat_mod(Rat(k * k, 2), 8);
  if (gamma == h1(k) && q == QTag::q_minus_eighth) return base;
  if (gamma == h1(k + 2) && q == QTag::q_three_eighths) return rat_mod(base - 2, 8);
  return std::nullopt;
}

}  // namespace floppy

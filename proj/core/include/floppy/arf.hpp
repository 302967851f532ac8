#pragma once

#include <optional>
#include <string>
#include <vector>

#include "floppy/diagram.hpp"
#include "floppy/rational.hpp"

namespace floppy {

// Multiples of the generator g of H1 of the tangent circle bundle (= Z/4).
struct H1Class {
  int coeff = 0;

  bool operator==(const H1Class&) const = default;
};

H1Class h1(long long a);
H1Class operator+(H1Class a, H1Class b);
H1Class operator*(long long s, H1Class a);

// linking form on Z/4: l(ag, bg) = -ab/4 mod 1
Rat linking_form(H1Class a, H1Class b);

enum class QTag { q_minus_eighth, q_three_eighths };

std::string qtag_str(QTag t);
QTag qtag_parse(const std::string& s);

// q(ag) = a^2 * v mod 1 with v = -1/8 or 3/8; refines the linking form.
Rat qform_value(QTag t, H1Class a);

struct SurfaceData {
  long long brown = 0;  // Brown invariant of the surface form, mod 8
  Rat e = 0;            // Euler number e(F)
  Rat lambda = 0;       // total linking of the link
};

struct LinkInstance {
  std::vector<H1Class> classes;        // one per component
  std::vector<std::vector<Rat>> lk;    // symmetric, zero diagonal
  H1Class gamma;
  QTag q = QTag::q_minus_eighth;
  std::optional<SurfaceData> surface;
};

// Symmetry, zero diagonal, and lk(K,K') = l([K],[K']) mod 1.
ValidationReport validate_link(const LinkInstance& L);

// Sum of the component classes; properness needs [L] = 2*gamma.
H1Class total_class(const LinkInstance& L);

// q([K]) + lk(K, L-K)/2 = l([K], gamma) mod 1 for every component.
// Throws when [L] != 2*gamma.
bool is_proper(const LinkInstance& L);

// Arf of a proper triple from spanning-surface data: brown + e/2 - lambda,
// reduced mod 8; the value always lies in (1/2)Z.
Rat arf_eval(const SurfaceData& s);

// Class of the co-orienting lift of a crossing-free decorated curve.
H1Class lplus_class(const CurveDiagram& C);

// The standard line arrangement of degree 2k with e0 thin lines: classes,
// pairwise linking, gamma = kg, q_{-1/8}, and its spanning-surface data.
LinkInstance reference_family(long long k, long long e0);

// Same link, different class/refinement.
LinkInstance with_form(LinkInstance L, H1Class gamma, QTag q);

// The congruence target, when (gamma, q) matches one of the two recognized
// pairs for degree 2k: kg with q_{-1/8} -> k^2/2; (k+2)g with q_{3/8} ->
// k^2/2 - 2. Values mod 8.
std::optional<Rat> required_arf(long long k, H1Class gamma, QTag q);

}  // namespace floppy

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "floppy/diagram.hpp"
#include "floppy/scheme.hpp"

namespace floppy {

enum class Dividing { yes, no, unknown };

std::string dividing_str(Dividing d);
Dividing dividing_parse(const std::string& s);

// A curve candidate: the real diagram plus the global hypotheses that concern
// the complex locus. chi is the Euler characteristic of the curve surface
// with each double point counted once.
struct FloppyCurve {
  CurveDiagram diagram;
  long long m = 2;  // degree, always even; k = m/2
  long long chi = 0;
  long long nu_plus = 0;
  long long nu_minus = 0;
  long long n = 1;  // complex components
  long long c = 1;  // real components
  int epsilon = 0;  // 1 if some complex component has odd degree
  Dividing dividing = Dividing::unknown;
  bool strongly_irreducible = false;
  bool two_irreducible = false;
  std::map<std::string, int> complex_orientation;  // constituent id -> +1/-1, optional
  std::vector<std::string> assumptions;            // unverified hypotheses, echoed in reports

  long long k() const { return m / 2; }
};

struct DerivedCounts {
  long long r_plus = 0, r_minus = 0;
  long long iota_plus = 0, iota_minus = 0;  // isolated points by side of their home face
  long long ell = 0;
  long long nu_plus = 0, nu_minus = 0;

  long long r() const { return r_plus + r_minus; }
  long long iota() const { return iota_plus + iota_minus; }
  long long nu() const { return nu_plus + nu_minus; }
  long long d() const { return 2 * nu() + iota() + r(); }
  long long d_plus() const { return 2 * nu_plus + iota() + r_plus; }  // isolated points are positive
  long long d_minus() const { return 2 * nu_minus + r_minus; }
};

// Needs a colored diagram (the iota split is per side).
DerivedCounts derived_counts(const FloppyCurve& F);

long long delta(const FloppyCurve& F);
long long harnack_h(const FloppyCurve& F);

// Diagram validity plus global consistency: degree agreement, component
// counts, irreducibility flags, and the parity facts every floppy curve
// satisfies (O+/O- even, delta ≡ O± mod 4, delta even, chi ≡ d mod 2).
// Parity checks run only when the diagram is colored.
ValidationReport validate_curve(const FloppyCurve& F);

// Nonsingular model of a scheme: one thick flopless oval per scheme node,
// nested faces, outer face non-orientable and on the '-' side.
FloppyCurve expand_scheme(const SchemeExpr& expr, long long degree);

}  // namespace floppy

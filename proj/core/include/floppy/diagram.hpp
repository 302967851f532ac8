#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace floppy {

// Combinatorial model of an immersed collection of circles in the projective
// plane, with the tangent-framing decorations (thickness, flop marks) needed
// by the obstruction checks.
//
// Cell-complex conventions:
//  * arcs are either closed loops (no endpoints) or run between crossings;
//  * a crossing lists its four arc-ends in cyclic order, opposite ends
//    belonging to the same smooth branch;
//  * each arc has two side slots (0/1); every (arc, slot) appears in exactly
//    one face boundary cycle;
//  * a face's `euler` is the Euler characteristic of the open face
//    (equivalently of its abstract compact closure, corners pulled apart);
//  * the generalized Euler identity counts loop arcs as zero:
//        |crossings| − #(arcs with endpoints) + Σ euler(face) = 1.

enum class Side { plus, minus };

inline Side opposite(Side s) { return s == Side::plus ? Side::minus : Side::plus; }
inline const char* side_str(Side s) { return s == Side::plus ? "+" : "-"; }

// A flop: departure of the curve from the ambient line field, drawn as a cusp
// pointing into `into_face`. Thickness alternates exactly at flops.
struct FlopMark {
  std::string into_face;
  bool operator==(const FlopMark&) const = default;
};

struct Arc {
  std::string id;
  bool closed = false;       // closed loop; `from`/`to` unused
  std::string from, to;      // crossing ids
  bool thick_start = true;   // thickness at `from` (or at the loop basepoint)
  std::vector<FlopMark> flops;  // ordered from `from` to `to`

  bool thick_end() const { return flops.size() % 2 ? !thick_start : thick_start; }
};

// One of the four arc-ends meeting a crossing: (arc, which end).
struct ArcEnd {
  std::string arc;
  int end = 0;  // 0 = `from` end, 1 = `to` end
  bool operator==(const ArcEnd&) const = default;
  auto operator<=>(const ArcEnd&) const = default;
};

struct Crossing {
  std::string id;
  // Cyclic order around the crossing; ends[0]/ends[2] and ends[1]/ends[3] are
  // the two smooth branches. Quadrant q sits between ends[q] and ends[q+1].
  std::array<ArcEnd, 4> ends;
};

struct ConstituentStep {
  std::string arc;
  bool reversed = false;
  bool operator==(const ConstituentStep&) const = default;
};

// One immersed circle: a cyclic arc traversal plus its homological sidedness
// (one-sided = nontrivial in H1(RP^2; Z/2); not derivable from the complex).
struct Constituent {
  std::string id;
  std::vector<ConstituentStep> steps;
  bool one_sided = false;
};

struct ArcIncidence {
  std::string arc;
  int slot = 0;        // which of the arc's two sides faces this region
  bool reversed = false;  // traversal direction of the arc within the cycle
  bool operator==(const ArcIncidence&) const = default;
};

using BoundaryCycle = std::vector<ArcIncidence>;

struct Face {
  std::string id;
  int euler = 1;
  bool orientable = true;
  std::optional<Side> side;
  std::vector<BoundaryCycle> boundary;
};

// Isolated real double point (always a positive double point), sitting in the
// interior of a face. Its starred-side membership follows the face's label.
struct IsolatedPoint {
  std::string id;
  std::string face;
};

// Per-corner flag: whether the reference one-sided curve w separates the two
// local region germs at `vertex`. face_a == face_b marks a non-simple corner
// of a single region.
struct CornerFlag {
  std::string vertex, face_a, face_b;
  bool crosses = false;
};

struct WSpec {
  bool on_curve = false;
  std::string face;  // home face when !on_curve
  std::vector<CornerFlag> corner_flags;
};

struct CurveDiagram {
  int degree = 2;  // even, = 2k
  std::vector<Crossing> crossings;
  std::vector<Arc> arcs;
  std::vector<Constituent> constituents;
  std::vector<Face> faces;
  std::vector<IsolatedPoint> isolated;
  std::optional<WSpec> w;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string joined() const;
};

// Referential integrity, branch/constituent consistency, quadrant coverage,
// flop parity and thickness alternation, the Euler identity, side alternation
// (when colored), even one-sided count.
ValidationReport validate_diagram(const CurveDiagram& d);

// Two-colors the complement regions so labels alternate across every arc.
// Anchor: the face holding w is '−'; otherwise a non-orientable face is '−';
// otherwise the first face is '−'. Throws if alternation is infeasible (the
// constituent set is not null-homologous mod 2). Idempotent.
void color_canonical(CurveDiagram& d);

// Resolved lookups over an immutable diagram.
struct DiagramIndex {
  const CurveDiagram* d = nullptr;
  std::map<std::string, std::size_t> arc_ix, crossing_ix, face_ix, constituent_ix, isolated_ix;
  // (arc, slot) -> face id
  std::map<std::pair<std::string, int>, std::string> side_face;
  // crossing id -> face id at each of the four quadrants
  std::map<std::string, std::array<std::string, 4>> quadrant_face;

  const Arc& arc(const std::string& id) const;
  const Crossing& crossing(const std::string& id) const;
  const Face& face(const std::string& id) const;
};

// Builds lookups; requires a diagram that passed validate_diagram.
DiagramIndex index_diagram(const CurveDiagram& d);

// True when both branches carry equal thickness at the crossing.
bool crossing_positive(const DiagramIndex& ix, const Crossing& v);

struct CrossingCounts {
  long long r_plus = 0, r_minus = 0;
};
CrossingCounts count_crossings(const CurveDiagram& d);

// Isolated points per side label; requires a colored diagram.
struct IsolatedCounts {
  long long in_plus = 0, in_minus = 0;
};
IsolatedCounts count_isolated(const CurveDiagram& d);

// Data of one region of B^{*±} feeding the self-pairing diagonal.
struct RegionProfile {
  std::string face;
  int chi = 0;
  bool orientable = true;
  Side side = Side::plus;
  long long simple_corners = 0;      // s(R)
  long long nonsimple_plain = 0;     // p(R): not crossing w for even k; all for odd k
  long long nonsimple_crossing = 0;  // corners crossing w, kept separately
  long long isolated_points = 0;     // ι(R)
  long long flops_out = 0, flops_in = 0;
  bool relevant = true;  // orientable or k odd

  long long flop_excess() const { return flops_out - flops_in; }  // O(R)
  // 2·⟨R,R⟩ = −4χ + s + 4p + 4ι + 2O
  long long self_pairing_twice(void) const {
    return -4LL * chi + simple_corners + 4 * nonsimple_plain + 4 * isolated_points +
           2 * flop_excess();
  }
};

// Profiles for every face of the colored diagram, sorted by face id
// (length-then-lexicographic, so f2 < f10). k = degree/2 decides corner
// bookkeeping and relevance.
std::vector<RegionProfile> region_profiles(const CurveDiagram& d, int k);

// Corners shared by the closures of two distinct same-side regions, split by
// the w-crossing flag. Symmetric keys (min,max by region order).
struct SharedCorners {
  long long plain = 0;     // not crossing w
  long long crossing = 0;  // crossing w
};
std::map<std::pair<std::string, std::string>, SharedCorners> shared_corner_table(
    const CurveDiagram& d, Side side);

// Euler characteristic of B^side: the closure of the side's starred regions
// plus the isolated points of the opposite starred side (+1 each).
long long chi_side(const CurveDiagram& d, Side side);

// Σ O(R) over the side's faces; O^+ = −O^- on valid diagrams.
long long flop_excess_side(const CurveDiagram& d, Side side);

// Face-adjacency graph in DOT form (debugging aid, not normative output).
std::string dot_dump(const CurveDiagram& d);

// Stable region order used everywhere a region list or matrix is emitted.
bool region_id_less(const std::string& a, const std::string& b);

}  // namespace floppy

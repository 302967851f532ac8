#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "floppy/curve.hpp"

namespace floppy {

enum class AmbientKind { simple, crossing, figure_eight };

std::string ambient_kind_str(AmbientKind k);
AmbientKind ambient_kind_parse(const std::string& s);

// A local replacement of diagram material. Face patches carry no boundary
// cycles: cycles and the constituent partition are rebuilt from the slot and
// quadrant assignments after the splice.
struct FacePatch {
  std::string id;
  int euler = 1;
  bool orientable = true;
  std::optional<Side> side;
};

struct ArcRewriteSpec {
  std::vector<std::string> remove_arcs;
  std::vector<std::string> remove_crossings;
  std::vector<std::string> remove_faces;
  std::vector<Arc> add_arcs;
  std::vector<Crossing> add_crossings;
  std::vector<FacePatch> upsert_faces;
  // face on each slot of every added arc: (arc id, slot) -> face id
  std::map<std::pair<std::string, int>, std::string> slot_faces;
  // quadrant faces of every added crossing
  std::map<std::string, std::array<std::string, 4>> quadrant_faces;
  // which old constituents feed each added arc (naming + one-sided classes)
  std::map<std::string, std::vector<std::string>> arc_heritage;
  std::vector<std::string> assumptions;
};

// Smallest unused "<prefix><n>" over every id namespace of the diagram.
std::string fresh_id(const CurveDiagram& d, const std::string& prefix);

// Recompute all face boundary cycles from slot and quadrant assignments.
void rebuild_boundaries(CurveDiagram& d,
                        const std::map<std::pair<std::string, int>, std::string>& slot_face,
                        const std::map<std::string, std::array<std::string, 4>>& quadrant_face);

// Recompute the constituent partition by walking the arcs through opposite
// crossing ends. Naming and one-sided classes follow the heritage of each
// circle; a one-sided class that cannot be assigned unambiguously throws.
void rebuild_constituents(CurveDiagram& d, const std::vector<Constituent>& old_constituents,
                          const std::map<std::string, std::vector<std::string>>& arc_heritage);

// Smooth a positive crossing. Choice 'A' joins ends (0,1) and (2,3), merging
// the faces of quadrants 1 and 3; choice 'B' joins (1,2) and (3,0), merging
// quadrants 0 and 2. chi drops by one; the double point count drops with it.
FloppyCurve resolve_crossing(const FloppyCurve& F, const std::string& vertex, char choice,
                             std::optional<bool> orientation_compatible = std::nullopt);

// Remove one conjugate pair of non-real double points of the given sign.
FloppyCurve resolve_conjugate_pair(const FloppyCurve& F, Side sign);

// Trade an isolated double point for a small empty oval in the same spot.
FloppyCurve isolated_to_oval(const FloppyCurve& F, const std::string& point);

// Collapse an empty oval back to an isolated double point.
FloppyCurve oval_to_isolated(const FloppyCurve& F, const std::string& constituent);

// Apply a membrane move. simple: no new negative crossings, chi delta 0;
// crossing: no new negative crossings, chi delta -2; figure_eight: exactly
// one new negative crossing, chi delta -2. The field chi is then adjusted by
// the new positive/negative double points. Isolated points and nu are
// untouchable through this op.
FloppyCurve ambient_surgery(const FloppyCurve& F, AmbientKind kind, const ArcRewriteSpec& spec,
                            std::optional<bool> orientation_compatible = std::nullopt);

// Membrane planners. Each returns the rewrite for ambient_surgery; the
// matching kind is simple / crossing / figure_eight respectively.

// Tangency join of two disjoint ovals across a shared region: one new
// positive crossing, the pair becomes a single figure-eight circle.
ArcRewriteSpec plan_join_ovals(const FloppyCurve& F, const std::string& arc_a,
                               const std::string& arc_b);

// Join an empty oval to a circle on the far side of a wall: a corridor
// crossing the wall at two new positive crossings. The two flops ride the
// piece that wraps the source oval and point away from the corridor.
ArcRewriteSpec plan_wall_join(const FloppyCurve& F, const std::string& from_arc,
                              const std::string& wall_arc, const std::string& to_arc);

// Pinch an empty oval into a figure eight: one new negative crossing, one
// flop on each lobe pointing into that lobe.
ArcRewriteSpec plan_figure_eight(const FloppyCurve& F, const std::string& arc);

}  // namespace floppy

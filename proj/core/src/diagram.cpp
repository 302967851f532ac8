#include "floppy/diagram.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace floppy {

std::string ValidationReport::joined() const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v;
  }
  return out;
}

bool region_id_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

namespace {

struct EndRef {
  std::string crossing;  // empty if the end is free (an error elsewhere)
  int position = -1;     // index into Crossing::ends
};

// Where arc ends live: (arc id, end) -> (crossing, position).
std::map<std::pair<std::string, int>, EndRef> end_locations(const CurveDiagram& d) {
  std::map<std::pair<std::string, int>, EndRef> loc;
  for (const auto& v : d.crossings)
    for (int i = 0; i < 4; ++i) loc[{v.ends[i].arc, v.ends[i].end}] = {v.id, i};
  return loc;
}

// Exit of a traversal step: the end the step leaves through.
std::pair<std::string, int> step_exit(const Arc& a, bool reversed) {
  return reversed ? std::make_pair(a.id, 0) : std::make_pair(a.id, 1);
}
std::pair<std::string, int> step_entry(const Arc& a, bool reversed) {
  return reversed ? std::make_pair(a.id, 1) : std::make_pair(a.id, 0);
}

bool step_entry_thick(const Arc& a, bool reversed) {
  return reversed ? a.thick_end() : a.thick_start;
}
bool step_exit_thick(const Arc& a, bool reversed) {
  return reversed ? a.thick_start : a.thick_end();
}

}  // namespace

ValidationReport validate_diagram(const CurveDiagram& d) {
  ValidationReport rep;
  auto bad = [&rep](std::string msg) { rep.violations.push_back(std::move(msg)); };

  if (d.degree < 0 || d.degree % 2 != 0) bad("degree: must be even and >= 0");
  if (d.degree == 0 && (!d.arcs.empty() || !d.crossings.empty() || !d.constituents.empty()))
    bad("degree: 0 is reserved for the empty diagram");

  std::map<std::string, const Arc*> arcs;
  for (const auto& a : d.arcs) {
    if (!arcs.emplace(a.id, &a).second) bad("arc '" + a.id + "': duplicate id");
  }
  std::map<std::string, const Crossing*> crossings;
  for (const auto& v : d.crossings) {
    if (!crossings.emplace(v.id, &v).second) bad("crossing '" + v.id + "': duplicate id");
  }
  std::map<std::string, const Face*> faces;
  for (const auto& f : d.faces) {
    if (!faces.emplace(f.id, &f).second) bad("face '" + f.id + "': duplicate id");
  }

  for (const auto& a : d.arcs) {
    if (!a.closed) {
      if (!crossings.count(a.from)) bad("arc '" + a.id + "': unknown endpoint '" + a.from + "'");
      if (!crossings.count(a.to)) bad("arc '" + a.id + "': unknown endpoint '" + a.to + "'");
    }
  }

  // Crossings: four ends, each the end of a non-closed arc, each end used once.
  std::map<std::pair<std::string, int>, int> end_uses;
  for (const auto& v : d.crossings) {
    for (const auto& e : v.ends) {
      auto it = arcs.find(e.arc);
      if (it == arcs.end()) {
        bad("crossing '" + v.id + "': unknown arc '" + e.arc + "'");
        continue;
      }
      if (it->second->closed) bad("crossing '" + v.id + "': closed arc '" + e.arc + "' has no ends");
      if (e.end != 0 && e.end != 1) bad("crossing '" + v.id + "': end selector out of range");
      end_uses[{e.arc, e.end}]++;
    }
  }
  for (const auto& a : d.arcs) {
    if (a.closed) continue;
    for (int e = 0; e < 2; ++e) {
      int uses = end_uses.count({a.id, e}) ? end_uses[{a.id, e}] : 0;
      if (uses != 1)
        bad("arc '" + a.id + "' end " + std::to_string(e) + ": used " + std::to_string(uses) +
            " times in crossings (want 1)");
    }
  }
  if (!rep.ok()) return rep;  // the remaining checks assume sound references

  auto ends_at = end_locations(d);

  // Constituents partition the arcs into consistent cyclic traversals.
  std::map<std::string, int> arc_claims;
  for (const auto& c : d.constituents) {
    if (c.steps.empty()) {
      bad("constituent '" + c.id + "': empty");
      continue;
    }
    long long flops = 0;
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
      const auto& st = c.steps[i];
      auto ait = arcs.find(st.arc);
      if (ait == arcs.end()) {
        bad("constituent '" + c.id + "': unknown arc '" + st.arc + "'");
        continue;
      }
      arc_claims[st.arc]++;
      const Arc& a = *ait->second;
      flops += static_cast<long long>(a.flops.size());
      if (a.closed && c.steps.size() != 1)
        bad("constituent '" + c.id + "': closed arc '" + a.id + "' in a multi-arc traversal");
      const auto& nx = c.steps[(i + 1) % c.steps.size()];
      auto nit = arcs.find(nx.arc);
      if (nit == arcs.end()) continue;
      const Arc& b = *nit->second;
      if (a.closed) {
        // loop: continuity is thickness closure only
        if (step_exit_thick(a, st.reversed) != step_entry_thick(a, st.reversed))
          bad("constituent '" + c.id + "': thickness fails to close on loop '" + a.id + "'");
        continue;
      }
      auto exit = step_exit(a, st.reversed);
      auto entry = step_entry(b, nx.reversed);
      auto eit = ends_at.find(exit);
      auto fit = ends_at.find(entry);
      if (eit == ends_at.end() || fit == ends_at.end()) continue;  // already reported
      if (eit->second.crossing != fit->second.crossing) {
        bad("constituent '" + c.id + "': steps " + st.arc + "->" + nx.arc +
            " do not meet at one crossing");
        continue;
      }
      if ((eit->second.position + 2) % 4 != fit->second.position)
        bad("constituent '" + c.id + "': steps " + st.arc + "->" + nx.arc +
            " are not opposite ends at '" + eit->second.crossing + "'");
      if (step_exit_thick(a, st.reversed) != step_entry_thick(b, nx.reversed))
        bad("constituent '" + c.id + "': thickness mismatch between '" + st.arc + "' and '" +
            nx.arc + "'");
    }
    if (flops % 2 != 0) bad("constituent '" + c.id + "': odd flop count");
  }
  for (const auto& a : d.arcs) {
    int claims = arc_claims.count(a.id) ? arc_claims[a.id] : 0;
    if (claims != 1)
      bad("arc '" + a.id + "': claimed by " + std::to_string(claims) + " constituent steps (want 1)");
  }

  long long one_sided = 0;
  for (const auto& c : d.constituents)
    if (c.one_sided) ++one_sided;
  if (one_sided % 2 != 0)
    bad("constituents: odd number of one-sided circles (not null-homologous mod 2)");

  // Faces: every (arc, slot) exactly once; corner passages claim quadrants.
  std::map<std::pair<std::string, int>, std::string> slot_claims;
  std::map<std::string, std::array<std::string, 4>> quadrants;
  for (const auto& v : d.crossings) quadrants[v.id] = {"", "", "", ""};
  for (const auto& f : d.faces) {
    if (f.boundary.empty() && !d.arcs.empty())
      bad("face '" + f.id + "': empty boundary in a diagram with arcs");
    for (const auto& cyc : f.boundary) {
      if (cyc.empty()) {
        bad("face '" + f.id + "': empty boundary cycle");
        continue;
      }
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        const auto& inc = cyc[i];
        auto ait = arcs.find(inc.arc);
        if (ait == arcs.end()) {
          bad("face '" + f.id + "': unknown arc '" + inc.arc + "'");
          continue;
        }
        if (inc.slot != 0 && inc.slot != 1) {
          bad("face '" + f.id + "': slot out of range on arc '" + inc.arc + "'");
          continue;
        }
        auto key = std::make_pair(inc.arc, inc.slot);
        if (slot_claims.count(key))
          bad("face '" + f.id + "': side " + std::to_string(inc.slot) + " of arc '" + inc.arc +
              "' already claimed by face '" + slot_claims[key] + "'");
        else
          slot_claims[key] = f.id;
        const Arc& a = *ait->second;
        if (a.closed) {
          if (cyc.size() != 1)
            bad("face '" + f.id + "': loop arc '" + a.id + "' inside a multi-arc cycle");
          continue;
        }
        const auto& nx = cyc[(i + 1) % cyc.size()];
        auto nit = arcs.find(nx.arc);
        if (nit == arcs.end() || nit->second->closed) continue;
        auto exit = step_exit(a, inc.reversed);
        auto entry = step_entry(*nit->second, nx.reversed);
        auto eit = ends_at.find(exit);
        auto fit = ends_at.find(entry);
        if (eit == ends_at.end() || fit == ends_at.end()) continue;
        if (eit->second.crossing != fit->second.crossing) {
          bad("face '" + f.id + "': boundary passage " + inc.arc + "->" + nx.arc +
              " does not stay at one crossing");
          continue;
        }
        int p = eit->second.position, q = fit->second.position;
        int quad;
        if ((p + 1) % 4 == q)
          quad = p;
        else if ((q + 1) % 4 == p)
          quad = q;
        else {
          bad("face '" + f.id + "': boundary passage " + inc.arc + "->" + nx.arc +
              " cuts across crossing '" + eit->second.crossing + "'");
          continue;
        }
        auto& qf = quadrants[eit->second.crossing];
        if (!qf[quad].empty())
          bad("crossing '" + eit->second.crossing + "': quadrant " + std::to_string(quad) +
              " claimed by both '" + qf[quad] + "' and '" + f.id + "'");
        else
          qf[quad] = f.id;
      }
    }
  }
  for (const auto& a : d.arcs)
    for (int s = 0; s < 2; ++s)
      if (!slot_claims.count({a.id, s}))
        bad("arc '" + a.id + "': side " + std::to_string(s) + " not on any face boundary");
  for (auto& [vid, qf] : quadrants)
    for (int q = 0; q < 4; ++q)
      if (qf[q].empty())
        bad("crossing '" + vid + "': quadrant " + std::to_string(q) + " unclaimed");

  // Generalized Euler identity; loop arcs count zero.
  long long open_arcs = 0;
  for (const auto& a : d.arcs)
    if (!a.closed) ++open_arcs;
  long long total = static_cast<long long>(d.crossings.size()) - open_arcs;
  for (const auto& f : d.faces) total += f.euler;
  if (total != 1)
    bad("euler identity: |V| - |open arcs| + sum chi = " + std::to_string(total) + " (want 1)");

  // Side alternation, when colored.
  std::size_t colored = 0;
  for (const auto& f : d.faces)
    if (f.side) ++colored;
  if (colored != 0 && colored != d.faces.size()) bad("faces: partially colored");
  if (colored == d.faces.size() && colored > 0) {
    for (const auto& a : d.arcs) {
      auto it0 = slot_claims.find({a.id, 0});
      auto it1 = slot_claims.find({a.id, 1});
      if (it0 == slot_claims.end() || it1 == slot_claims.end()) continue;
      const Face* f0 = faces[it0->second];
      const Face* f1 = faces[it1->second];
      if (f0->side && f1->side && *f0->side == *f1->side)
        bad("arc '" + a.id + "': both sides labeled '" + side_str(*f0->side) + "'");
    }
  }

  long long nonorientable = 0;
  for (const auto& f : d.faces)
    if (!f.orientable) ++nonorientable;
  if (nonorientable > 1)
    bad("faces: " + std::to_string(nonorientable) +
        " non-orientable regions (the complement of a curve has at most one)");

  std::set<std::string> iso_ids;
  for (const auto& p : d.isolated) {
    if (!iso_ids.insert(p.id).second) bad("isolated '" + p.id + "': duplicate id");
    if (!faces.count(p.face)) bad("isolated '" + p.id + "': unknown face '" + p.face + "'");
  }

  for (const auto& a : d.arcs)
    for (const auto& fl : a.flops) {
      auto it0 = slot_claims.find({a.id, 0});
      auto it1 = slot_claims.find({a.id, 1});
      bool adjacent = (it0 != slot_claims.end() && it0->second == fl.into_face) ||
                      (it1 != slot_claims.end() && it1->second == fl.into_face);
      if (!adjacent)
        bad("arc '" + a.id + "': flop points into '" + fl.into_face +
            "', which is not an adjacent face");
    }

  if (d.w) {
    if (!d.w->on_curve && !faces.count(d.w->face))
      bad("w: unknown home face '" + d.w->face + "'");
    for (const auto& cf : d.w->corner_flags) {
      if (!crossings.count(cf.vertex)) bad("w: corner flag at unknown crossing '" + cf.vertex + "'");
      if (!faces.count(cf.face_a) || !faces.count(cf.face_b))
        bad("w: corner flag references unknown face");
    }
  }

  return rep;
}

void color_canonical(CurveDiagram& d) {
  if (d.faces.empty()) throw std::runtime_error("color: diagram has no faces");

  std::map<std::string, std::size_t> fidx;
  for (std::size_t i = 0; i < d.faces.size(); ++i) fidx[d.faces[i].id] = i;

  // Face adjacency through arcs, from the boundary incidences.
  std::map<std::pair<std::string, int>, std::string> slot_face;
  for (const auto& f : d.faces)
    for (const auto& cyc : f.boundary)
      for (const auto& inc : cyc) slot_face[{inc.arc, inc.slot}] = f.id;
  std::vector<std::vector<std::size_t>> adj(d.faces.size());
  for (const auto& a : d.arcs) {
    auto it0 = slot_face.find({a.id, 0});
    auto it1 = slot_face.find({a.id, 1});
    if (it0 == slot_face.end() || it1 == slot_face.end())
      throw std::runtime_error("color: arc '" + a.id + "' missing a side incidence");
    adj[fidx.at(it0->second)].push_back(fidx.at(it1->second));
    adj[fidx.at(it1->second)].push_back(fidx.at(it0->second));
  }

  // Anchor: w's home face, else a non-orientable face, else the first face.
  std::size_t anchor = 0;
  if (d.w && !d.w->on_curve && fidx.count(d.w->face)) {
    anchor = fidx.at(d.w->face);
  } else {
    bool found = false;
    for (std::size_t i = 0; i < d.faces.size(); ++i)
      if (!d.faces[i].orientable) {
        anchor = i;
        found = true;
        break;
      }
    if (!found) anchor = 0;
  }

  std::vector<int> color(d.faces.size(), -1);
  std::deque<std::size_t> queue;
  color[anchor] = 1;  // 1 = minus
  queue.push_back(anchor);
  while (!queue.empty()) {
    std::size_t f = queue.front();
    queue.pop_front();
    for (std::size_t g : adj[f]) {
      if (color[g] == -1) {
        color[g] = 1 - color[f];
        queue.push_back(g);
      } else if (color[g] == color[f]) {
        throw std::runtime_error(
            "color: side alternation infeasible (constituent set not null-homologous mod 2)");
      }
    }
  }
  for (std::size_t i = 0; i < d.faces.size(); ++i) {
    if (color[i] == -1)
      throw std::runtime_error("color: face '" + d.faces[i].id + "' unreachable (disconnected data)");
    d.faces[i].side = color[i] == 1 ? Side::minus : Side::plus;
  }
}

const Arc& DiagramIndex::arc(const std::string& id) const { return d->arcs[arc_ix.at(id)]; }
const Crossing& DiagramIndex::crossing(const std::string& id) const {
  return d->crossings[crossing_ix.at(id)];
}
const Face& DiagramIndex::face(const std::string& id) const { return d->faces[face_ix.at(id)]; }

DiagramIndex index_diagram(const CurveDiagram& d) {
  DiagramIndex ix;
  ix.d = &d;
  for (std::size_t i = 0; i < d.arcs.size(); ++i) ix.arc_ix[d.arcs[i].id] = i;
  for (std::size_t i = 0; i < d.crossings.size(); ++i) ix.crossing_ix[d.crossings[i].id] = i;
  for (std::size_t i = 0; i < d.faces.size(); ++i) ix.face_ix[d.faces[i].id] = i;
  for (std::size_t i = 0; i < d.constituents.size(); ++i)
    ix.constituent_ix[d.constituents[i].id] = i;
  for (std::size_t i = 0; i < d.isolated.size(); ++i) ix.isolated_ix[d.isolated[i].id] = i;

  for (const auto& f : d.faces)
    for (const auto& cyc : f.boundary)
      for (const auto& inc : cyc) ix.side_face[{inc.arc, inc.slot}] = f.id;

  auto ends_at = end_locations(d);
  for (const auto& v : d.crossings) ix.quadrant_face[v.id] = {"", "", "", ""};
  for (const auto& f : d.faces) {
    for (const auto& cyc : f.boundary) {
      if (cyc.size() == 1 && ix.arc(cyc[0].arc).closed) continue;
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        const Arc& a = ix.arc(cyc[i].arc);
        const auto& nx = cyc[(i + 1) % cyc.size()];
        const Arc& b = ix.arc(nx.arc);
        auto e = ends_at.at(step_exit(a, cyc[i].reversed));
        auto n = ends_at.at(step_entry(b, nx.reversed));
        int quad = (e.position + 1) % 4 == n.position ? e.position : n.position;
        ix.quadrant_face[e.crossing][quad] = f.id;
      }
    }
  }
  return ix;
}

namespace {
bool thickness_at_end(const Arc& a, int end) { return end == 0 ? a.thick_start : a.thick_end(); }
}  // namespace

bool crossing_positive(const DiagramIndex& ix, const Crossing& v) {
  const Arc& a0 = ix.arc(v.ends[0].arc);
  const Arc& a1 = ix.arc(v.ends[1].arc);
  bool branch_a = thickness_at_end(a0, v.ends[0].end);
  bool branch_b = thickness_at_end(a1, v.ends[1].end);
  return branch_a == branch_b;
}

CrossingCounts count_crossings(const CurveDiagram& d) {
  CrossingCounts c;
  auto ix = index_diagram(d);
  for (const auto& v : d.crossings) (crossing_positive(ix, v) ? c.r_plus : c.r_minus)++;
  return c;
}

IsolatedCounts count_isolated(const CurveDiagram& d) {
  IsolatedCounts c;
  std::map<std::string, Side> fs;
  for (const auto& f : d.faces) {
    if (!f.side) throw std::runtime_error("isolated counts: diagram not colored");
    fs[f.id] = *f.side;
  }
  for (const auto& p : d.isolated) (fs.at(p.face) == Side::plus ? c.in_plus : c.in_minus)++;
  return c;
}

namespace {

// Normalized key for a corner flag lookup.
std::map<std::tuple<std::string, std::string, std::string>, bool> flag_table(const CurveDiagram& d) {
  std::map<std::tuple<std::string, std::string, std::string>, bool> t;
  if (!d.w) return t;
  for (const auto& cf : d.w->corner_flags) {
    auto a = cf.face_a, b = cf.face_b;
    if (b < a) std::swap(a, b);
    t[{cf.vertex, a, b}] = cf.crosses;
  }
  return t;
}

bool corner_crosses_w(const std::map<std::tuple<std::string, std::string, std::string>, bool>& t,
                      const std::string& vertex, std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  auto it = t.find({vertex, a, b});
  return it != t.end() && it->second;
}

}  // namespace

std::vector<RegionProfile> region_profiles(const CurveDiagram& d, int k) {
  auto ix = index_diagram(d);
  std::map<std::string, RegionProfile> prof;
  for (const auto& f : d.faces) {
    if (!f.side) throw std::runtime_error("profiles: diagram not colored");
    RegionProfile p;
    p.face = f.id;
    p.chi = f.euler;
    p.orientable = f.orientable;
    p.side = *f.side;
    p.relevant = f.orientable || (k % 2 != 0);
    prof[f.id] = p;
  }
  for (const auto& pt : d.isolated) prof.at(pt.face).isolated_points++;

  for (const auto& a : d.arcs) {
    if (a.flops.empty()) continue;
    const auto& f0 = ix.side_face.at({a.id, 0});
    const auto& f1 = ix.side_face.at({a.id, 1});
    for (const auto& fl : a.flops) {
      const std::string& into = fl.into_face;
      const std::string& outof = into == f0 ? f1 : f0;
      prof.at(into).flops_in++;
      prof.at(outof).flops_out++;
    }
  }

  bool even_k = (k % 2 == 0);
  auto flags = flag_table(d);
  if (even_k && !d.crossings.empty()) {
    bool have_nonsimple = false;
    for (const auto& [vid, qf] : ix.quadrant_face)
      for (int q = 0; q < 2; ++q)
        if (qf[q] == qf[q + 2]) have_nonsimple = true;
    if (have_nonsimple && !d.w)
      throw std::runtime_error("profiles: even k with non-simple corners requires w data");
  }
  for (const auto& [vid, qf] : ix.quadrant_face) {
    // opposite quadrants carry the two same-side germs at the corner
    for (int q = 0; q < 2; ++q) {
      const std::string& fa = qf[q];
      const std::string& fb = qf[q + 2];
      if (fa == fb) {
        bool crosses = corner_crosses_w(flags, vid, fa, fb);
        if (crosses)
          prof.at(fa).nonsimple_crossing++;
        else
          prof.at(fa).nonsimple_plain++;
        if (!even_k && crosses) prof.at(fa).nonsimple_plain++;  // odd k: p counts them all
      } else {
        prof.at(fa).simple_corners++;
        prof.at(fb).simple_corners++;
      }
    }
  }

  std::vector<RegionProfile> out;
  out.reserve(prof.size());
  for (auto& [id, p] : prof) out.push_back(std::move(p));
  std::sort(out.begin(), out.end(),
            [](const RegionProfile& a, const RegionProfile& b) { return region_id_less(a.face, b.face); });
  return out;
}

std::map<std::pair<std::string, std::string>, SharedCorners> shared_corner_table(
    const CurveDiagram& d, Side side) {
  auto ix = index_diagram(d);
  std::map<std::string, Side> fs;
  for (const auto& f : d.faces) {
    if (!f.side) throw std::runtime_error("shared corners: diagram not colored");
    fs[f.id] = *f.side;
  }
  auto flags = flag_table(d);
  std::map<std::pair<std::string, std::string>, SharedCorners> table;
  for (const auto& [vid, qf] : ix.quadrant_face) {
    for (int q = 0; q < 2; ++q) {
      const std::string& fa = qf[q];
      const std::string& fb = qf[q + 2];
      if (fa == fb || fs.at(fa) != side || fs.at(fb) != side) continue;
      auto key = region_id_less(fa, fb) ? std::make_pair(fa, fb) : std::make_pair(fb, fa);
      if (corner_crosses_w(flags, vid, fa, fb))
        table[key].crossing++;
      else
        table[key].plain++;
    }
  }
  return table;
}

long long chi_side(const CurveDiagram& d, Side side) {
  long long chi = 0;
  bool any = false;
  for (const auto& f : d.faces) {
    if (!f.side) throw std::runtime_error("chi_side: diagram not colored");
    if (*f.side == side) {
      chi += f.euler;
      any = true;
    }
  }
  if (any) {
    // closure picks up every arc and crossing (each arc borders both sides)
    for (const auto& a : d.arcs)
      if (!a.closed) --chi;
    chi += static_cast<long long>(d.crossings.size());
  }
  auto iso = count_isolated(d);
  chi += side == Side::plus ? iso.in_minus : iso.in_plus;
  return chi;
}

long long flop_excess_side(const CurveDiagram& d, Side side) {
  auto ix = index_diagram(d);
  std::map<std::string, Side> fs;
  for (const auto& f : d.faces) {
    if (!f.side) throw std::runtime_error("flop excess: diagram not colored");
    fs[f.id] = *f.side;
  }
  long long total = 0;
  for (const auto& a : d.arcs) {
    if (a.flops.empty()) continue;
    const auto& f0 = ix.side_face.at({a.id, 0});
    const auto& f1 = ix.side_face.at({a.id, 1});
    for (const auto& fl : a.flops) {
      const std::string& into = fl.into_face;
      const std::string& outof = into == f0 ? f1 : f0;
      if (fs.at(outof) == side) ++total;   // points out of this side
      if (fs.at(into) == side) --total;    // points into this side
    }
  }
  return total;
}

std::string dot_dump(const CurveDiagram& d) {
  auto ix = index_diagram(d);
  std::ostringstream os;
  os << "graph complement {\n";
  std::vector<std::string> ids;
  for (const auto& f : d.faces) ids.push_back(f.id);
  std::sort(ids.begin(), ids.end(), region_id_less);
  for (const auto& id : ids) {
    const Face& f = ix.face(id);
    os << "  \"" << id << "\" [label=\"" << id << "\\nchi " << f.euler
       << (f.orientable ? "" : ", nonor.") << (f.side ? std::string("\\nside ") + side_str(*f.side) : "")
       << "\"];\n";
  }
  for (const auto& a : d.arcs) {
    auto it0 = ix.side_face.find({a.id, 0});
    auto it1 = ix.side_face.find({a.id, 1});
    if (it0 == ix.side_face.end() || it1 == ix.side_face.end()) continue;
    os << "  \"" << it0->second << "\" -- \"" << it1->second << "\" [label=\"" << a.id << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace floppy

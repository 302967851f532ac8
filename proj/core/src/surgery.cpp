#include "floppy/surgery.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "floppy/curve.hpp"

namespace floppy {

namespace {

struct EndRef {
  std::string crossing;
  int position = -1;
};

std::map<std::pair<std::string, int>, EndRef> end_locations(const CurveDiagram& d) {
  std::map<std::pair<std::string, int>, EndRef> loc;
  for (const auto& v : d.crossings)
    for (int i = 0; i < 4; ++i) loc[{v.ends[i].arc, v.ends[i].end}] = {v.id, i};
  return loc;
}

std::map<std::string, std::string> arc_constituent_map(const CurveDiagram& d) {
  std::map<std::string, std::string> cid;
  for (const auto& c : d.constituents)
    for (const auto& st : c.steps) cid[st.arc] = c.id;
  return cid;
}

// figure-eight results are never dividing; an orientation-incompatible weld
// kills the property; only a compatible weld of a dividing curve keeps it.
Dividing propagate_dividing(Dividing in, std::optional<bool> compatible, bool forces_no) {
  if (forces_no) return Dividing::no;
  if (compatible && !*compatible) return Dividing::no;
  if (in == Dividing::no) return Dividing::no;
  if (in == Dividing::yes && compatible && *compatible) return Dividing::yes;
  return Dividing::unknown;
}

void prune_orientations(FloppyCurve& F) {
  if (F.dividing == Dividing::no) {
    F.complex_orientation.clear();
    return;
  }
  std::set<std::string> ids;
  for (const auto& c : F.diagram.constituents) ids.insert(c.id);
  for (auto it = F.complex_orientation.begin(); it != F.complex_orientation.end();)
    it = ids.count(it->first) ? std::next(it) : F.complex_orientation.erase(it);
}

void require_valid_input(const CurveDiagram& d, const std::string& op) {
  auto rep = validate_diagram(d);
  if (!rep.ok()) throw std::runtime_error(op + ": input diagram invalid: " + rep.joined());
}

void finish_curve(FloppyCurve& out, const std::string& op) {
  prune_orientations(out);
  auto rep = validate_curve(out);
  if (!rep.ok()) throw std::runtime_error(op + ": result fails curve checks: " + rep.joined());
}

long long numeric_suffix(const std::string& id, const std::string& prefix) {
  if (id.size() <= prefix.size() || id.size() > prefix.size() + 12) return -1;
  if (id.compare(0, prefix.size(), prefix) != 0) return -1;
  for (std::size_t i = prefix.size(); i < id.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(id[i]))) return -1;
  return std::stoll(id.substr(prefix.size()));
}

}  // namespace

std::string ambient_kind_str(AmbientKind k) {
  switch (k) {
    case AmbientKind::simple: return "simple";
    case AmbientKind::crossing: return "crossing";
    case AmbientKind::figure_eight: return "figure_eight";
  }
  return "simple";
}

AmbientKind ambient_kind_parse(const std::string& s) {
  if (s == "simple") return AmbientKind::simple;
  if (s == "crossing") return AmbientKind::crossing;
  if (s == "figure_eight") return AmbientKind::figure_eight;
  throw std::runtime_error("unknown membrane kind '" + s + "'");
}

std::string fresh_id(const CurveDiagram& d, const std::string& prefix) {
  long long mx = 0;
  auto scan = [&](const std::string& id) { mx = std::max(mx, numeric_suffix(id, prefix)); };
  for (const auto& a : d.arcs) scan(a.id);
  for (const auto& v : d.crossings) scan(v.id);
  for (const auto& f : d.faces) scan(f.id);
  for (const auto& c : d.constituents) scan(c.id);
  for (const auto& p : d.isolated) scan(p.id);
  return prefix + std::to_string(mx + 1);
}

void rebuild_boundaries(CurveDiagram& d,
                        const std::map<std::pair<std::string, int>, std::string>& slot_face,
                        const std::map<std::string, std::array<std::string, 4>>& quadrant_face) {
  std::map<std::string, Face*> faces;
  for (auto& f : d.faces) {
    f.boundary.clear();
    faces[f.id] = &f;
  }
  std::map<std::string, const Arc*> arcs;
  for (const auto& a : d.arcs) arcs[a.id] = &a;
  std::map<std::string, const Crossing*> xings;
  for (const auto& v : d.crossings) xings[v.id] = &v;
  auto ends_at = end_locations(d);

  std::vector<std::string> ids;
  ids.reserve(d.arcs.size());
  for (const auto& a : d.arcs) ids.push_back(a.id);
  std::sort(ids.begin(), ids.end(), region_id_less);

  auto face_of = [&](const std::string& arc, int slot) -> const std::string& {
    auto it = slot_face.find({arc, slot});
    if (it == slot_face.end())
      throw std::runtime_error("rebuild: arc '" + arc + "' slot " + std::to_string(slot) +
                               " has no region assigned");
    return it->second;
  };

  std::set<std::pair<std::string, int>> visited;
  for (const auto& aid : ids) {
    const Arc& a = *arcs.at(aid);
    for (int s = 0; s < 2; ++s) {
      if (visited.count({aid, s})) continue;
      const std::string& fid = face_of(aid, s);
      auto fit = faces.find(fid);
      if (fit == faces.end()) throw std::runtime_error("rebuild: unknown region '" + fid + "'");
      if (a.closed) {
        visited.insert({aid, s});
        fit->second->boundary.push_back({ArcIncidence{aid, s, false}});
        continue;
      }
      BoundaryCycle cyc;
      std::string ca = aid;
      int cs = s;
      bool rev = false;
      while (true) {
        if (visited.count({ca, cs}))
          throw std::runtime_error("rebuild: region walk revisits arc '" + ca + "'");
        visited.insert({ca, cs});
        cyc.push_back(ArcIncidence{ca, cs, rev});
        int exit_end = rev ? 0 : 1;
        auto lit = ends_at.find({ca, exit_end});
        if (lit == ends_at.end())
          throw std::runtime_error("rebuild: arc '" + ca + "' has a dangling end");
        const EndRef& loc = lit->second;
        auto qit = quadrant_face.find(loc.crossing);
        if (qit == quadrant_face.end())
          throw std::runtime_error("rebuild: crossing '" + loc.crossing +
                                   "' has no quadrant assignment");
        const auto& quads = qit->second;
        int p = loc.position, np;
        if (quads[p] == fid)
          np = (p + 1) % 4;
        else if (quads[(p + 3) % 4] == fid)
          np = (p + 3) % 4;
        else
          throw std::runtime_error("rebuild: region walk stuck at crossing '" + loc.crossing +
                                   "' for region '" + fid + "'");
        const ArcEnd& nx = xings.at(loc.crossing)->ends[np];
        bool nrev = nx.end == 1;
        bool on0 = face_of(nx.arc, 0) == fid;
        bool on1 = face_of(nx.arc, 1) == fid;
        int nslot;
        if (on0 == on1)
          throw std::runtime_error("rebuild: slot of arc '" + nx.arc + "' on region '" + fid +
                                   "' is " + (on0 ? "ambiguous" : "missing"));
        else
          nslot = on0 ? 0 : 1;
        if (nx.arc == aid && nslot == s) {
          if (nrev)
            throw std::runtime_error("rebuild: region walk closes with a direction flip on '" +
                                     aid + "'");
          break;
        }
        ca = nx.arc;
        cs = nslot;
        rev = nrev;
      }
      fit->second->boundary.push_back(std::move(cyc));
    }
  }
}

void rebuild_constituents(CurveDiagram& d, const std::vector<Constituent>& old_constituents,
                          const std::map<std::string, std::vector<std::string>>& arc_heritage) {
  std::map<std::string, const Arc*> arcs;
  for (const auto& a : d.arcs) arcs[a.id] = &a;
  std::map<std::string, const Crossing*> xings;
  for (const auto& v : d.crossings) xings[v.id] = &v;
  auto ends_at = end_locations(d);

  std::map<std::string, bool> old_class;
  for (const auto& c : old_constituents) old_class[c.id] = c.one_sided;

  struct Circle {
    std::vector<ConstituentStep> steps;
    std::vector<std::string> olds;
    std::string anchor;  // smallest arc id on the circle
  };
  std::vector<Circle> circles;
  std::set<std::string> seen;

  std::vector<std::string> ids;
  ids.reserve(d.arcs.size());
  for (const auto& a : d.arcs) ids.push_back(a.id);
  std::sort(ids.begin(), ids.end(), region_id_less);

  for (const auto& aid : ids) {
    if (seen.count(aid)) continue;
    Circle c;
    const Arc& a0 = *arcs.at(aid);
    if (a0.closed) {
      seen.insert(aid);
      c.steps.push_back({aid, false});
    } else {
      std::string cur = aid;
      bool rev = false;
      while (true) {
        seen.insert(cur);
        c.steps.push_back({cur, rev});
        int exit_end = rev ? 0 : 1;
        auto lit = ends_at.find({cur, exit_end});
        if (lit == ends_at.end())
          throw std::runtime_error("constituents: arc '" + cur + "' has a dangling end");
        const EndRef& loc = lit->second;
        const ArcEnd& nx = xings.at(loc.crossing)->ends[(loc.position + 2) % 4];
        bool nrev = nx.end == 1;
        if (nx.arc == aid && !nrev) break;
        if (seen.count(nx.arc))
          throw std::runtime_error("constituents: branch walk re-enters arc '" + nx.arc + "'");
        cur = nx.arc;
        rev = nrev;
      }
    }
    std::set<std::string> olds;
    for (const auto& st : c.steps) {
      auto hit = arc_heritage.find(st.arc);
      if (hit != arc_heritage.end()) olds.insert(hit->second.begin(), hit->second.end());
    }
    c.olds.assign(olds.begin(), olds.end());
    std::sort(c.olds.begin(), c.olds.end(), region_id_less);
    c.anchor = c.steps.front().arc;
    circles.push_back(std::move(c));
  }

  // circles sharing heritage form one naming component
  std::vector<std::size_t> parent(circles.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<std::string, std::vector<std::size_t>> old_to_circles;
  for (std::size_t i = 0; i < circles.size(); ++i)
    for (const auto& o : circles[i].olds) old_to_circles[o].push_back(i);
  for (const auto& [o, members] : old_to_circles)
    for (std::size_t j = 1; j < members.size(); ++j) parent[find(members[0])] = find(members[j]);

  std::map<std::size_t, std::vector<std::size_t>> comps;
  for (std::size_t i = 0; i < circles.size(); ++i) comps[find(i)].push_back(i);

  long long fresh_n = 0;
  for (const auto& c : old_constituents) fresh_n = std::max(fresh_n, numeric_suffix(c.id, "s"));

  std::vector<Constituent> out;
  for (auto& [root, members] : comps) {
    std::sort(members.begin(), members.end(), [&](std::size_t x, std::size_t y) {
      return region_id_less(circles[x].anchor, circles[y].anchor);
    });
    std::set<std::string> oldset;
    for (auto i : members) oldset.insert(circles[i].olds.begin(), circles[i].olds.end());
    std::vector<std::string> olds(oldset.begin(), oldset.end());
    std::sort(olds.begin(), olds.end(), region_id_less);
    bool cls = false;
    for (const auto& o : olds) {
      auto it = old_class.find(o);
      if (it == old_class.end())
        throw std::runtime_error("constituents: heritage names unknown constituent '" + o + "'");
      cls = cls != it->second;
    }
    if (olds.empty()) {
      for (auto i : members)
        out.push_back({"s" + std::to_string(++fresh_n), circles[i].steps, false});
    } else if (members.size() == 1) {
      out.push_back({olds.front(), circles[members[0]].steps, cls});
    } else if (cls) {
      // a one-sided class cannot be split over several circles without a
      // geometric witness; the caller must supply explicit constituents
      throw std::runtime_error("constituents: one-sided class assignment is ambiguous");
    } else if (olds.size() == 1) {
      static const char* suffix = "abcdefghij";
      if (members.size() > 10)
        throw std::runtime_error("constituents: split fan-out exceeds naming range");
      for (std::size_t j = 0; j < members.size(); ++j)
        out.push_back({olds.front() + "." + suffix[j], circles[members[j]].steps, false});
    } else {
      for (std::size_t j = 0; j < members.size(); ++j) {
        std::string name =
            j < olds.size() ? olds[j] : ("s" + std::to_string(++fresh_n));
        out.push_back({std::move(name), circles[members[j]].steps, false});
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Constituent& x, const Constituent& y) { return region_id_less(x.id, y.id); });
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i].id == out[i - 1].id)
      throw std::runtime_error("constituents: derived name collision on '" + out[i].id + "'");
  d.constituents = std::move(out);
}

FloppyCurve resolve_crossing(const FloppyCurve& F, const std::string& vertex, char choice,
                             std::optional<bool> orientation_compatible) {
  if (choice != 'A' && choice != 'B')
    throw std::runtime_error("resolve: smoothing choice must be 'A' or 'B'");
  require_valid_input(F.diagram, "resolve");
  auto ix = index_diagram(F.diagram);
  auto vit = ix.crossing_ix.find(vertex);
  if (vit == ix.crossing_ix.end())
    throw std::runtime_error("resolve: unknown crossing '" + vertex + "'");
  const Crossing& v = F.diagram.crossings[vit->second];
  if (!crossing_positive(ix, v))
    throw std::runtime_error("resolve: crossing '" + vertex +
                             "' is negative; only positive double points smooth");

  std::map<std::pair<std::string, int>, std::pair<std::string, int>> weld;
  auto tie_ends = [&](int i, int j) {
    auto a = std::make_pair(v.ends[i].arc, v.ends[i].end);
    auto b = std::make_pair(v.ends[j].arc, v.ends[j].end);
    weld[a] = b;
    weld[b] = a;
  };
  int qa, qb;
  if (choice == 'A') {
    tie_ends(0, 1);
    tie_ends(2, 3);
    qa = 1;
    qb = 3;
  } else {
    tie_ends(1, 2);
    tie_ends(3, 0);
    qa = 0;
    qb = 2;
  }

  const auto& quads = ix.quadrant_face.at(vertex);
  const std::string fa = quads[qa], fb = quads[qb];
  const Face& face_a = ix.face(fa);
  std::string merged = fa, absorbed;
  int merged_chi = 0;
  bool merged_orient = true;
  if (fa != fb) {
    const Face& face_b = ix.face(fb);
    if (face_a.side && face_b.side && *face_a.side != *face_b.side)
      throw std::runtime_error("resolve: merging regions carry opposite side labels");
    merged = region_id_less(fa, fb) ? fa : fb;
    absorbed = merged == fa ? fb : fa;
    merged_chi = face_a.euler + face_b.euler - 1;
    merged_orient = face_a.orientable && face_b.orientable;
  } else {
    merged_chi = face_a.euler - 1;
    if (!face_a.orientable) {
      merged_orient = false;
    } else {
      bool other_nonor = false;
      for (const auto& f : F.diagram.faces)
        other_nonor = other_nonor || (f.id != fa && !f.orientable);
      if (!other_nonor)
        throw std::runtime_error(
            "resolve: orientability of the self-merged region is ambiguous; rewrite by hand");
      merged_orient = true;
    }
  }
  std::map<std::string, std::string> fremap;
  if (!absorbed.empty()) fremap[absorbed] = merged;
  auto remap = [&](const std::string& f) {
    auto it = fremap.find(f);
    return it == fremap.end() ? f : it->second;
  };

  std::set<std::string> incident_set;
  for (const auto& e : v.ends) incident_set.insert(e.arc);
  std::vector<std::string> incident(incident_set.begin(), incident_set.end());
  std::sort(incident.begin(), incident.end(), region_id_less);

  auto ends_at = end_locations(F.diagram);
  auto at_v = [&](const std::string& a, int e) { return weld.count({a, e}) != 0; };

  struct Piece {
    std::string arc;
    bool reversed;
  };
  struct Chain {
    std::vector<Piece> pieces;
    bool closed = false;
  };
  std::vector<Chain> chains;
  std::set<std::string> consumed;

  for (const auto& aid : incident) {
    for (int e = 0; e < 2 && !consumed.count(aid); ++e) {
      if (at_v(aid, e)) continue;
      Chain ch;
      std::string cur = aid;
      int entry = e;
      while (true) {
        ch.pieces.push_back({cur, entry == 1});
        consumed.insert(cur);
        int ex = 1 - entry;
        if (!at_v(cur, ex)) break;
        auto [nb, ne] = weld.at({cur, ex});
        cur = nb;
        entry = ne;
      }
      chains.push_back(std::move(ch));
    }
  }
  for (const auto& aid : incident) {
    if (consumed.count(aid)) continue;
    Chain ch;
    ch.closed = true;
    std::string cur = aid;
    int entry = 0;
    while (true) {
      ch.pieces.push_back({cur, entry == 1});
      consumed.insert(cur);
      int ex = 1 - entry;
      auto [nb, ne] = weld.at({cur, ex});
      if (nb == aid && ne == 0) break;
      cur = nb;
      entry = ne;
    }
    chains.push_back(std::move(ch));
  }

  auto arc_cid = arc_constituent_map(F.diagram);
  std::map<std::pair<std::string, int>, ArcEnd> end_rewrite;
  std::vector<Arc> fused;
  std::map<std::pair<std::string, int>, std::string> fused_slots;
  std::map<std::string, std::vector<std::string>> heritage;

  for (const auto& ch : chains) {
    const Piece& p0 = ch.pieces.front();
    const Arc& a0 = F.diagram.arcs[ix.arc_ix.at(p0.arc)];
    Arc na;
    na.id = p0.arc;
    na.closed = ch.closed;
    na.thick_start = p0.reversed ? a0.thick_end() : a0.thick_start;
    for (const auto& pc : ch.pieces) {
      const Arc& pa = F.diagram.arcs[ix.arc_ix.at(pc.arc)];
      if (!pc.reversed)
        na.flops.insert(na.flops.end(), pa.flops.begin(), pa.flops.end());
      else
        na.flops.insert(na.flops.end(), pa.flops.rbegin(), pa.flops.rend());
    }
    if (!ch.closed) {
      const Piece& pl = ch.pieces.back();
      int e0 = p0.reversed ? 1 : 0;
      int el = pl.reversed ? 0 : 1;
      na.from = ends_at.at({p0.arc, e0}).crossing;
      na.to = ends_at.at({pl.arc, el}).crossing;
      end_rewrite[{p0.arc, e0}] = ArcEnd{na.id, 0};
      end_rewrite[{pl.arc, el}] = ArcEnd{na.id, 1};
    }
    fused_slots[{na.id, 0}] = ix.side_face.at({p0.arc, p0.reversed ? 1 : 0});
    fused_slots[{na.id, 1}] = ix.side_face.at({p0.arc, p0.reversed ? 0 : 1});
    std::set<std::string> olds;
    for (const auto& pc : ch.pieces) {
      auto it = arc_cid.find(pc.arc);
      if (it != arc_cid.end()) olds.insert(it->second);
    }
    heritage[na.id] = std::vector<std::string>(olds.begin(), olds.end());
    fused.push_back(std::move(na));
  }

  CurveDiagram nd;
  nd.degree = F.diagram.degree;
  for (const auto& a : F.diagram.arcs)
    if (!consumed.count(a.id)) nd.arcs.push_back(a);
  for (auto& a : fused) nd.arcs.push_back(std::move(a));
  for (auto& a : nd.arcs)
    for (auto& fl : a.flops) fl.into_face = remap(fl.into_face);

  for (const auto& x : F.diagram.crossings) {
    if (x.id == vertex) continue;
    Crossing nx = x;
    for (auto& e : nx.ends) {
      auto it = end_rewrite.find({e.arc, e.end});
      if (it != end_rewrite.end()) e = it->second;
    }
    nd.crossings.push_back(std::move(nx));
  }

  for (const auto& f : F.diagram.faces) {
    if (!absorbed.empty() && f.id == absorbed) continue;
    Face nf = f;
    nf.boundary.clear();
    if (nf.id == merged) {
      nf.euler = merged_chi;
      nf.orientable = merged_orient;
    }
    nd.faces.push_back(std::move(nf));
  }

  for (const auto& p : F.diagram.isolated) nd.isolated.push_back({p.id, remap(p.face)});

  if (F.diagram.w) {
    WSpec w = *F.diagram.w;
    w.face = remap(w.face);
    std::vector<CornerFlag> keep;
    for (const auto& cf : w.corner_flags) {
      if (cf.vertex == vertex) continue;
      keep.push_back({cf.vertex, remap(cf.face_a), remap(cf.face_b), cf.crosses});
    }
    w.corner_flags = std::move(keep);
    nd.w = std::move(w);
  }

  std::map<std::pair<std::string, int>, std::string> slots;
  for (const auto& [key, fid] : ix.side_face) {
    if (consumed.count(key.first)) continue;
    slots[key] = remap(fid);
  }
  for (const auto& [key, fid] : fused_slots) slots[key] = remap(fid);

  std::map<std::string, std::array<std::string, 4>> quadmap;
  for (const auto& [vid, qf] : ix.quadrant_face) {
    if (vid == vertex) continue;
    std::array<std::string, 4> q = qf;
    for (auto& f : q) f = remap(f);
    quadmap[vid] = q;
  }

  for (const auto& a : nd.arcs)
    if (!heritage.count(a.id)) {
      auto it = arc_cid.find(a.id);
      heritage[a.id] =
          it == arc_cid.end() ? std::vector<std::string>{} : std::vector<std::string>{it->second};
    }

  rebuild_boundaries(nd, slots, quadmap);
  rebuild_constituents(nd, F.diagram.constituents, heritage);
  auto rep = validate_diagram(nd);
  if (!rep.ok())
    throw std::runtime_error("resolve: smoothing breaks diagram validity: " + rep.joined());

  FloppyCurve out = F;
  out.diagram = std::move(nd);
  out.chi = F.chi - 1;
  out.dividing = propagate_dividing(F.dividing, orientation_compatible, false);
  finish_curve(out, "resolve");
  return out;
}

FloppyCurve resolve_conjugate_pair(const FloppyCurve& F, Side sign) {
  FloppyCurve out = F;
  long long& n = sign == Side::plus ? out.nu_plus : out.nu_minus;
  if (n <= 0)
    throw std::runtime_error(std::string("conjugate: no '") + side_str(sign) +
                             "' conjugate pairs to resolve");
  n -= 1;
  out.chi = F.chi - 2;
  out.dividing = F.dividing == Dividing::yes ? Dividing::yes : Dividing::unknown;
  finish_curve(out, "conjugate");
  return out;
}

FloppyCurve isolated_to_oval(const FloppyCurve& F, const std::string& point) {
  require_valid_input(F.diagram, "isolated_to_oval");
  FloppyCurve out = F;
  CurveDiagram& d = out.diagram;
  auto pit = std::find_if(d.isolated.begin(), d.isolated.end(),
                          [&](const IsolatedPoint& p) { return p.id == point; });
  if (pit == d.isolated.end())
    throw std::runtime_error("isolated_to_oval: unknown point '" + point + "'");
  const std::string home_id = pit->face;
  d.isolated.erase(pit);

  const std::string oid = fresh_id(d, "o");
  const std::string cid = fresh_id(d, "c");
  const std::string did = fresh_id(d, "f");

  Arc o;
  o.id = oid;
  o.closed = true;
  o.thick_start = true;
  d.arcs.push_back(std::move(o));

  Face* home = nullptr;
  for (auto& f : d.faces)
    if (f.id == home_id) home = &f;
  if (!home)
    throw std::runtime_error("isolated_to_oval: point sits in unknown region '" + home_id + "'");
  Face disk;
  disk.id = did;
  disk.euler = 1;
  disk.orientable = true;
  if (home->side) disk.side = opposite(*home->side);
  disk.boundary.push_back({ArcIncidence{oid, 0, false}});
  home->euler -= 1;
  home->boundary.push_back({ArcIncidence{oid, 1, false}});
  d.faces.push_back(std::move(disk));
  d.constituents.push_back({cid, {{oid, false}}, false});

  out.chi = F.chi - 1;
  auto rep = validate_diagram(d);
  if (!rep.ok())
    throw std::runtime_error("isolated_to_oval: result diagram invalid: " + rep.joined());
  finish_curve(out, "isolated_to_oval");
  return out;
}

FloppyCurve oval_to_isolated(const FloppyCurve& F, const std::string& constituent) {
  require_valid_input(F.diagram, "oval_to_isolated");
  auto ix = index_diagram(F.diagram);
  auto cit = ix.constituent_ix.find(constituent);
  if (cit == ix.constituent_ix.end())
    throw std::runtime_error("oval_to_isolated: unknown constituent '" + constituent + "'");
  const Constituent& c = F.diagram.constituents[cit->second];
  if (c.one_sided || c.steps.size() != 1)
    throw std::runtime_error("oval_to_isolated: '" + constituent + "' is not an empty oval");
  const std::string aid = c.steps.front().arc;
  const Arc& a = F.diagram.arcs[ix.arc_ix.at(aid)];
  if (!a.closed || !a.flops.empty())
    throw std::runtime_error("oval_to_isolated: '" + constituent + "' is not an empty oval");

  auto empty_disk = [&](const std::string& fid) {
    const Face& f = ix.face(fid);
    if (f.euler != 1 || !f.orientable) return false;
    if (f.boundary.size() != 1 || f.boundary[0].size() != 1) return false;
    if (f.boundary[0][0].arc != aid) return false;
    for (const auto& p : F.diagram.isolated)
      if (p.face == fid) return false;
    if (F.diagram.w && !F.diagram.w->on_curve && F.diagram.w->face == fid) return false;
    return true;
  };
  const std::string f0 = ix.side_face.at({aid, 0});
  const std::string f1 = ix.side_face.at({aid, 1});
  bool d0 = empty_disk(f0), d1 = empty_disk(f1);
  if (d0 && d1)
    throw std::runtime_error("oval_to_isolated: both sides of '" + constituent +
                             "' are empty disks; the collapse side is ambiguous");
  if (!d0 && !d1)
    throw std::runtime_error("oval_to_isolated: '" + constituent + "' is not an empty oval");
  const std::string disk = d0 ? f0 : f1;
  const std::string outer = d0 ? f1 : f0;

  FloppyCurve out = F;
  CurveDiagram& d = out.diagram;
  std::erase_if(d.arcs, [&](const Arc& x) { return x.id == aid; });
  std::erase_if(d.constituents, [&](const Constituent& x) { return x.id == constituent; });
  std::erase_if(d.faces, [&](const Face& x) { return x.id == disk; });
  for (auto& f : d.faces) {
    if (f.id != outer) continue;
    f.euler += 1;
    std::erase_if(f.boundary,
                  [&](const BoundaryCycle& cy) { return cy.size() == 1 && cy[0].arc == aid; });
  }
  d.isolated.push_back({fresh_id(d, "p"), outer});

  out.chi = F.chi + 1;
  out.complex_orientation.erase(constituent);
  auto rep = validate_diagram(d);
  if (!rep.ok())
    throw std::runtime_error("oval_to_isolated: result diagram invalid: " + rep.joined());
  finish_curve(out, "oval_to_isolated");
  return out;
}

FloppyCurve ambient_surgery(const FloppyCurve& F, AmbientKind kind, const ArcRewriteSpec& spec,
                            std::optional<bool> orientation_compatible) {
  require_valid_input(F.diagram, "membrane");
  auto ix = index_diagram(F.diagram);
  CrossingCounts before = count_crossings(F.diagram);

  std::set<std::string> rm_arcs(spec.remove_arcs.begin(), spec.remove_arcs.end());
  std::set<std::string> rm_x(spec.remove_crossings.begin(), spec.remove_crossings.end());
  std::set<std::string> rm_f(spec.remove_faces.begin(), spec.remove_faces.end());
  for (const auto& id : rm_arcs)
    if (!ix.arc_ix.count(id)) throw std::runtime_error("membrane: removing unknown arc '" + id + "'");
  for (const auto& id : rm_x)
    if (!ix.crossing_ix.count(id))
      throw std::runtime_error("membrane: removing unknown crossing '" + id + "'");
  for (const auto& id : rm_f)
    if (!ix.face_ix.count(id))
      throw std::runtime_error("membrane: removing unknown region '" + id + "'");

  CurveDiagram nd;
  nd.degree = F.diagram.degree;

  std::set<std::string> face_ids;
  for (const auto& f : F.diagram.faces) {
    if (rm_f.count(f.id)) continue;
    Face nf = f;
    nf.boundary.clear();
    face_ids.insert(nf.id);
    nd.faces.push_back(std::move(nf));
  }
  for (const auto& p : spec.upsert_faces) {
    if (rm_f.count(p.id))
      throw std::runtime_error("membrane: region '" + p.id + "' both removed and patched");
    bool found = false;
    for (auto& f : nd.faces) {
      if (f.id != p.id) continue;
      f.euler = p.euler;
      f.orientable = p.orientable;
      if (p.side) f.side = p.side;
      found = true;
    }
    if (!found) {
      Face f;
      f.id = p.id;
      f.euler = p.euler;
      f.orientable = p.orientable;
      f.side = p.side;
      face_ids.insert(f.id);
      nd.faces.push_back(std::move(f));
    }
  }

  std::set<std::string> added_arcs;
  for (const auto& a : F.diagram.arcs)
    if (!rm_arcs.count(a.id)) nd.arcs.push_back(a);
  for (const auto& a : spec.add_arcs) {
    if (rm_arcs.count(a.id))
      throw std::runtime_error("membrane: arc '" + a.id + "' both removed and added");
    for (const auto& e : nd.arcs)
      if (e.id == a.id) throw std::runtime_error("membrane: duplicate arc id '" + a.id + "'");
    added_arcs.insert(a.id);
    nd.arcs.push_back(a);
  }
  std::set<std::string> arc_ids;
  for (const auto& a : nd.arcs) arc_ids.insert(a.id);

  for (const auto& x : F.diagram.crossings)
    if (!rm_x.count(x.id)) nd.crossings.push_back(x);
  for (const auto& x : spec.add_crossings) {
    if (rm_x.count(x.id))
      throw std::runtime_error("membrane: crossing '" + x.id + "' both removed and added");
    bool replaced = false;
    for (auto& e : nd.crossings)
      if (e.id == x.id) {
        e.ends = x.ends;  // refresh a surviving crossing whose strand was re-cut
        replaced = true;
      }
    if (!replaced) nd.crossings.push_back(x);
  }
  for (const auto& x : nd.crossings)
    for (const auto& e : x.ends)
      if (!arc_ids.count(e.arc))
        throw std::runtime_error("membrane: crossing '" + x.id + "' references missing arc '" +
                                 e.arc + "'");
  for (const auto& a : nd.arcs) {
    if (a.closed) continue;
    bool from_ok = false, to_ok = false;
    for (const auto& x : nd.crossings) {
      from_ok = from_ok || x.id == a.from;
      to_ok = to_ok || x.id == a.to;
    }
    if (!from_ok || !to_ok)
      throw std::runtime_error("membrane: arc '" + a.id + "' ends at a missing crossing");
  }

  for (const auto& p : F.diagram.isolated) {
    if (rm_f.count(p.face))
      throw std::runtime_error("membrane: isolated point '" + p.id + "' sits in a removed region");
    nd.isolated.push_back(p);
  }
  if (F.diagram.w) {
    WSpec w = *F.diagram.w;
    if (!w.on_curve && rm_f.count(w.face))
      throw std::runtime_error("membrane: the reference curve's home region was removed");
    std::vector<CornerFlag> keep;
    for (const auto& cf : w.corner_flags) {
      if (rm_x.count(cf.vertex)) continue;
      if (rm_f.count(cf.face_a) || rm_f.count(cf.face_b)) continue;
      keep.push_back(cf);
    }
    w.corner_flags = std::move(keep);
    nd.w = std::move(w);
  }

  std::map<std::pair<std::string, int>, std::string> slots;
  for (const auto& [key, fid] : ix.side_face) {
    if (rm_arcs.count(key.first)) continue;
    if (rm_f.count(fid))
      throw std::runtime_error("membrane: surviving arc '" + key.first +
                               "' borders removed region '" + fid + "'");
    slots[key] = fid;
  }
  for (const auto& [key, fid] : spec.slot_faces) {
    if (!added_arcs.count(key.first))
      throw std::runtime_error("membrane: side assignment for arc '" + key.first +
                               "' which is not added");
    if (!face_ids.count(fid))
      throw std::runtime_error("membrane: side of arc '" + key.first +
                               "' references unknown region '" + fid + "'");
    slots[key] = fid;
  }
  for (const auto& id : added_arcs)
    for (int s = 0; s < 2; ++s)
      if (!slots.count({id, s}))
        throw std::runtime_error("membrane: added arc '" + id + "' is missing a side assignment");

  std::map<std::string, std::array<std::string, 4>> quadmap;
  for (const auto& [vid, qf] : ix.quadrant_face) {
    if (rm_x.count(vid)) continue;
    for (const auto& f : qf)
      if (rm_f.count(f))
        throw std::runtime_error("membrane: surviving crossing '" + vid +
                                 "' touches removed region '" + f + "'");
    quadmap[vid] = qf;
  }
  for (const auto& [vid, qf] : spec.quadrant_faces) {
    for (const auto& f : qf)
      if (!face_ids.count(f))
        throw std::runtime_error("membrane: quadrants of '" + vid +
                                 "' reference unknown region '" + f + "'");
    quadmap[vid] = qf;
  }
  for (const auto& x : nd.crossings)
    if (!quadmap.count(x.id))
      throw std::runtime_error("membrane: crossing '" + x.id + "' is missing quadrant regions");

  auto arc_cid = arc_constituent_map(F.diagram);
  std::map<std::string, std::vector<std::string>> heritage;
  for (const auto& a : nd.arcs) {
    if (added_arcs.count(a.id)) {
      auto hit = spec.arc_heritage.find(a.id);
      heritage[a.id] = hit == spec.arc_heritage.end() ? std::vector<std::string>{} : hit->second;
    } else {
      auto it = arc_cid.find(a.id);
      heritage[a.id] =
          it == arc_cid.end() ? std::vector<std::string>{} : std::vector<std::string>{it->second};
    }
  }

  rebuild_boundaries(nd, slots, quadmap);
  rebuild_constituents(nd, F.diagram.constituents, heritage);
  auto rep = validate_diagram(nd);
  if (!rep.ok()) {
    if (rep.joined().find("thickness") != std::string::npos)
      throw std::runtime_error(
          "membrane: rewrite produces an inadmissible thickness profile (the membrane would be "
          "one-sided): " +
          rep.joined());
    throw std::runtime_error("membrane: rewrite breaks diagram validity: " + rep.joined());
  }

  CrossingCounts after = count_crossings(nd);
  long long dr_plus = after.r_plus - before.r_plus;
  long long dr_minus = after.r_minus - before.r_minus;
  if (dr_plus < 0 || dr_minus < 0)
    throw std::runtime_error("membrane: a membrane move cannot remove double points");
  long long dd = 0;
  switch (kind) {
    case AmbientKind::simple:
      if (dr_minus != 0)
        throw std::runtime_error("membrane: a simple membrane admits no negative crossings");
      dd = 0;
      break;
    case AmbientKind::crossing:
      if (dr_minus != 0)
        throw std::runtime_error(
            "membrane: a crossing membrane admits no negative crossings; use figure_eight");
      dd = -2;
      break;
    case AmbientKind::figure_eight:
      if (dr_minus != 1)
        throw std::runtime_error(
            "membrane: a figure-eight membrane adds exactly one negative crossing");
      if (dr_plus != 0)
        throw std::runtime_error("membrane: a figure-eight membrane adds no positive crossings");
      dd = -2;
      break;
  }

  FloppyCurve out = F;
  out.diagram = std::move(nd);
  out.chi = F.chi + dd + dr_plus - dr_minus;
  out.dividing =
      propagate_dividing(F.dividing, orientation_compatible, kind == AmbientKind::figure_eight);
  for (const auto& a : spec.assumptions) out.assumptions.push_back(a);
  finish_curve(out, "membrane");
  return out;
}

ArcRewriteSpec plan_join_ovals(const FloppyCurve& F, const std::string& arc_a,
                               const std::string& arc_b) {
  require_valid_input(F.diagram, "join");
  if (arc_a == arc_b) throw std::runtime_error("join: need two distinct ovals");
  auto ix = index_diagram(F.diagram);
  for (const auto& id : {arc_a, arc_b})
    if (!ix.arc_ix.count(id)) throw std::runtime_error("join: unknown arc '" + id + "'");
  const Arc& a = F.diagram.arcs[ix.arc_ix.at(arc_a)];
  const Arc& b = F.diagram.arcs[ix.arc_ix.at(arc_b)];
  for (const Arc* p : {&a, &b}) {
    if (!p->closed) throw std::runtime_error("join: arc '" + p->id + "' is not a loop");
    if (!p->flops.empty()) throw std::runtime_error("join: loop '" + p->id + "' carries flops");
  }
  if (a.thick_start != b.thick_start)
    throw std::runtime_error("join: thickness mismatch between the ovals");

  const std::string fa0 = ix.side_face.at({arc_a, 0});
  const std::string fa1 = ix.side_face.at({arc_a, 1});
  const std::string fb0 = ix.side_face.at({arc_b, 0});
  const std::string fb1 = ix.side_face.at({arc_b, 1});
  std::set<std::string> fas{fa0, fa1}, fbs{fb0, fb1}, common;
  std::set_intersection(fas.begin(), fas.end(), fbs.begin(), fbs.end(),
                        std::inserter(common, common.begin()));
  if (common.empty()) throw std::runtime_error("join: the ovals do not border a common region");
  if (common.size() > 1) throw std::runtime_error("join: the ovals share two regions");
  const std::string G = *common.begin();
  const std::string Ia = fa0 == G ? fa1 : fa0;
  const std::string Ib = fb0 == G ? fb1 : fb0;
  if (Ia == Ib || Ia == G || Ib == G)
    throw std::runtime_error("join: the ovals fail to bound distinct inner regions");

  const std::string v = fresh_id(F.diagram, "x");
  const std::string La = arc_a + "a", Lb = arc_b + "a";
  for (const auto& id : {La, Lb})
    if (ix.arc_ix.count(id))
      throw std::runtime_error("join: derived arc id '" + id + "' already exists");

  auto arc_cid = arc_constituent_map(F.diagram);
  ArcRewriteSpec s;
  s.remove_arcs = {arc_a, arc_b};

  Arc la;
  la.id = La;
  la.closed = false;
  la.from = v;
  la.to = v;
  la.thick_start = a.thick_start;
  Arc lb = la;
  lb.id = Lb;
  lb.thick_start = b.thick_start;
  s.add_arcs = {la, lb};

  Crossing x;
  x.id = v;
  x.ends = {ArcEnd{La, 0}, ArcEnd{La, 1}, ArcEnd{Lb, 0}, ArcEnd{Lb, 1}};
  s.add_crossings = {x};
  s.quadrant_faces[v] = {Ia, G, Ib, G};

  s.slot_faces[{La, 0}] = Ia;
  s.slot_faces[{La, 1}] = G;
  s.slot_faces[{Lb, 0}] = Ib;
  s.slot_faces[{Lb, 1}] = G;

  const Face& g = ix.face(G);
  s.upsert_faces = {{G, g.euler + 1, g.orientable, g.side}};
  s.arc_heritage[La] = {arc_cid.at(arc_a)};
  s.arc_heritage[Lb] = {arc_cid.at(arc_b)};
  return s;
}

ArcRewriteSpec plan_wall_join(const FloppyCurve& F, const std::string& from_arc,
                              const std::string& wall_arc, const std::string& to_arc) {
  require_valid_input(F.diagram, "wall join");
  if (from_arc == wall_arc || from_arc == to_arc || wall_arc == to_arc)
    throw std::runtime_error("wall join: the three arcs must be distinct");
  auto ix = index_diagram(F.diagram);
  for (const auto& id : {from_arc, wall_arc, to_arc})
    if (!ix.arc_ix.count(id)) throw std::runtime_error("wall join: unknown arc '" + id + "'");
  const Arc& from = F.diagram.arcs[ix.arc_ix.at(from_arc)];
  const Arc& wall = F.diagram.arcs[ix.arc_ix.at(wall_arc)];
  const Arc& to = F.diagram.arcs[ix.arc_ix.at(to_arc)];
  if (!from.closed) throw std::runtime_error("wall join: source '" + from_arc + "' is not a loop");
  for (const Arc* p : {&from, &wall, &to})
    if (!p->flops.empty())
      throw std::runtime_error("wall join: arc '" + p->id + "' carries flops");
  if (wall.thick_start != from.thick_start || to.thick_start != from.thick_start)
    throw std::runtime_error("wall join: thickness mismatch along the corridor");

  auto empty_disk = [&](const std::string& fid) {
    const Face& f = ix.face(fid);
    if (f.euler != 1 || !f.orientable) return false;
    if (f.boundary.size() != 1 || f.boundary[0].size() != 1) return false;
    if (f.boundary[0][0].arc != from_arc) return false;
    for (const auto& p : F.diagram.isolated)
      if (p.face == fid) return false;
    if (F.diagram.w && !F.diagram.w->on_curve && F.diagram.w->face == fid) return false;
    return true;
  };
  const std::string f0 = ix.side_face.at({from_arc, 0});
  const std::string f1 = ix.side_face.at({from_arc, 1});
  bool d0 = empty_disk(f0), d1 = empty_disk(f1);
  if (d0 && d1)
    throw std::runtime_error("wall join: both sides of '" + from_arc + "' are empty disks");
  if (!d0 && !d1)
    throw std::runtime_error("wall join: source '" + from_arc + "' is not an empty oval");
  const std::string F_in = d0 ? f0 : f1;
  const std::string G_in = d0 ? f1 : f0;

  const std::string w0 = ix.side_face.at({wall_arc, 0});
  const std::string w1 = ix.side_face.at({wall_arc, 1});
  if (w0 == G_in && w1 == G_in)
    throw std::runtime_error("wall join: the wall has the source region on both sides");
  if (w0 != G_in && w1 != G_in)
    throw std::runtime_error("wall join: wall '" + wall_arc +
                             "' does not border the source region");
  const int w_in = w0 == G_in ? 0 : 1;
  const std::string G_out = w_in == 0 ? w1 : w0;

  const std::string t0 = ix.side_face.at({to_arc, 0});
  const std::string t1 = ix.side_face.at({to_arc, 1});
  if (t0 == G_out && t1 == G_out)
    throw std::runtime_error("wall join: target '" + to_arc +
                             "' borders the far region on both sides");
  if (t0 != G_out && t1 != G_out)
    throw std::runtime_error("wall join: target '" + to_arc + "' does not border the far region");
  const int t_out = t0 == G_out ? 0 : 1;
  const std::string F_mid = t_out == 0 ? t1 : t0;
  if (F_mid == G_in)
    throw std::runtime_error("wall join: target backs onto the source region");

  const std::string v1 = fresh_id(F.diagram, "x");
  const std::string v2 = "x" + std::to_string(numeric_suffix(v1, "x") + 1);
  const std::string beta = from_arc + "w";
  const bool T = from.thick_start;

  ArcRewriteSpec s;
  s.remove_arcs = {from_arc, wall_arc, to_arc};
  auto arc_cid = arc_constituent_map(F.diagram);
  const std::string cid_from = arc_cid.at(from_arc);
  const std::string cid_wall = arc_cid.at(wall_arc);
  const std::string cid_to = arc_cid.at(to_arc);

  auto add_arc = [&](const std::string& id, const std::string& vfrom, const std::string& vto,
                     bool thick, std::vector<FlopMark> flops, const std::string& slot0_face,
                     const std::string& slot1_face, const std::string& cid) {
    if (ix.arc_ix.count(id))
      throw std::runtime_error("wall join: derived arc id '" + id + "' already exists");
    Arc n;
    n.id = id;
    n.closed = false;
    n.from = vfrom;
    n.to = vto;
    n.thick_start = thick;
    n.flops = std::move(flops);
    s.add_arcs.push_back(std::move(n));
    s.slot_faces[{id, 0}] = slot0_face;
    s.slot_faces[{id, 1}] = slot1_face;
    s.arc_heritage[id] = {cid};
  };

  // the wrap around the source oval; its two flops point into the source
  // region, leaving a thin stretch between the new crossings
  {
    std::vector<FlopMark> fl = {FlopMark{G_in}, FlopMark{G_in}};
    std::string s0 = F_in, s1 = G_in;
    add_arc(beta, v1, v2, T, std::move(fl), s0, s1, cid_from);
  }

  ArcEnd WS1, WS2, WO1, WO2;  // wall germs: shadow piece / outer pieces at v1, v2
  std::map<std::string, std::vector<std::pair<ArcEnd, ArcEnd>>> end_edits;
  if (wall.closed) {
    const std::string wa = wall_arc + "a", wb = wall_arc + "b";
    add_arc(wa, v1, v2, T, {}, w_in == 0 ? F_in : F_mid, w_in == 0 ? F_mid : F_in, cid_wall);
    add_arc(wb, v2, v1, T, {}, w_in == 0 ? G_in : G_out, w_in == 0 ? G_out : G_in, cid_wall);
    WS1 = {wa, 0};
    WS2 = {wa, 1};
    WO1 = {wb, 1};
    WO2 = {wb, 0};
  } else {
    const std::string wa = wall_arc + "a", wb = wall_arc + "b", wc = wall_arc + "c";
    add_arc(wa, wall.from, v1, T, {}, w_in == 0 ? G_in : G_out, w_in == 0 ? G_out : G_in,
            cid_wall);
    add_arc(wb, v1, v2, T, {}, w_in == 0 ? F_in : F_mid, w_in == 0 ? F_mid : F_in, cid_wall);
    add_arc(wc, v2, wall.to, T, {}, w_in == 0 ? G_in : G_out, w_in == 0 ? G_out : G_in, cid_wall);
    WS1 = {wb, 0};
    WS2 = {wb, 1};
    WO1 = {wa, 1};
    WO2 = {wc, 0};
    end_edits[ix.crossing(wall.from).id].push_back({ArcEnd{wall_arc, 0}, ArcEnd{wa, 0}});
    end_edits[ix.crossing(wall.to).id].push_back({ArcEnd{wall_arc, 1}, ArcEnd{wc, 1}});
  }

  ArcEnd T1, T2;  // target germs at v1, v2
  if (to.closed) {
    const std::string ta = to_arc + "a";
    add_arc(ta, v1, v2, T, {}, t_out == 0 ? G_out : F_mid, t_out == 0 ? F_mid : G_out, cid_to);
    T1 = {ta, 0};
    T2 = {ta, 1};
  } else {
    const std::string ta = to_arc + "a", tb = to_arc + "b";
    add_arc(ta, to.from, v1, T, {}, t_out == 0 ? G_out : F_mid, t_out == 0 ? F_mid : G_out,
            cid_to);
    add_arc(tb, v2, to.to, T, {}, t_out == 0 ? G_out : F_mid, t_out == 0 ? F_mid : G_out, cid_to);
    T1 = {ta, 1};
    T2 = {tb, 0};
    end_edits[ix.crossing(to.from).id].push_back({ArcEnd{to_arc, 0}, ArcEnd{ta, 0}});
    end_edits[ix.crossing(to.to).id].push_back({ArcEnd{to_arc, 1}, ArcEnd{tb, 1}});
  }

  for (const auto& [vid, edits] : end_edits) {
    Crossing nx = ix.crossing(vid);
    for (auto& e : nx.ends)
      for (const auto& [old_end, new_end] : edits)
        if (e == old_end) e = new_end;
    s.add_crossings.push_back(std::move(nx));
  }

  Crossing c1;
  c1.id = v1;
  c1.ends = {ArcEnd{beta, 0}, WS1, T1, WO1};
  Crossing c2;
  c2.id = v2;
  c2.ends = {ArcEnd{beta, 1}, WO2, T2, WS2};
  s.add_crossings.push_back(std::move(c1));
  s.add_crossings.push_back(std::move(c2));
  s.quadrant_faces[v1] = {F_in, F_mid, G_out, G_in};
  s.quadrant_faces[v2] = {G_in, G_out, F_mid, F_in};

  const Face& gi = ix.face(G_in);
  const Face& go = ix.face(G_out);
  s.upsert_faces = {{G_in, gi.euler + 1, gi.orientable, gi.side},
                    {G_out, go.euler + 1, go.orientable, go.side}};
  return s;
}

ArcRewriteSpec plan_figure_eight(const FloppyCurve& F, const std::string& arc) {
  require_valid_input(F.diagram, "figure-eight");
  auto ix = index_diagram(F.diagram);
  if (!ix.arc_ix.count(arc)) throw std::runtime_error("figure-eight: unknown arc '" + arc + "'");
  const Arc& a = F.diagram.arcs[ix.arc_ix.at(arc)];
  if (!a.closed) throw std::runtime_error("figure-eight: arc '" + arc + "' is not a loop");
  if (!a.flops.empty()) throw std::runtime_error("figure-eight: loop '" + arc + "' carries flops");

  auto empty_disk = [&](const std::string& fid) {
    const Face& f = ix.face(fid);
    if (f.euler != 1 || !f.orientable) return false;
    if (f.boundary.size() != 1 || f.boundary[0].size() != 1) return false;
    if (f.boundary[0][0].arc != arc) return false;
    for (const auto& p : F.diagram.isolated)
      if (p.face == fid) return false;
    if (F.diagram.w && !F.diagram.w->on_curve && F.diagram.w->face == fid) return false;
    return true;
  };
  const std::string f0 = ix.side_face.at({arc, 0});
  const std::string f1 = ix.side_face.at({arc, 1});
  bool d0 = empty_disk(f0), d1 = empty_disk(f1);
  if (d0 && d1)
    throw std::runtime_error("figure-eight: both sides of '" + arc +
                             "' are empty disks; the pinch side is ambiguous");
  if (!d0 && !d1)
    throw std::runtime_error("figure-eight: oval '" + arc + "' needs an empty side to pinch");
  const int s_in = d0 ? 0 : 1;
  const std::string I = d0 ? f0 : f1;
  const std::string G = d0 ? f1 : f0;

  const std::string v = fresh_id(F.diagram, "x");
  const std::string l1 = arc + "a", l2 = arc + "b";
  const std::string I2 = I + "b";
  for (const auto& id : {l1, l2})
    if (ix.arc_ix.count(id))
      throw std::runtime_error("figure-eight: derived arc id '" + id + "' already exists");
  if (ix.face_ix.count(I2))
    throw std::runtime_error("figure-eight: derived region id '" + I2 + "' already exists");

  auto arc_cid = arc_constituent_map(F.diagram);
  const bool T = a.thick_start;

  ArcRewriteSpec s;
  s.remove_arcs = {arc};

  Arc A1;
  A1.id = l1;
  A1.closed = false;
  A1.from = v;
  A1.to = v;
  A1.thick_start = T;
  A1.flops = {FlopMark{I}};
  Arc A2 = A1;
  A2.id = l2;
  A2.thick_start = !T;
  A2.flops = {FlopMark{I2}};
  s.add_arcs = {A1, A2};

  Crossing x;
  x.id = v;
  x.ends = {ArcEnd{l1, 1}, ArcEnd{l2, 1}, ArcEnd{l2, 0}, ArcEnd{l1, 0}};
  s.add_crossings = {x};
  s.quadrant_faces[v] = {G, I2, G, I};

  s.slot_faces[{l1, s_in}] = I;
  s.slot_faces[{l1, 1 - s_in}] = G;
  s.slot_faces[{l2, s_in}] = I2;
  s.slot_faces[{l2, 1 - s_in}] = G;

  const Face& fi = ix.face(I);
  FacePatch lobe;
  lobe.id = I2;
  lobe.euler = 1;
  lobe.orientable = true;
  lobe.side = fi.side;
  s.upsert_faces = {lobe};
  s.arc_heritage[l1] = {arc_cid.at(arc)};
  s.arc_heritage[l2] = {arc_cid.at(arc)};
  return s;
}

}  // namespace floppy

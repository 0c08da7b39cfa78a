#include <algorithm>
#include <set>

#include "fiberlink/diagram.hpp"
#include "planar.hpp"

namespace fiberlink {

using detail::Endpoint;
using detail::Planar;
using detail::PlanarCrossing;

namespace {

bool is_loop(const Planar& p, int edge) {
  return std::find(p.loops.begin(), p.loops.end(), edge) != p.loops.end();
}

void require_arc(const LinkDiagram& d, ArcId a) {
  if (a < 1 || a > d.arc_count()) throw IllegalArgument("unknown arc " + std::to_string(a));
}

const std::vector<Side>& face_of(const std::vector<std::vector<Side>>& fs, Side s) {
  for (const auto& f : fs) {
    if (std::find(f.begin(), f.end(), s) != f.end()) return f;
  }
  throw IllegalArgument("arc " + std::to_string(s.arc) + " has no face on that side");
}

void set_slot(Planar& p, Endpoint at, int edge) { p.crossings[at.crossing].edge[at.slot] = edge; }

// Kink with the loop on the left or right of the strand's direction.
void r1_plus(Planar& p, Side side, bool over_first) {
  const int e = side.arc;
  const ComponentId comp = p.label.at(e);
  int tail_piece = e;
  int head_piece = e;
  if (is_loop(p, e)) {
    p.loops.erase(std::find(p.loops.begin(), p.loops.end(), e));
  } else {
    const auto ends = p.ends();
    head_piece = p.fresh(comp);
    set_slot(p, ends.at(e).head, head_piece);
  }
  const int loop = p.fresh(comp);
  PlanarCrossing x;
  if (!side.right) {
    x = over_first ? PlanarCrossing{{loop, tail_piece, head_piece, loop}, 1}
                   : PlanarCrossing{{tail_piece, head_piece, loop, loop}, 3};
  } else {
    x = over_first ? PlanarCrossing{{loop, loop, head_piece, tail_piece}, 3}
                   : PlanarCrossing{{tail_piece, loop, loop, head_piece}, 1};
  }
  p.crossings.push_back(x);
}

void r1_minus(Planar& p, std::size_t index) {
  if (index >= p.crossings.size()) throw IllegalArgument("no crossing " + std::to_string(index));
  const auto ends = p.ends();
  const auto& c = p.crossings[index];
  bool kink = false;
  for (int s = 0; s < 4; ++s) {
    const auto& ee = ends.at(c.edge[s]);
    const int x = static_cast<int>(index);
    if (ee.tail.crossing == x && ee.head.crossing == x &&
        (ee.tail.slot - ee.head.slot + 4) % 2 == 1) {
      kink = true;
    }
  }
  if (!kink) throw IllegalArgument("crossing " + std::to_string(index) + " is not a kink");
  p.remove_crossings({static_cast<int>(index)});
}

// Pushes a finger of `over.arc` across the face it shares with `under.arc`.
void r2_plus(Planar& p, Side over, Side under) {
  const auto fs = p.faces();
  const auto& f = face_of(fs, over);
  if (std::find(f.begin(), f.end(), under) == f.end()) {
    throw IllegalArgument("sides do not bound a common face");
  }
  if (over.arc == under.arc) throw IllegalArgument("R2 needs two distinct arcs");
  const auto ends = p.ends();
  const int e1 = over.arc;
  const int e2 = under.arc;
  const ComponentId c1 = p.label.at(e1);
  const ComponentId c2 = p.label.at(e2);
  // Walking a face keeps it on the right, so a right side is walked along
  // the arc's orientation. "left"/"right" below refer to the local picture
  // with the over-arc on top walked left to right.
  const bool o1 = over.right;
  const bool o2 = under.right;

  const int e1_mid = p.fresh(c1);
  const int e1_new = p.fresh(c1);
  const int e1_left = o1 ? e1 : e1_new;
  const int e1_right = o1 ? e1_new : e1;
  set_slot(p, ends.at(e1).head, e1_new);

  const int e2_mid = p.fresh(c2);
  const int e2_new = p.fresh(c2);
  const int e2_right = o2 ? e2 : e2_new;
  const int e2_left = o2 ? e2_new : e2;
  set_slot(p, ends.at(e2).head, e2_new);

  PlanarCrossing a;
  PlanarCrossing b;
  if (o2) {
    a = {{e2_mid, e1_left, e2_left, e1_mid}, o1 ? 1 : 3};
    b = {{e2_right, e1_right, e2_mid, e1_mid}, o1 ? 3 : 1};
  } else {
    a = {{e2_left, e1_mid, e2_mid, e1_left}, o1 ? 3 : 1};
    b = {{e2_mid, e1_mid, e2_right, e1_right}, o1 ? 1 : 3};
  }
  p.crossings.push_back(a);
  p.crossings.push_back(b);
}

void r2_minus(Planar& p, Side side) {
  const auto fs = p.faces();
  const auto& f = face_of(fs, side);
  if (f.size() != 2 || f[0].arc == f[1].arc) throw IllegalArgument("face is not a bigon");
  const auto ends = p.ends();
  const auto& a = ends.at(f[0].arc);
  const auto& b = ends.at(f[1].arc);
  if (a.tail.crossing == a.head.crossing) throw IllegalArgument("bigon has a single corner");
  auto over_at_both = [&](const detail::EdgeEnds& ee) {
    return ee.tail.slot % 2 == 1 && ee.head.slot % 2 == 1;
  };
  auto under_at_both = [&](const detail::EdgeEnds& ee) {
    return ee.tail.slot % 2 == 0 && ee.head.slot % 2 == 0;
  };
  const bool ok = (over_at_both(a) && under_at_both(b)) || (under_at_both(a) && over_at_both(b));
  if (!ok) throw IllegalArgument("bigon strands alternate; not removable by R2");
  p.remove_crossings({a.tail.crossing, a.head.crossing});
}

void r3(Planar& p, Side side) {
  const auto fs = p.faces();
  const auto& f = face_of(fs, side);
  if (f.size() != 3) throw IllegalArgument("face is not a triangle");
  const auto ends = p.ends();
  std::set<int> corners;
  std::set<int> edges;
  std::array<int, 3> overs{};
  for (int k = 0; k < 3; ++k) {
    const auto& ee = ends.at(f[k].arc);
    corners.insert(ee.tail.crossing);
    corners.insert(ee.head.crossing);
    edges.insert(f[k].arc);
    overs[k] = (ee.tail.slot % 2) + (ee.head.slot % 2);
  }
  if (corners.size() != 3 || edges.size() != 3) throw IllegalArgument("degenerate triangle");
  std::array<int, 3> sorted = overs;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{0, 1, 2}) {
    throw IllegalArgument("triangle strands are cyclically over/under; R3 not possible");
  }
  // Each strand keeps its triangle edge; the outer edges swap ends.
  const auto before = p.crossings;
  for (int k = 0; k < 3; ++k) {
    const int t = f[k].arc;
    const Endpoint tp = ends.at(t).tail;
    const Endpoint tq = ends.at(t).head;
    const int tp_out = (tp.slot + 2) % 4;
    const int tq_out = (tq.slot + 2) % 4;
    p.crossings[tp.crossing].edge[tp.slot] = before[tq.crossing].edge[tq_out];
    p.crossings[tq.crossing].edge[tq.slot] = before[tp.crossing].edge[tp_out];
    p.crossings[tp.crossing].edge[tp_out] = t;
    p.crossings[tq.crossing].edge[tq_out] = t;
  }
}

}  // namespace

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::R1Plus: return "R1+";
    case MoveKind::R1Minus: return "R1-";
    case MoveKind::R2Plus: return "R2+";
    case MoveKind::R2Minus: return "R2-";
    case MoveKind::R3: return "R3";
  }
  return "?";
}

std::vector<std::vector<Side>> faces(const LinkDiagram& d) { return Planar(d).faces(); }

LinkDiagram apply_reidemeister(const LinkDiagram& d, const Move& move) {
  Planar p(d);
  switch (move.kind) {
    case MoveKind::R1Plus:
      require_arc(d, move.side.arc);
      r1_plus(p, move.side, move.over_first);
      break;
    case MoveKind::R1Minus:
      r1_minus(p, move.crossing);
      break;
    case MoveKind::R2Plus:
      require_arc(d, move.side.arc);
      require_arc(d, move.other.arc);
      r2_plus(p, move.side, move.other);
      break;
    case MoveKind::R2Minus:
      require_arc(d, move.side.arc);
      r2_minus(p, move.side);
      break;
    case MoveKind::R3:
      require_arc(d, move.side.arc);
      r3(p, move.side);
      break;
  }
  return p.to_diagram();
}

std::vector<Move> removal_and_slide_sites(const LinkDiagram& d) {
  std::vector<Move> out;
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    const auto& x = d.crossings()[i].arcs;
    // A kink's loop arc occupies two adjacent slots of one crossing.
    bool kink = false;
    for (int s = 0; s < 4; ++s) kink = kink || x[s] == x[(s + 1) % 4];
    if (kink) out.push_back({MoveKind::R1Minus, {}, {}, false, i});
  }
  for (const auto& f : faces(d)) {
    if (f.size() != 2 && f.size() != 3) continue;
    Move m{f.size() == 2 ? MoveKind::R2Minus : MoveKind::R3, f.front(), {}, false, 0};
    try {
      (void)apply_reidemeister(d, m);
      out.push_back(m);
    } catch (const IllegalArgument&) {
    }
  }
  return out;
}

LinkDiagram canonical(const LinkDiagram& d) { return Planar(d).to_diagram(); }

LinkDiagram reverse_component(const LinkDiagram& d, ComponentId c) {
  if (!d.has_component(c)) throw IllegalArgument("unknown component " + std::to_string(c));
  Planar p(d);
  for (auto& x : p.crossings) {
    const bool under = p.label.at(x.edge[0]) == c;
    const bool over = p.label.at(x.edge[1]) == c;
    // Rotating by two slots swaps 1 and 3; reversing the over-strand swaps
    // its in and out slots. Both together leave over_in unchanged.
    if (under) {
      std::rotate(x.edge.begin(), x.edge.begin() + 2, x.edge.end());
      x.over_in = 4 - x.over_in;
    }
    if (over) x.over_in = 4 - x.over_in;
  }
  return p.to_diagram();
}

LinkDiagram permute_components(const LinkDiagram& d, std::span<const ComponentId> order) {
  const int n = d.component_count();
  std::vector<ComponentId> to(n + 1, 0);
  if (static_cast<int>(order.size()) != n) throw IllegalArgument("permutation has wrong length");
  for (int k = 0; k < n; ++k) {
    const ComponentId old = order[k];
    if (!d.has_component(old) || to[old] != 0) throw IllegalArgument("not a permutation of components");
    to[old] = k + 1;
  }
  Planar p(d);
  for (auto& [edge, comp] : p.label) comp = to[comp];
  return p.to_diagram();
}

LinkDiagram mirror(const LinkDiagram& d) {
  Planar p(d);
  for (auto& x : p.crossings) {
    if (x.over_in == 1) {
      std::rotate(x.edge.begin(), x.edge.begin() + 1, x.edge.end());
      x.over_in = 3;
    } else {
      std::rotate(x.edge.begin(), x.edge.begin() + 3, x.edge.end());
      x.over_in = 1;
    }
  }
  return p.to_diagram();
}

LinkDiagram sublink(const LinkDiagram& d, std::span<const ComponentId> keep) {
  if (keep.empty()) throw IllegalArgument("sublink needs at least one component");
  std::set<ComponentId> kept;
  for (ComponentId c : keep) {
    if (!d.has_component(c)) throw IllegalArgument("unknown component " + std::to_string(c));
    kept.insert(c);
  }
  std::vector<ComponentId> drop;
  for (ComponentId c = 1; c <= d.component_count(); ++c) {
    if (!kept.contains(c)) drop.push_back(c);
  }
  Planar p(d);
  std::vector<int> which;
  for (int i = 0; i < static_cast<int>(p.crossings.size()); ++i) {
    const auto& x = p.crossings[i];
    if (!kept.contains(p.label.at(x.edge[0])) || !kept.contains(p.label.at(x.edge[1]))) {
      which.push_back(i);
    }
  }
  p.remove_crossings(which, drop);
  return p.to_diagram();
}

LinkDiagram add_meridian(const LinkDiagram& d, ArcId arc, Sign sign) {
  require_arc(d, arc);
  Planar p(d);
  const ComponentId comp = p.label.at(arc);
  const ComponentId meridian = d.component_count() + 1;
  int e_a = arc;
  int e_b = arc;
  if (is_loop(p, arc)) {
    p.loops.erase(std::find(p.loops.begin(), p.loops.end(), arc));
  } else {
    const auto ends = p.ends();
    e_b = p.fresh(comp);
    set_slot(p, ends.at(arc).head, e_b);
  }
  const int e_mid = p.fresh(comp);
  const int m_up = p.fresh(meridian);
  const int m_low = p.fresh(meridian);
  // Small circle around the arc, crossing it twice: over first, then under.
  if (sign == Sign::Positive) {
    p.crossings.push_back({{e_a, m_low, e_mid, m_up}, 3});
    p.crossings.push_back({{m_low, e_b, m_up, e_mid}, 3});
  } else {
    p.crossings.push_back({{e_a, m_low, e_mid, m_up}, 1});
    p.crossings.push_back({{m_up, e_mid, m_low, e_b}, 1});
  }
  return p.to_diagram();
}

}  // namespace fiberlink

#include "fiberlink/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fiberlink {

namespace {

struct Occurrence {
  std::size_t crossing;
  int slot;
};

struct Analysis {
  std::vector<Violation> violations;
  std::vector<int> over_in;
  std::vector<ComponentId> component_of;
  std::vector<ArcId> successor;
  std::vector<std::vector<ArcId>> components;
};

std::string crossing_name(std::size_t i) { return "crossing " + std::to_string(i + 1); }
std::string arc_name(ArcId a) { return "arc " + std::to_string(a); }

// Walks the cycle of arcs joined through opposite slots of each crossing.
std::vector<ArcId> pairing_cycle(const PdCode& pd,
                                 const std::vector<std::vector<Occurrence>>& occ,
                                 ArcId start) {
  std::vector<ArcId> cycle;
  ArcId arc = start;
  int enter = 0;
  do {
    cycle.push_back(arc);
    const Occurrence& leave = occ[arc][1 - enter];
    const int opposite = (leave.slot + 2) % 4;
    const ArcId next = pd.crossings[leave.crossing].arcs[opposite];
    const auto& next_occ = occ[next];
    enter = (next_occ[0].crossing == leave.crossing && next_occ[0].slot == opposite) ? 0 : 1;
    arc = next;
    if (cycle.size() > occ.size()) break;  // malformed input; caller re-checks
  } while (!(arc == start && enter == 0));
  return cycle;
}

Analysis analyze(const PdCode& pd) {
  Analysis an;
  auto& out = an.violations;

  std::map<ArcId, int> in_crossings;
  std::map<ArcId, int> in_unknots;
  for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
    for (ArcId a : pd.crossings[i].arcs) {
      if (a <= 0) {
        out.push_back({Violation::Kind::ArcRange, crossing_name(i),
                       "arc id " + std::to_string(a) + " is not positive"});
      }
      ++in_crossings[a];
    }
  }
  for (ArcId u : pd.unknots) {
    if (u <= 0) {
      out.push_back({Violation::Kind::ArcRange, arc_name(u), "arc id is not positive"});
    }
    ++in_unknots[u];
  }
  for (auto [a, n] : in_crossings) {
    if (n != 2) {
      out.push_back({Violation::Kind::ArcMultiplicity, arc_name(a),
                     "appears " + std::to_string(n) + " times in crossings, expected 2"});
    }
  }
  for (auto [u, n] : in_unknots) {
    if (n != 1 || in_crossings.contains(u)) {
      out.push_back({Violation::Kind::ArcMultiplicity, arc_name(u),
                     "crossingless component id is used more than once"});
    }
  }
  const int expected = static_cast<int>(2 * pd.crossings.size() + pd.unknots.size());
  int max_id = 0;
  for (auto [a, n] : in_crossings) max_id = std::max(max_id, a);
  for (auto [u, n] : in_unknots) max_id = std::max(max_id, u);
  if (out.empty()) {
    for (ArcId a = 1; a <= std::max(expected, max_id); ++a) {
      if (!in_crossings.contains(a) && !in_unknots.contains(a)) {
        out.push_back({Violation::Kind::ArcRange, arc_name(a), "arc id is missing"});
      }
    }
    if (max_id > expected) {
      out.push_back({Violation::Kind::ArcRange, arc_name(max_id),
                     "arc ids exceed 2*crossings + unknots = " + std::to_string(expected)});
    }
  }
  if (!out.empty()) return an;

  const int n_arcs = expected;
  std::vector<std::vector<Occurrence>> occ(n_arcs + 1);
  for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
    for (int s = 0; s < 4; ++s) occ[pd.crossings[i].arcs[s]].push_back({i, s});
  }

  // Component cycles, ordered by smallest arc id.
  std::vector<std::vector<ArcId>> cycles;
  std::vector<bool> seen(n_arcs + 1, false);
  for (ArcId a = 1; a <= n_arcs; ++a) {
    if (seen[a]) continue;
    if (in_unknots.contains(a)) {
      seen[a] = true;
      cycles.push_back({a});
      continue;
    }
    auto cyc = pairing_cycle(pd, occ, a);
    for (ArcId x : cyc) seen[x] = true;
    cycles.push_back(std::move(cyc));
  }

  an.component_of.assign(n_arcs + 1, 0);
  an.successor.assign(n_arcs + 1, 0);
  bool structure_ok = true;
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    auto sorted = cycles[k];
    std::sort(sorted.begin(), sorted.end());
    const ArcId lo = sorted.front();
    const ArcId hi = sorted.back();
    const bool unique = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    if (!unique || hi - lo + 1 != static_cast<int>(sorted.size())) {
      std::ostringstream msg;
      msg << "component arcs {";
      for (std::size_t j = 0; j < sorted.size(); ++j) msg << (j ? "," : "") << sorted[j];
      msg << "} are not a consecutive run";
      out.push_back({Violation::Kind::NonConsecutive, arc_name(lo), msg.str()});
      structure_ok = false;
      continue;
    }
    if (sorted.size() == 1 && !in_unknots.contains(lo)) {
      out.push_back({Violation::Kind::DegenerateComponent, arc_name(lo),
                     "a component consisting of one arc through a crossing cannot be drawn"});
      structure_ok = false;
      continue;
    }
    std::vector<ArcId> run(sorted.size());
    std::iota(run.begin(), run.end(), lo);
    for (ArcId a : run) {
      an.component_of[a] = static_cast<ComponentId>(k + 1);
      an.successor[a] = (a == hi) ? lo : a + 1;
    }
    an.components.push_back(std::move(run));
  }
  if (!structure_ok) return an;

  auto comp_size = [&](ArcId a) { return an.components[an.component_of[a] - 1].size(); };

  an.over_in.assign(pd.crossings.size(), 0);
  for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
    const auto& x = pd.crossings[i].arcs;
    if (an.successor[x[0]] != x[2]) {
      out.push_back({Violation::Kind::Succession, crossing_name(i),
                     "under-strand runs " + std::to_string(x[0]) + "->" + std::to_string(x[2]) +
                         " but the successor of " + std::to_string(x[0]) + " is " +
                         std::to_string(an.successor[x[0]])});
    }
    if (comp_size(x[1]) >= 3 || an.component_of[x[1]] != an.component_of[x[3]]) {
      if (an.successor[x[1]] == x[3]) {
        an.over_in[i] = 1;
      } else if (an.successor[x[3]] == x[1]) {
        an.over_in[i] = 3;
      } else {
        out.push_back({Violation::Kind::Succession, crossing_name(i),
                       "over-strand arcs " + std::to_string(x[1]) + " and " +
                           std::to_string(x[3]) + " are not consecutive on their component"});
      }
    }
  }

  // Two-arc components: the numbering alone cannot tell which of the two
  // junctions is lo->hi, so use the junction kinds.
  for (const auto& comp : an.components) {
    if (comp.size() != 2) continue;
    const ArcId lo = comp[0];
    struct Junction {
      std::size_t crossing;
      bool under;
    };
    std::vector<Junction> js;
    for (const auto& o : occ[lo]) js.push_back({o.crossing, o.slot % 2 == 0});
    if (js[0].crossing == js[1].crossing && js[0].under == js[1].under) {
      out.push_back({Violation::Kind::Succession, crossing_name(js[0].crossing),
                     "both arcs of a two-arc component meet in one strand"});
      continue;
    }
    auto head_of = [&](const Junction& j) -> std::optional<ArcId> {
      if (j.under) return pd.crossings[j.crossing].arcs[0];
      return std::nullopt;
    };
    auto h0 = head_of(js[0]);
    auto h1 = head_of(js[1]);
    ArcId head0;
    if (h0 && h1) {
      if (*h0 == *h1) {
        out.push_back({Violation::Kind::Succession, crossing_name(js[1].crossing),
                       "arc " + std::to_string(*h0) + " enters two crossings as under-strand"});
        continue;
      }
      head0 = *h0;
    } else if (h0) {
      head0 = *h0;
    } else if (h1) {
      head0 = (*h1 == lo) ? lo + 1 : lo;
    } else {
      const ArcId u0 = pd.crossings[js[0].crossing].arcs[0];
      const ArcId u1 = pd.crossings[js[1].crossing].arcs[0];
      head0 = (u0 < u1) ? lo : lo + 1;
    }
    for (int k = 0; k < 2; ++k) {
      if (js[k].under) continue;
      const ArcId head = (k == 0) ? head0 : (head0 == lo ? lo + 1 : lo);
      const auto& x = pd.crossings[js[k].crossing].arcs;
      an.over_in[js[k].crossing] = (x[1] == head) ? 1 : 3;
    }
  }
  if (!out.empty()) return an;

  // Planar diagrams cross each pair of components an even number of times.
  const std::size_t n = an.components.size();
  std::vector<std::vector<int>> sums(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
    const auto& x = pd.crossings[i].arcs;
    const int cu = an.component_of[x[0]] - 1;
    const int co = an.component_of[x[an.over_in[i]]] - 1;
    if (cu != co) {
      const int s = an.over_in[i] == 3 ? 1 : -1;
      sums[cu][co] += s;
      sums[co][cu] += s;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (sums[i][j] % 2 != 0) {
        out.push_back({Violation::Kind::OddLinkingSum,
                       "components " + std::to_string(i + 1) + "," + std::to_string(j + 1),
                       "signed crossing sum " + std::to_string(sums[i][j]) + " is odd"});
      }
    }
  }
  return an;
}

std::string summarize(const std::vector<Violation>& vs) {
  std::string s = "invalid diagram:";
  for (const auto& v : vs) s += " [" + to_string(v.kind) + " at " + v.where + ": " + v.message + "]";
  return s;
}

}  // namespace

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::ArcMultiplicity: return "arc-multiplicity";
    case Violation::Kind::ArcRange: return "arc-range";
    case Violation::Kind::NonConsecutive: return "non-consecutive";
    case Violation::Kind::Succession: return "succession";
    case Violation::Kind::DegenerateComponent: return "degenerate-component";
    case Violation::Kind::OddLinkingSum: return "odd-linking-sum";
  }
  return "unknown";
}

InvalidDiagram::InvalidDiagram(std::vector<Violation> violations)
    : std::runtime_error(summarize(violations)), violations_(std::move(violations)) {}

std::vector<Violation> validate(const PdCode& pd) { return analyze(pd).violations; }

LinkDiagram LinkDiagram::from_pd(PdCode pd) {
  Analysis an = analyze(pd);
  if (!an.violations.empty()) throw InvalidDiagram(std::move(an.violations));
  LinkDiagram d;
  d.pd_ = std::move(pd);
  d.over_in_ = std::move(an.over_in);
  d.component_of_ = std::move(an.component_of);
  d.successor_ = std::move(an.successor);
  d.components_ = std::move(an.components);
  return d;
}

ComponentId LinkDiagram::component_of(ArcId arc) const {
  if (arc < 1 || arc > arc_count()) throw IllegalArgument("unknown arc " + std::to_string(arc));
  return component_of_[arc];
}

ArcId LinkDiagram::successor(ArcId arc) const {
  if (arc < 1 || arc > arc_count()) throw IllegalArgument("unknown arc " + std::to_string(arc));
  return successor_[arc];
}

const std::vector<ArcId>& LinkDiagram::component_arcs(ComponentId c) const {
  if (!has_component(c)) throw IllegalArgument("unknown component " + std::to_string(c));
  return components_[c - 1];
}

bool LinkDiagram::is_crossingless(ComponentId c) const {
  const auto& arcs = component_arcs(c);
  return arcs.size() == 1;
}

Sign LinkDiagram::sign(std::size_t i) const {
  return over_in_.at(i) == 3 ? Sign::Positive : Sign::Negative;
}

ComponentId LinkDiagram::under_component(std::size_t i) const {
  return component_of_[pd_.crossings.at(i).arcs[0]];
}

ComponentId LinkDiagram::over_component(std::size_t i) const {
  return component_of_[pd_.crossings.at(i).arcs[over_in_.at(i)]];
}

Sign crossing_sign(const LinkDiagram& d, std::size_t crossing) { return d.sign(crossing); }

LinkDiagram split_union(const LinkDiagram& a, const LinkDiagram& b) {
  PdCode pd = a.pd();
  const int shift = a.arc_count();
  for (Crossing x : b.pd().crossings) {
    for (ArcId& id : x.arcs) id += shift;
    pd.crossings.push_back(x);
  }
  for (ArcId u : b.pd().unknots) pd.unknots.push_back(u + shift);
  return LinkDiagram::from_pd(std::move(pd));
}

}  // namespace fiberlink

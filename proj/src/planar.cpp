#include "planar.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fiberlink::detail {

Planar::Planar(const LinkDiagram& d) {
  const auto xs = d.crossings();
  crossings.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    crossings.push_back({xs[i].arcs, d.over_in_slot(i)});
  }
  loops = d.pd().unknots;
  for (ArcId a = 1; a <= d.arc_count(); ++a) label[a] = d.component_of(a);
  next_id_ = d.arc_count() + 1;
}

std::map<int, EdgeEnds> Planar::ends() const {
  std::map<int, EdgeEnds> out;
  for (int x = 0; x < static_cast<int>(crossings.size()); ++x) {
    const auto& c = crossings[x];
    for (int s = 0; s < 4; ++s) {
      auto& e = out[c.edge[s]];
      if (c.is_in(s)) {
        e.head = {x, s};
      } else {
        e.tail = {x, s};
      }
    }
  }
  return out;
}

std::vector<std::vector<Side>> Planar::faces() const {
  const auto e = ends();
  std::vector<std::array<bool, 4>> seen(crossings.size(), {false, false, false, false});
  std::vector<std::vector<Side>> out;
  for (int x = 0; x < static_cast<int>(crossings.size()); ++x) {
    for (int s = 0; s < 4; ++s) {
      if (seen[x][s]) continue;
      std::vector<Side> face;
      Endpoint p{x, s};
      while (!seen[p.crossing][p.slot]) {
        seen[p.crossing][p.slot] = true;
        const int edge = crossings[p.crossing].edge[p.slot];
        const EdgeEnds& ee = e.at(edge);
        const bool from_tail = ee.tail.crossing == p.crossing && ee.tail.slot == p.slot;
        const Endpoint q = from_tail ? ee.head : ee.tail;
        face.push_back({edge, from_tail});
        p = {q.crossing, (q.slot + 1) % 4};
      }
      out.push_back(std::move(face));
    }
  }
  return out;
}

namespace {

struct UnionFind {
  std::map<int, int> parent;

  int find(int a) {
    auto it = parent.find(a);
    if (it == parent.end()) {
      parent[a] = a;
      return a;
    }
    if (it->second == a) return a;
    const int root = find(it->second);
    parent[a] = root;
    return root;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

}  // namespace

void Planar::remove_crossings(const std::vector<int>& which, const std::vector<ComponentId>& drop) {
  const std::set<int> gone(which.begin(), which.end());
  const std::set<ComponentId> dropped(drop.begin(), drop.end());
  UnionFind uf;
  for (int x : gone) {
    const auto& c = crossings.at(x);
    const std::array<std::array<int, 2>, 2> passes{{{0, 2}, {c.over_in, c.over_out()}}};
    for (auto [in, out] : passes) {
      if (dropped.contains(label.at(c.edge[in]))) continue;
      uf.unite(c.edge[in], c.edge[out]);
    }
  }

  std::vector<PlanarCrossing> kept;
  std::set<ComponentId> touching;
  for (int x = 0; x < static_cast<int>(crossings.size()); ++x) {
    if (gone.contains(x)) continue;
    PlanarCrossing c = crossings[x];
    for (int& id : c.edge) {
      if (dropped.contains(label.at(id))) {
        throw std::logic_error("kept crossing touches a dropped component");
      }
      id = uf.find(id);
      touching.insert(label.at(id));
    }
    kept.push_back(c);
  }

  std::map<int, ComponentId> relabel;
  std::vector<int> new_loops;
  for (int u : loops) {
    if (!dropped.contains(label.at(u))) {
      new_loops.push_back(u);
      relabel[u] = label.at(u);
    }
  }
  for (const auto& c : kept) {
    for (int id : c.edge) relabel[id] = label.at(id);
  }
  // Components whose every crossing was removed become crossingless.
  std::map<ComponentId, int> orphan;
  for (auto [id, comp] : label) {
    if (dropped.contains(comp) || touching.contains(comp)) continue;
    if (std::find(loops.begin(), loops.end(), id) != loops.end()) continue;
    const int root = uf.find(id);
    auto [it, fresh] = orphan.emplace(comp, root);
    if (!fresh) it->second = std::min(it->second, root);
  }
  for (auto [comp, id] : orphan) {
    new_loops.push_back(id);
    relabel[id] = comp;
  }
  crossings = std::move(kept);
  loops = std::move(new_loops);
  label = std::move(relabel);
}

LinkDiagram Planar::to_diagram() const {
  const auto e = ends();
  auto next_edge = [&](int edge) {
    const Endpoint h = e.at(edge).head;
    return crossings[h.crossing].edge[(h.slot + 2) % 4];
  };

  std::map<ComponentId, std::vector<int>> by_label;
  for (auto [id, comp] : label) by_label[comp].push_back(id);
  const std::set<int> loop_set(loops.begin(), loops.end());

  std::map<int, int> renumber;
  struct Ambiguous {
    int first_id;
    std::array<int, 2> edges;
  };
  std::vector<Ambiguous> ambiguous;
  int counter = 1;
  for (const auto& [comp, ids] : by_label) {
    const int start = *std::min_element(ids.begin(), ids.end());
    if (loop_set.contains(start)) {
      if (ids.size() != 1) throw std::logic_error("crossingless component with several edges");
      renumber[start] = counter++;
      continue;
    }
    std::vector<int> order;
    int cur = start;
    do {
      order.push_back(cur);
      cur = next_edge(cur);
      if (order.size() > ids.size()) throw std::logic_error("component traversal does not close");
    } while (cur != start);
    if (order.size() != ids.size()) throw std::logic_error("component label spans several cycles");
    const bool all_over = std::all_of(order.begin(), order.end(),
                                      [&](int id) { return e.at(id).head.slot % 2 == 1; });
    if (order.size() == 2 && all_over) {
      ambiguous.push_back({counter, {order[0], order[1]}});
      counter += 2;
      continue;
    }
    for (int id : order) renumber[id] = counter++;
  }
  for (const auto& amb : ambiguous) {
    auto under_in_at_head = [&](int edge) {
      const Endpoint h = e.at(edge).head;
      return renumber.at(crossings[h.crossing].edge[0]);
    };
    const bool keep = under_in_at_head(amb.edges[0]) < under_in_at_head(amb.edges[1]);
    renumber[amb.edges[keep ? 0 : 1]] = amb.first_id;
    renumber[amb.edges[keep ? 1 : 0]] = amb.first_id + 1;
  }

  std::vector<std::pair<Crossing, int>> rows;
  rows.reserve(crossings.size());
  for (const auto& c : crossings) {
    Crossing x;
    for (int s = 0; s < 4; ++s) x.arcs[s] = renumber.at(c.edge[s]);
    rows.push_back({x, c.over_in});
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first.arcs[0] < b.first.arcs[0]; });
  PdCode pd;
  for (const auto& [x, over] : rows) pd.crossings.push_back(x);
  for (int u : loops) pd.unknots.push_back(renumber.at(u));
  std::sort(pd.unknots.begin(), pd.unknots.end());

  LinkDiagram d = LinkDiagram::from_pd(std::move(pd));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (d.over_in_slot(i) != rows[i].second) {
      throw std::logic_error("canonical numbering does not reproduce strand directions");
    }
  }
  return d;
}

}  // namespace fiberlink::detail

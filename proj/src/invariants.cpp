#include "fiberlink/invariants.hpp"

#include <stdexcept>

namespace fiberlink {

std::size_t LinkingMatrix::index(ComponentId i, ComponentId j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) throw IllegalArgument("linking matrix index out of range");
  return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
}

int LinkingMatrix::row_sum(ComponentId i) const {
  int s = 0;
  for (ComponentId j = 1; j <= n_; ++j) {
    if (j != i) s += (*this)(i, j);
  }
  return s;
}

LinkingMatrix linking_matrix(const LinkDiagram& d) {
  const int n = d.component_count();
  LinkingMatrix lk(n);
  LinkingMatrix twice(n);
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    const ComponentId u = d.under_component(i);
    const ComponentId o = d.over_component(i);
    const int s = value(d.sign(i));
    if (u == o) {
      lk.at(u, u) += s;
    } else {
      twice.at(u, o) += s;
      twice.at(o, u) += s;
    }
  }
  for (ComponentId i = 1; i <= n; ++i) {
    for (ComponentId j = 1; j <= n; ++j) {
      if (i == j) continue;
      // Guaranteed even by validation.
      if (twice(i, j) % 2 != 0) throw std::logic_error("odd inter-component crossing sum");
      lk.at(i, j) = twice(i, j) / 2;
    }
  }
  return lk;
}

int self_crossing_count(const LinkDiagram& d, ComponentId c) {
  if (!d.has_component(c)) throw IllegalArgument("unknown component " + std::to_string(c));
  int count = 0;
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    if (d.under_component(i) == c && d.over_component(i) == c) ++count;
  }
  return count;
}

SeifertData seifert(const LinkDiagram& d) {
  // Smoothing joins each incoming arc to the outgoing arc of the other strand.
  const int n = d.arc_count();
  std::vector<ArcId> next(n + 1, 0);
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    const auto& x = d.crossings()[i].arcs;
    const int over_in = d.over_in_slot(i);
    next[x[0]] = x[4 - over_in];
    next[x[over_in]] = x[2];
  }
  int circles = 0;
  std::vector<bool> seen(n + 1, false);
  for (ArcId a = 1; a <= n; ++a) {
    if (seen[a]) continue;
    ++circles;
    if (next[a] == 0) {  // crossingless component
      seen[a] = true;
      continue;
    }
    for (ArcId cur = a; !seen[cur]; cur = next[cur]) seen[cur] = true;
  }
  const int c = static_cast<int>(d.crossing_count());
  return {circles, c, circles - c};
}

std::int64_t hopf_invariant(const FramedLink& fl) {
  const LinkingMatrix lk = linking_matrix(fl.diagram());
  std::int64_t h = 0;
  for (ComponentId i = 1; i <= lk.size(); ++i) {
    h += fl.framing(i);
    h += lk.row_sum(i);
  }
  return h;
}

bool is_framed_null_cobordant(const FramedLink& fl) { return hopf_invariant(fl) == 0; }

}  // namespace fiberlink

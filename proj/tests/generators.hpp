#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "fiberlink/invariants.hpp"
#include "fiberlink/random_diagrams.hpp"
#include "fiberlink/scene.hpp"

namespace gen {

using fiberlink::ComponentId;
using fiberlink::Framing;
using fiberlink::LinkDiagram;
using fiberlink::Rng;

inline std::vector<ComponentId> random_permutation(int n, Rng& rng) {
  std::vector<ComponentId> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Random diagram with a random subset of components reversed.
inline LinkDiagram diagram(Rng& rng, int max_moves = 50, std::size_t max_crossings = 60) {
  LinkDiagram d = fiberlink::random_diagram(rng, max_moves, max_crossings);
  std::bernoulli_distribution flip(0.3);
  for (ComponentId c = 1; c <= d.component_count(); ++c) {
    if (flip(rng)) d = fiberlink::reverse_component(d, c);
  }
  return d;
}

/// Roles with at least one fiber; fiber framings chosen so that the fiber
/// sublink is null-cobordant. Labels in the result refer to `d`.
inline fiberlink::LabeledScene scene(const LinkDiagram& d, Rng& rng) {
  const int n = d.component_count();
  std::bernoulli_distribution singular(0.4);
  std::map<ComponentId, fiberlink::Role> roles;
  std::vector<ComponentId> fibers;
  for (ComponentId c = 1; c <= n; ++c) {
    const bool s = singular(rng) && !(c == n && fibers.empty());
    roles[c] = s ? fiberlink::Role::Singular : fiberlink::Role::Fiber;
    if (!s) fibers.push_back(c);
  }
  const fiberlink::FramedLink sub =
      fiberlink::null_cobordant_framing(fiberlink::sublink(d, fibers), rng);
  std::map<ComponentId, Framing> framings;
  for (std::size_t k = 0; k < fibers.size(); ++k) framings[fibers[k]] = sub.framings()[k];
  return fiberlink::LabeledScene(d, roles, framings);
}

}  // namespace gen

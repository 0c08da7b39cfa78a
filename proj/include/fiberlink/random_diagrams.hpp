#pragma once

#include <random>
#include <string>
#include <vector>

#include "fiberlink/diagram.hpp"
#include "fiberlink/scene.hpp"

namespace fiberlink {

using Rng = std::mt19937_64;

struct NamedDiagram {
  std::string name;
  LinkDiagram diagram;
};

/// Small standard diagrams used as starting points: unknot, two-component
/// unlink, Hopf link, trefoil, figure-eight, (2,4) torus link, 3-chain and a
/// trefoil with a split unknot.
std::vector<NamedDiagram> seed_diagrams();

/// Applies one uniformly chosen legal Reidemeister move. Moves that would
/// push the crossing count above `max_crossings` are not chosen.
LinkDiagram random_move(const LinkDiagram& d, Rng& rng, std::size_t max_crossings);

LinkDiagram scramble(LinkDiagram d, Rng& rng, int moves, std::size_t max_crossings);

/// A seed diagram followed by 1..max_moves random moves.
LinkDiagram random_diagram(Rng& rng, int max_moves = 50, std::size_t max_crossings = 60);

/// Random framings in [-6, 6] with the first component adjusted so that the
/// Hopf invariant vanishes.
FramedLink null_cobordant_framing(const LinkDiagram& d, Rng& rng);

}  // namespace fiberlink

#include "fiberlink/random_diagrams.hpp"

#include <algorithm>

#include "fiberlink/invariants.hpp"

namespace fiberlink {

namespace {

template <class T>
const T& pick(const std::vector<T>& v, Rng& rng) {
  std::uniform_int_distribution<std::size_t> dist(0, v.size() - 1);
  return v[dist(rng)];
}

bool coin(Rng& rng) { return std::bernoulli_distribution(0.5)(rng); }

std::optional<LinkDiagram> try_r1_plus(const LinkDiagram& d, Rng& rng) {
  if (d.arc_count() == 0) return std::nullopt;
  std::uniform_int_distribution<ArcId> arc(1, d.arc_count());
  return apply_reidemeister(d, {MoveKind::R1Plus, {arc(rng), coin(rng)}, {}, coin(rng), 0});
}

std::optional<LinkDiagram> try_r2_plus(const LinkDiagram& d, Rng& rng) {
  auto fs = faces(d);
  std::erase_if(fs, [](const auto& f) {
    return std::none_of(f.begin(), f.end(), [&](const Side& s) { return s.arc != f.front().arc; });
  });
  if (fs.empty()) return std::nullopt;
  const auto& f = pick(fs, rng);
  std::uniform_int_distribution<std::size_t> idx(0, f.size() - 1);
  for (int attempt = 0; attempt < 16; ++attempt) {
    const Side a = f[idx(rng)];
    const Side b = f[idx(rng)];
    if (a.arc == b.arc) continue;
    return apply_reidemeister(d, {MoveKind::R2Plus, a, b, false, 0});
  }
  return std::nullopt;
}

std::optional<LinkDiagram> try_reducing(const LinkDiagram& d, MoveKind kind, Rng& rng) {
  if (kind == MoveKind::R1Minus) {
    std::vector<std::size_t> kinks;
    for (std::size_t i = 0; i < d.crossing_count(); ++i) {
      const auto& x = d.crossings()[i].arcs;
      for (int s = 0; s < 4; ++s) {
        if (x[s] == x[(s + 1) % 4]) {
          kinks.push_back(i);
          break;
        }
      }
    }
    if (kinks.empty()) return std::nullopt;
    return apply_reidemeister(d, {MoveKind::R1Minus, {}, {}, false, pick(kinks, rng)});
  }
  const std::size_t want = kind == MoveKind::R2Minus ? 2 : 3;
  auto fs = faces(d);
  std::erase_if(fs, [&](const auto& f) { return f.size() != want; });
  std::shuffle(fs.begin(), fs.end(), rng);
  for (const auto& f : fs) {
    try {
      return apply_reidemeister(d, {kind, f.front(), {}, false, 0});
    } catch (const IllegalArgument&) {
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<NamedDiagram> seed_diagrams() {
  std::vector<NamedDiagram> out;
  auto pd = [](std::string_view text) { return parse_diagram(text); };
  const LinkDiagram unknot = pd("U 1");
  const LinkDiagram hopf = pd("X 1 3 2 4 / X 3 1 4 2");
  const LinkDiagram trefoil = pd("X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3");
  out.push_back({"unknot", unknot});
  out.push_back({"unlink2", pd("U 1 / U 2")});
  out.push_back({"hopf", hopf});
  out.push_back({"trefoil", trefoil});
  out.push_back({"figure_eight", pd("X 4 2 5 1 / X 8 6 1 5 / X 6 3 7 4 / X 2 7 3 8")});
  out.push_back({"torus_2_4", pd("X 6 1 7 2 / X 8 3 5 4 / X 2 5 3 6 / X 4 7 1 8")});
  out.push_back({"chain3", add_meridian(hopf, hopf.component_arcs(2).front(), Sign::Positive)});
  out.push_back({"trefoil_u", split_union(trefoil, unknot)});
  return out;
}

LinkDiagram random_move(const LinkDiagram& d, Rng& rng, std::size_t max_crossings) {
  std::vector<MoveKind> kinds{MoveKind::R1Minus, MoveKind::R2Minus, MoveKind::R3, MoveKind::R3};
  if (d.crossing_count() + 1 <= max_crossings) kinds.push_back(MoveKind::R1Plus);
  if (d.crossing_count() + 2 <= max_crossings) {
    kinds.push_back(MoveKind::R2Plus);
    kinds.push_back(MoveKind::R2Plus);
  }
  std::shuffle(kinds.begin(), kinds.end(), rng);
  for (MoveKind k : kinds) {
    std::optional<LinkDiagram> next;
    switch (k) {
      case MoveKind::R1Plus: next = try_r1_plus(d, rng); break;
      case MoveKind::R2Plus: next = try_r2_plus(d, rng); break;
      default: next = try_reducing(d, k, rng); break;
    }
    if (next) return *next;
  }
  return d;
}

LinkDiagram scramble(LinkDiagram d, Rng& rng, int moves, std::size_t max_crossings) {
  for (int i = 0; i < moves; ++i) d = random_move(d, rng, max_crossings);
  return d;
}

LinkDiagram random_diagram(Rng& rng, int max_moves, std::size_t max_crossings) {
  static const std::vector<NamedDiagram> seeds = seed_diagrams();
  std::uniform_int_distribution<int> moves(1, max_moves);
  return scramble(pick(seeds, rng).diagram, rng, moves(rng), max_crossings);
}

FramedLink null_cobordant_framing(const LinkDiagram& d, Rng& rng) {
  std::uniform_int_distribution<Framing> f(-6, 6);
  std::vector<Framing> fs(d.component_count());
  for (auto& v : fs) v = f(rng);
  if (!fs.empty()) {
    const std::int64_t h = hopf_invariant(FramedLink(d, fs));
    fs[0] -= h;
  }
  return FramedLink(d, std::move(fs));
}

}  // namespace fiberlink

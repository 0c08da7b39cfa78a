#include <doctest.h>

#include "fiberlink/invariants.hpp"
#include "fiberlink/obstruction.hpp"
#include "fiberlink/random_diagrams.hpp"

using namespace fiberlink;

TEST_CASE("framing parity") {
  const LinkDiagram u = parse_diagram("U 1");
  CHECK(framing_parity(FramedLink(u, {0}), 1) == 1);
  CHECK(framing_parity(FramedLink(u, {1}), 1) == 0);
  CHECK(framing_parity(FramedLink(u, {-1}), 1) == 0);
  CHECK(framing_parity(FramedLink(u, {-2}), 1) == 1);
  // a knotted diagram does not change the rule
  const LinkDiagram t = parse_diagram("X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3");
  CHECK(framing_parity(FramedLink(t, {0}), 1) == 1);
  CHECK(framing_parity(FramedLink(t, {3}), 1) == 0);
}

TEST_CASE("obstruction vector of the unit examples") {
  const LinkDiagram u = parse_diagram("U 1");
  const ObstructionVector a = obstruction_vector(FramedLink(u, {0}));
  CHECK(a.a == std::vector<int>{1});
  CHECK_FALSE(a.vanishes());
  CHECK(a.total_parity() == 1);

  const LinkDiagram hr = reverse_component(parse_diagram("X 1 3 2 4 / X 3 1 4 2"), 2);
  const ObstructionVector b = obstruction_vector(FramedLink(hr, {1, 1}));
  CHECK(b.a == std::vector<int>{0, 0});
  CHECK(b.vanishes());
  CHECK(b.at(2) == 0);
}

TEST_CASE("parity identity on small examples") {
  const LinkDiagram u = parse_diagram("U 1");
  CHECK(parity_identity_check(FramedLink(u, {0})) == ParityCheck::Holds);
  CHECK(parity_identity_check(FramedLink(u, {1})) == ParityCheck::NotApplicable);
  const LinkDiagram hr = reverse_component(parse_diagram("X 1 3 2 4 / X 3 1 4 2"), 2);
  CHECK(parity_identity_check(FramedLink(hr, {1, 1})) == ParityCheck::Holds);
  CHECK(parity_identity_check(FramedLink(hr, {2, 0})) == ParityCheck::Holds);
  CHECK(to_string(ParityCheck::Violated) == "violated");
}

TEST_CASE("framing change flips one entry") {
  const LinkDiagram u = parse_diagram("U 1 / U 2");
  const FramedLink fl(u, {0, 0});
  const FramingChange odd = framing_change_delta(fl, 1, 1);
  CHECK(odd.delta == 1);
  CHECK(odd.vector.a == std::vector<int>{0, 1});
  CHECK(odd.hopf_invariant == 1);
  CHECK_FALSE(odd.null_cobordant);
  CHECK_FALSE(odd.warning.empty());
  const FramingChange even = framing_change_delta(fl, 2, -2);
  CHECK(even.delta == 0);
  CHECK(even.vector.a == std::vector<int>{1, 1});
  CHECK_FALSE(even.null_cobordant);
  const FramingChange none = framing_change_delta(FramedLink(u, {1, -1}), 2, -1);
  CHECK(none.null_cobordant);
  CHECK(none.warning.empty());
}

TEST_CASE("parity identity holds on random null-cobordant links") {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const FramedLink fl = null_cobordant_framing(random_diagram(rng, 20, 30), rng);
    REQUIRE(is_framed_null_cobordant(fl));
    CHECK(parity_identity_check(fl) == ParityCheck::Holds);
  }
}

TEST_CASE("reframing by one changes a single parity") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const FramedLink fl = null_cobordant_framing(random_diagram(rng, 10, 20), rng);
    const ComponentId c = 1 + static_cast<int>(rng() % fl.component_count());
    const auto before = obstruction_vector(fl);
    const auto ch = framing_change_delta(fl, c, fl.framing(c) + 1);
    for (ComponentId k = 1; k <= fl.component_count(); ++k) {
      CHECK(ch.vector.at(k) == (k == c ? 1 - before.at(k) : before.at(k)));
    }
    CHECK(ch.hopf_invariant == 1);
  }
}

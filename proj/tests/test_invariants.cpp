#include <doctest.h>

#include "fiberlink/invariants.hpp"
#include "fiberlink/random_diagrams.hpp"
#include "fiberlink/scene.hpp"
#include "oracle.hpp"

using namespace fiberlink;

namespace {

LinkDiagram seed(const std::string& name) {
  for (auto& s : seed_diagrams()) {
    if (s.name == name) return s.diagram;
  }
  throw std::runtime_error("no seed " + name);
}

}  // namespace

TEST_CASE("linking matrices of the seeds") {
  const auto hopf = linking_matrix(seed("hopf"));
  CHECK(hopf(1, 2) == 1);
  CHECK(hopf(2, 1) == 1);
  CHECK(hopf(1, 1) == 0);
  CHECK(linking_matrix(seed("trefoil"))(1, 1) == -3);
  CHECK(linking_matrix(seed("figure_eight"))(1, 1) == 0);
  CHECK(linking_matrix(seed("torus_2_4"))(1, 2) == -2);
  const auto chain = linking_matrix(seed("chain3"));
  CHECK(chain(1, 2) == 1);
  CHECK(chain(2, 3) == 1);
  CHECK(chain(1, 3) == 0);
  CHECK(chain.row_sum(2) == 2);
  CHECK(linking_matrix(seed("unlink2"))(1, 2) == 0);
}

TEST_CASE("self-crossing counts") {
  CHECK(self_crossing_count(seed("trefoil"), 1) == 3);
  CHECK(self_crossing_count(seed("figure_eight"), 1) == 4);
  CHECK(self_crossing_count(seed("hopf"), 1) == 0);
  CHECK(self_crossing_count(seed("trefoil_u"), 2) == 0);
}

TEST_CASE("seifert data of the seeds") {
  struct Row {
    const char* name;
    int circles;
    int crossings;
    int chi;
  };
  for (const Row& r : {Row{"unknot", 1, 0, 1}, Row{"unlink2", 2, 0, 2}, Row{"hopf", 2, 2, 0},
                       Row{"trefoil", 2, 3, -1}, Row{"figure_eight", 3, 4, -1},
                       Row{"torus_2_4", 4, 4, 0}, Row{"chain3", 3, 4, -1},
                       Row{"trefoil_u", 3, 3, 0}}) {
    CAPTURE(r.name);
    const SeifertData s = seifert(seed(r.name));
    CHECK(s.circle_count == r.circles);
    CHECK(s.crossing_count == r.crossings);
    CHECK(s.euler_characteristic == r.chi);
    CHECK(s.circle_count == oracle::seifert_circles(seed(r.name).pd()));
  }
}

TEST_CASE("hopf invariant") {
  const LinkDiagram u = parse_diagram("U 1");
  CHECK(hopf_invariant(FramedLink(u, {0})) == 0);
  CHECK(hopf_invariant(FramedLink(u, {1})) == 1);
  CHECK(hopf_invariant(FramedLink(u, {-4})) == -4);
  const LinkDiagram h = seed("hopf");
  CHECK(hopf_invariant(FramedLink(h, {0, 0})) == 2);
  const LinkDiagram hr = reverse_component(h, 2);
  CHECK(hopf_invariant(FramedLink(hr, {1, 1})) == 0);
  CHECK(is_framed_null_cobordant(FramedLink(hr, {1, 1})));
  CHECK_FALSE(is_framed_null_cobordant(FramedLink(h, {1, 1})));
  CHECK(hopf_invariant(FramedLink(parse_diagram(""), {})) == 0);
}

TEST_CASE("hopf invariant adds over split unions") {
  Rng rng(3);
  std::uniform_int_distribution<Framing> f(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const LinkDiagram a = random_diagram(rng, 10, 20);
    const LinkDiagram b = random_diagram(rng, 10, 20);
    std::vector<Framing> fa(a.component_count()), fb(b.component_count());
    for (auto& v : fa) v = f(rng);
    for (auto& v : fb) v = f(rng);
    std::vector<Framing> both = fa;
    both.insert(both.end(), fb.begin(), fb.end());
    CHECK(hopf_invariant(FramedLink(split_union(a, b), both)) ==
          hopf_invariant(FramedLink(a, fa)) + hopf_invariant(FramedLink(b, fb)));
  }
}

TEST_CASE("framed link rejects a wrong framing count") {
  CHECK_THROWS_AS(FramedLink(parse_diagram("U 1"), {}), SceneError);
  CHECK_THROWS_AS(FramedLink(parse_diagram("U 1"), {0}).framing(2), IllegalArgument);
}

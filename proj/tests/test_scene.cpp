#include <doctest.h>

#include "fiberlink/scene.hpp"

using namespace fiberlink;

TEST_CASE("framing and role records") {
  const DiagramFile f = parse_file("X 1 3 2 4\nX 3 1 4 2\nF 1 -2\nF 2 5\nR 1 fiber\nR 2 singular\n");
  CHECK(f.framings.at(1) == -2);
  CHECK(f.framings.at(2) == 5);
  CHECK(f.roles.at(2) == Role::Singular);
  CHECK(parse_file(serialize(f)).framings == f.framings);
  CHECK(serialize(parse_file(serialize(f))) == serialize(f));
}

TEST_CASE("record errors") {
  CHECK_THROWS_AS(parse_file("U 1\nF 2 0\n"), ParseError);
  CHECK_THROWS_AS(parse_file("U 1\nF 1 0\nF 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_file("U 1\nR 1 fibre\n"), ParseError);
  CHECK_THROWS_AS(parse_file("U 1\nR 1 singular 2\n"), ParseError);
  CHECK_THROWS_AS(parse_file("U 1\nF 1\n"), ParseError);
  CHECK_THROWS_AS(parse_file("U 1\nF 1 x\n"), ParseError);
}

TEST_CASE("framed_link needs every framing") {
  CHECK_THROWS_AS(framed_link(parse_file("U 1 / U 2 / F 1 0")), SceneError);
  CHECK(framed_link(parse_file("U 1 / U 2 / F 1 0 / F 2 3")).framing(2) == 3);
}

TEST_CASE("labeled scene consistency") {
  CHECK_THROWS_AS(labeled_scene(parse_file("U 1 / U 2 / F 1 0 / R 1 fiber")), SceneError);
  CHECK_THROWS_AS(labeled_scene(parse_file("U 1 / U 2 / R 1 fiber / R 2 singular")), SceneError);
  CHECK_THROWS_AS(labeled_scene(parse_file("U 1 / U 2 / F 1 0 / F 2 0 / R 1 fiber / R 2 singular")),
                  SceneError);
  const LabeledScene s = labeled_scene(parse_file("U 1 / U 2 / U 3 / F 1 0 / F 3 1 / R 1 fiber 2 / R 2 singular / R 3 fiber"));
  CHECK(s.fibers() == std::vector<ComponentId>{1, 3});
  CHECK(s.singular() == std::vector<ComponentId>{2});
  CHECK(s.group(1) == 2);
  CHECK(s.group(3) == 1);
  CHECK(s.fiber_link().framings() == std::vector<Framing>{0, 1});
  CHECK(serialize(s.to_file()) == serialize(parse_file(serialize(s.to_file()))));
}

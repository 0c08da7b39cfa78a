#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fiberlink/diagram.hpp"

namespace fiberlink {

using Framing = std::int64_t;

enum class Role { Fiber, Singular };

std::string to_string(Role role);

/// Everything a diagram file can carry: the diagram itself plus optional
/// framing (F) and role (R) records keyed by component label.
struct DiagramFile {
  LinkDiagram diagram;
  std::map<ComponentId, Framing> framings;
  std::map<ComponentId, Role> roles;
  std::map<ComponentId, int> groups;  // optional regular-value group of a fiber component
};

/// Parses X, U, F and R records. Throws ParseError (syntax, unknown
/// component, duplicate F/R line) or InvalidDiagram.
DiagramFile parse_file(std::string_view text);

/// Canonical text: X lines, U lines, then F and R lines in label order.
std::string serialize(const DiagramFile& file);

/// Missing or inconsistent framing/role data for the requested view.
class SceneError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A diagram with one framing integer per component (linking number of the
/// component with its framed push-off).
class FramedLink {
 public:
  FramedLink(LinkDiagram diagram, std::vector<Framing> framings);

  const LinkDiagram& diagram() const noexcept { return diagram_; }
  Framing framing(ComponentId c) const;
  const std::vector<Framing>& framings() const noexcept { return framings_; }
  int component_count() const noexcept { return diagram_.component_count(); }

  FramedLink with_framing(ComponentId c, Framing f) const;

 private:
  LinkDiagram diagram_;
  std::vector<Framing> framings_;
};

/// Requires an F line for every component.
FramedLink framed_link(const DiagramFile& file);

/// A diagram whose components are split into an oriented, framed fiber link
/// and an unoriented singular-set candidate.
class LabeledScene {
 public:
  LabeledScene(LinkDiagram diagram, std::map<ComponentId, Role> roles,
               std::map<ComponentId, Framing> framings, std::map<ComponentId, int> groups = {});

  const LinkDiagram& diagram() const noexcept { return diagram_; }
  Role role(ComponentId c) const { return roles_.at(c); }
  const std::vector<ComponentId>& fibers() const noexcept { return fibers_; }
  const std::vector<ComponentId>& singular() const noexcept { return singular_; }
  Framing framing(ComponentId fiber) const;
  int group(ComponentId fiber) const;

  /// The fiber components as a framed link, in label order. Labels are
  /// renumbered 1..k by sublink.
  FramedLink fiber_link() const;

  DiagramFile to_file() const;

 private:
  LinkDiagram diagram_;
  std::map<ComponentId, Role> roles_;
  std::map<ComponentId, Framing> framings_;
  std::map<ComponentId, int> groups_;
  std::vector<ComponentId> fibers_;
  std::vector<ComponentId> singular_;
};

/// Requires an R line for every component and F lines exactly on fibers.
LabeledScene labeled_scene(const DiagramFile& file);

}  // namespace fiberlink

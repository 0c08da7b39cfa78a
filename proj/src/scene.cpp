#include "fiberlink/scene.hpp"

namespace fiberlink {

FramedLink::FramedLink(LinkDiagram diagram, std::vector<Framing> framings)
    : diagram_(std::move(diagram)), framings_(std::move(framings)) {
  if (static_cast<int>(framings_.size()) != diagram_.component_count()) {
    throw SceneError("framed link needs one framing per component: " +
                     std::to_string(diagram_.component_count()) + " components, " +
                     std::to_string(framings_.size()) + " framings");
  }
}

Framing FramedLink::framing(ComponentId c) const {
  if (!diagram_.has_component(c)) throw IllegalArgument("unknown component " + std::to_string(c));
  return framings_[c - 1];
}

FramedLink FramedLink::with_framing(ComponentId c, Framing f) const {
  if (!diagram_.has_component(c)) throw IllegalArgument("unknown component " + std::to_string(c));
  auto fs = framings_;
  fs[c - 1] = f;
  return FramedLink(diagram_, std::move(fs));
}

FramedLink framed_link(const DiagramFile& file) {
  std::vector<Framing> fs;
  for (ComponentId c = 1; c <= file.diagram.component_count(); ++c) {
    auto it = file.framings.find(c);
    if (it == file.framings.end()) {
      throw SceneError("missing framing (F line) for component " + std::to_string(c));
    }
    fs.push_back(it->second);
  }
  return FramedLink(file.diagram, std::move(fs));
}

LabeledScene::LabeledScene(LinkDiagram diagram, std::map<ComponentId, Role> roles,
                           std::map<ComponentId, Framing> framings,
                           std::map<ComponentId, int> groups)
    : diagram_(std::move(diagram)),
      roles_(std::move(roles)),
      framings_(std::move(framings)),
      groups_(std::move(groups)) {
  for (ComponentId c = 1; c <= diagram_.component_count(); ++c) {
    auto it = roles_.find(c);
    if (it == roles_.end()) throw SceneError("missing role (R line) for component " + std::to_string(c));
    (it->second == Role::Fiber ? fibers_ : singular_).push_back(c);
    const bool framed = framings_.contains(c);
    if (it->second == Role::Fiber && !framed) {
      throw SceneError("missing framing (F line) for fiber component " + std::to_string(c));
    }
    if (it->second == Role::Singular && framed) {
      throw SceneError("singular component " + std::to_string(c) + " must not carry a framing");
    }
  }
  if (roles_.size() != static_cast<std::size_t>(diagram_.component_count())) {
    throw SceneError("role given for a component that does not exist");
  }
  for (auto [c, g] : groups_) {
    if (!roles_.contains(c) || roles_.at(c) != Role::Fiber) {
      throw SceneError("group given for non-fiber component " + std::to_string(c));
    }
  }
}

Framing LabeledScene::framing(ComponentId fiber) const {
  auto it = framings_.find(fiber);
  if (it == framings_.end()) throw IllegalArgument("component " + std::to_string(fiber) + " is not a fiber");
  return it->second;
}

int LabeledScene::group(ComponentId fiber) const {
  auto it = groups_.find(fiber);
  return it == groups_.end() ? 1 : it->second;
}

FramedLink LabeledScene::fiber_link() const {
  if (fibers_.empty()) throw SceneError("scene has no fiber components");
  std::vector<Framing> fs;
  for (ComponentId c : fibers_) fs.push_back(framings_.at(c));
  return FramedLink(sublink(diagram_, fibers_), std::move(fs));
}

DiagramFile LabeledScene::to_file() const {
  return DiagramFile{diagram_, framings_, roles_, groups_};
}

LabeledScene labeled_scene(const DiagramFile& file) {
  return LabeledScene(file.diagram, file.roles, file.framings, file.groups);
}

}  // namespace fiberlink

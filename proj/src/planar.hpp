#pragma once

// Mutable working form of a diagram used by every transformation. Edge ids
// are arbitrary positive integers and strand directions are stored
// explicitly, so intermediate states need not satisfy the numbering rules of
// a PD code. `to_diagram` renumbers canonically and re-validates.

#include <array>
#include <map>
#include <vector>

#include "fiberlink/diagram.hpp"

namespace fiberlink::detail {

struct Endpoint {
  int crossing = -1;
  int slot = -1;
};

struct PlanarCrossing {
  std::array<int, 4> edge{};  // counterclockwise, slot 0 = incoming under-strand
  int over_in = 1;            // 1 or 3

  int over_out() const { return 4 - over_in; }
  bool is_in(int slot) const { return slot == 0 || slot == over_in; }
};

struct EdgeEnds {
  Endpoint tail;
  Endpoint head;
};

class Planar {
 public:
  explicit Planar(const LinkDiagram& d);

  std::vector<PlanarCrossing> crossings;
  std::vector<int> loops;           // crossingless components
  std::map<int, ComponentId> label;  // edge -> component label

  int fresh(ComponentId c) {
    const int id = next_id_++;
    label[id] = c;
    return id;
  }

  std::map<int, EdgeEnds> ends() const;

  /// Faces as lists of sides; face k is walked so that it lies on the right.
  std::vector<std::vector<Side>> faces() const;

  /// Removes the listed crossings and joins each surviving strand through
  /// them. Strands of components in `drop` are discarded entirely.
  void remove_crossings(const std::vector<int>& which, const std::vector<ComponentId>& drop = {});

  LinkDiagram to_diagram() const;

 private:
  int next_id_ = 1;
};

}  // namespace fiberlink::detail

#pragma once

#include <cstdint>
#include <vector>

#include "fiberlink/diagram.hpp"
#include "fiberlink/scene.hpp"

namespace fiberlink {

/// Symmetric matrix indexed by component label (1-based accessors).
/// Off-diagonal: linking numbers. Diagonal: self-writhe of the component.
class LinkingMatrix {
 public:
  explicit LinkingMatrix(int n) : n_(n), m_(static_cast<std::size_t>(n) * n, 0) {}

  int size() const noexcept { return n_; }
  int operator()(ComponentId i, ComponentId j) const { return m_[index(i, j)]; }
  int& at(ComponentId i, ComponentId j) { return m_[index(i, j)]; }

  /// Sum of the off-diagonal entries of row i.
  int row_sum(ComponentId i) const;

  friend bool operator==(const LinkingMatrix&, const LinkingMatrix&) = default;

 private:
  std::size_t index(ComponentId i, ComponentId j) const;
  int n_;
  std::vector<int> m_;
};

struct SeifertData {
  int circle_count = 0;
  int crossing_count = 0;
  int euler_characteristic = 0;  // circles - crossings

  friend bool operator==(const SeifertData&, const SeifertData&) = default;
};

LinkingMatrix linking_matrix(const LinkDiagram& d);

/// Number of crossings of the component with itself.
int self_crossing_count(const LinkDiagram& d, ComponentId c);

SeifertData seifert(const LinkDiagram& d);

/// Framed-cobordism class in pi_3(S^2) = Z: sum of framings plus the linking
/// numbers over ordered pairs of distinct components.
std::int64_t hopf_invariant(const FramedLink& fl);

bool is_framed_null_cobordant(const FramedLink& fl);

}  // namespace fiberlink

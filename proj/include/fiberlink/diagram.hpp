#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fiberlink {

/// Arc (edge) identifier in a planar-diagram code. Valid ids are 1..N.
using ArcId = int;

/// Component label, 1-based, assigned in order of smallest arc id.
using ComponentId = int;

/// One crossing of a PD code: four arcs listed counterclockwise, starting
/// with the incoming under-strand. arcs[0] -> arcs[2] is the under-strand.
struct Crossing {
  std::array<ArcId, 4> arcs{};

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Unvalidated planar-diagram code: crossings plus crossingless split unknots.
struct PdCode {
  std::vector<Crossing> crossings;
  std::vector<ArcId> unknots;

  friend bool operator==(const PdCode&, const PdCode&) = default;
};

struct Violation {
  enum class Kind {
    ArcMultiplicity,     // arc not used exactly twice (once for a U arc)
    ArcRange,            // ids do not form 1..N
    NonConsecutive,      // a component's arcs are not a consecutive run
    Succession,          // a strand does not follow its component's cycle
    DegenerateComponent, // one-arc component, cannot be drawn
    OddLinkingSum,       // signed inter-component crossing sum is odd
  };
  Kind kind;
  std::string where;
  std::string message;
};

std::string to_string(Violation::Kind kind);

class InvalidDiagram : public std::runtime_error {
 public:
  explicit InvalidDiagram(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Raised when a move site, component label, or similar argument is not legal
/// for the diagram it is applied to.
class IllegalArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Sign { Negative = -1, Positive = 1 };

inline int value(Sign s) { return static_cast<int>(s); }

/// Checks every structural invariant of a PD code. Empty result means the
/// code describes a (possibly non-planar) oriented link diagram.
std::vector<Violation> validate(const PdCode& pd);

/// A validated, oriented link diagram. Immutable.
///
/// Orientation is implicit in the arc numbering: each component owns a run of
/// consecutive ids lo..hi traversed in increasing order and wrapping from hi
/// back to lo. The over-strand direction at every crossing is derived from
/// that succession, with head/tail bookkeeping for two-arc components.
class LinkDiagram {
 public:
  LinkDiagram() = default;

  /// Throws InvalidDiagram if validate(pd) is non-empty.
  static LinkDiagram from_pd(PdCode pd);

  const PdCode& pd() const noexcept { return pd_; }
  std::span<const Crossing> crossings() const noexcept { return pd_.crossings; }
  std::size_t crossing_count() const noexcept { return pd_.crossings.size(); }
  int arc_count() const noexcept { return static_cast<int>(component_of_.size()) - 1; }
  int component_count() const noexcept { return static_cast<int>(components_.size()); }

  ComponentId component_of(ArcId arc) const;
  ArcId successor(ArcId arc) const;

  /// Arcs of a component in traversal order, starting at its smallest id.
  const std::vector<ArcId>& component_arcs(ComponentId c) const;
  bool is_crossingless(ComponentId c) const;
  bool has_component(ComponentId c) const noexcept {
    return c >= 1 && c <= component_count();
  }

  /// Slot (1 or 3) through which the over-strand enters crossing i.
  int over_in_slot(std::size_t i) const { return over_in_.at(i); }
  Sign sign(std::size_t i) const;
  ComponentId under_component(std::size_t i) const;
  ComponentId over_component(std::size_t i) const;

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) { return a.pd_ == b.pd_; }

 private:
  PdCode pd_;
  std::vector<int> over_in_;
  std::vector<ComponentId> component_of_;  // indexed by arc id, [0] unused
  std::vector<ArcId> successor_;           // indexed by arc id
  std::vector<std::vector<ArcId>> components_;
};

Sign crossing_sign(const LinkDiagram& d, std::size_t crossing);

/// Same diagram with arcs renumbered canonically and crossings sorted by
/// their incoming under-arc.
LinkDiagram canonical(const LinkDiagram& d);

/// Disjoint split union; components of b are labelled after those of a.
LinkDiagram split_union(const LinkDiagram& a, const LinkDiagram& b);

LinkDiagram reverse_component(const LinkDiagram& d, ComponentId c);

/// Relabels components: old component order[k] becomes component k + 1.
/// `order` must be a permutation of 1..component_count().
LinkDiagram permute_components(const LinkDiagram& d, std::span<const ComponentId> order);

/// Mirror image: every crossing has its over and under strands exchanged.
LinkDiagram mirror(const LinkDiagram& d);

/// Keeps only the listed components. Crossings touching a removed strand are
/// dropped and the surviving strand is joined through them.
LinkDiagram sublink(const LinkDiagram& d, std::span<const ComponentId> keep);

/// Adds a new component: a small circle clasping the given arc once, with
/// linking number `sign` with that arc's component and 0 with all others.
LinkDiagram add_meridian(const LinkDiagram& d, ArcId arc, Sign sign);

// ---------------------------------------------------------------------------
// Faces and Reidemeister moves

/// One side of an arc: the face lying to the right (or left) of the arc when
/// travelling along its orientation.
struct Side {
  ArcId arc = 0;
  bool right = true;

  friend bool operator==(const Side&, const Side&) = default;
};

/// Faces of the diagram as cyclic lists of sides. Crossingless components
/// contribute no faces.
std::vector<std::vector<Side>> faces(const LinkDiagram& d);

enum class MoveKind { R1Plus, R1Minus, R2Plus, R2Minus, R3 };

std::string to_string(MoveKind kind);

/// A Reidemeister move and its site.
///  R1Plus:  kink on `side.arc`, loop drawn on `side`; `over_first` says the
///           strand passes over on its first visit to the new crossing.
///  R1Minus: removes the kink at crossing index `crossing`.
///  R2Plus:  pushes `side.arc` over `other.arc` across their common face.
///  R2Minus: removes the bigon face named by `side`.
///  R3:      slides a strand across the triangular face named by `side`.
struct Move {
  MoveKind kind = MoveKind::R1Plus;
  Side side{};
  Side other{};
  bool over_first = false;
  std::size_t crossing = 0;
};

/// Throws IllegalArgument if the site is not legal. The result is
/// canonically renumbered; component count and labels are preserved.
LinkDiagram apply_reidemeister(const LinkDiagram& d, const Move& move);

/// Every legal site for R1Minus, R2Minus and R3 moves.
std::vector<Move> removal_and_slide_sites(const LinkDiagram& d);

// ---------------------------------------------------------------------------
// Text format

/// Syntax or record-level error, with 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses crossing (X) and unknot (U) records; F and R records are accepted
/// and ignored here (see scene.hpp). Throws ParseError or InvalidDiagram.
LinkDiagram parse_diagram(std::string_view text);

/// Parses X and U records without validating the resulting code.
PdCode parse_pd(std::string_view text);

/// One X line per crossing followed by one U line per crossingless component.
std::string serialize(const LinkDiagram& d);

}  // namespace fiberlink

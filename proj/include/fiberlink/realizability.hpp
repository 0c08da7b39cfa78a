#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fiberlink/obstruction.hpp"
#include "fiberlink/scene.hpp"

namespace fiberlink {

enum class Verdict { Realizable, NotRealizable, NotApplicable };
enum class Target { Plane, Sphere };

std::string to_string(Verdict v);
std::string to_string(Target t);

/// Machine-readable reason codes attached to reports.
namespace reason {
inline constexpr const char* kDualClassMatches = "dual-class-matches";
inline constexpr const char* kObstructionMismatch = "obstruction-mismatch";
inline constexpr const char* kEmptySingularSetPlane = "empty-singular-set-plane";
inline constexpr const char* kNotNullCobordant = "fiber-not-null-cobordant";
inline constexpr const char* kGroupNotNullCobordant = "fiber-group-not-null-cobordant";
inline constexpr const char* kGroupsAssumeDisjointSurfaces = "fiber-groups-assume-disjoint-framed-surfaces";
inline constexpr const char* kFoldTypesAssignable = "fold-types-assignable";
inline constexpr const char* kObstructionVanishes = "obstruction-vanishes";
inline constexpr const char* kObstructionNonzero = "obstruction-nonzero";
inline constexpr const char* kOddComponentCount = "odd-component-count";
inline constexpr const char* kEmptyDiagram = "empty-diagram";
inline constexpr const char* kOddRowSums = "all-row-sums-odd";
inline constexpr const char* kEvenRowSum = "even-row-sum";
}  // namespace reason

/// Outcome of asking whether the singular components of a scene can be the
/// whole singular set of a generic map having the fiber components as a
/// framed regular fiber. Per-fiber vectors are ordered like `fibers`.
struct RealizabilityReport {
  Verdict verdict = Verdict::NotApplicable;
  Target target = Target::Plane;
  std::vector<ComponentId> fibers;
  std::vector<ComponentId> singular;
  ObstructionVector obstruction;
  std::vector<int> j_class;  // mod-2 linking of the singular set with each fiber
  std::vector<ComponentId> mismatches;
  std::int64_t hopf_invariant = 0;
  std::vector<std::string> notes;
};

/// Throws SceneError if the scene has no fiber components.
RealizabilityReport realize_singular(const LabeledScene& scene, Target target);

struct SplitAnswer {
  bool possible = false;
  std::string reason;
};

/// Whether a singular set split from the fiber (in a disjoint ball) works.
SplitAnswer split_possible(const FramedLink& fl, Target target);

/// A singular set realizing the obstruction: one meridian per component
/// with a_s = 1, or a split unknot when there is none.
struct WitnessLink {
  std::vector<ComponentId> meridians;
  bool extra_split_unknot = false;
  LabeledScene scene;
};

/// Throws SceneError if fl is not framed null-cobordant.
WitnessLink witness_singular(const FramedLink& fl);

/// Per-component check that the total linking with the other components is
/// odd; all odd means the link is a regular fiber of a submersion R^3 -> R^2.
struct SubmersionReport {
  Verdict verdict = Verdict::NotApplicable;
  std::vector<int> row_sums;
  std::vector<ComponentId> failing;
  std::vector<std::string> notes;
};

SubmersionReport hp_submersion_check(const LinkDiagram& d);

/// When the submersion criterion holds, a lip move inside a ball missing the
/// link turns the submersion into a generic map whose singular set is one
/// split unknotted circle, so no fiber component links it.
struct SplitSingularCertificate {
  SubmersionReport submersion;
  bool certificate = false;
  std::string explanation;
};

SplitSingularCertificate chillingworth_report(const LinkDiagram& d);

}  // namespace fiberlink

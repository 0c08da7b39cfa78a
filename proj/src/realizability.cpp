#include "fiberlink/realizability.hpp"

#include <map>

#include "fiberlink/invariants.hpp"

namespace fiberlink {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Realizable: return "realizable";
    case Verdict::NotRealizable: return "not-realizable";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

std::string to_string(Target t) { return t == Target::Plane ? "plane" : "sphere"; }

RealizabilityReport realize_singular(const LabeledScene& scene, Target target) {
  if (scene.fibers().empty()) throw SceneError("scene has no fiber components");
  RealizabilityReport r;
  r.target = target;
  r.fibers = scene.fibers();
  r.singular = scene.singular();

  const FramedLink fiber = scene.fiber_link();
  r.obstruction = obstruction_vector(fiber);
  r.hopf_invariant = hopf_invariant(fiber);

  const LinkingMatrix lk = linking_matrix(scene.diagram());
  for (ComponentId s : r.fibers) {
    int j = 0;
    for (ComponentId c : r.singular) j += lk(c, s);
    r.j_class.push_back(((j % 2) + 2) % 2);
  }

  std::map<int, std::vector<ComponentId>> groups;
  for (ComponentId s : r.fibers) groups[scene.group(s)].push_back(s);
  if (groups.size() > 1) r.notes.push_back(reason::kGroupsAssumeDisjointSurfaces);

  if (target == Target::Plane) {
    bool applicable = r.hopf_invariant == 0;
    if (!applicable) r.notes.push_back(reason::kNotNullCobordant);
    if (groups.size() > 1) {
      for (const auto& [g, members] : groups) {
        std::vector<Framing> fs;
        for (ComponentId s : members) fs.push_back(scene.framing(s));
        const FramedLink part(sublink(scene.diagram(), members), std::move(fs));
        if (hopf_invariant(part) != 0) {
          r.notes.push_back(std::string(reason::kGroupNotNullCobordant) + ":" + std::to_string(g));
          applicable = false;
        }
      }
    }
    if (!applicable) {
      r.verdict = Verdict::NotApplicable;
      return r;
    }
  }

  for (std::size_t k = 0; k < r.fibers.size(); ++k) {
    if (r.j_class[k] != r.obstruction.a[k]) r.mismatches.push_back(r.fibers[k]);
  }
  if (r.singular.size() >= 2) r.notes.push_back(reason::kFoldTypesAssignable);

  if (!r.mismatches.empty()) {
    r.verdict = Verdict::NotRealizable;
    r.notes.push_back(reason::kObstructionMismatch);
  } else if (target == Target::Plane && r.singular.empty()) {
    // A map of a closed 3-manifold into the plane always has singular points.
    r.verdict = Verdict::NotRealizable;
    r.notes.push_back(reason::kEmptySingularSetPlane);
  } else {
    r.verdict = Verdict::Realizable;
    r.notes.push_back(reason::kDualClassMatches);
  }
  return r;
}

SplitAnswer split_possible(const FramedLink& fl, Target target) {
  if (target == Target::Plane && !is_framed_null_cobordant(fl)) {
    return {false, reason::kNotNullCobordant};
  }
  const ObstructionVector a = obstruction_vector(fl);
  if (a.vanishes()) return {true, reason::kObstructionVanishes};
  if (fl.component_count() % 2 == 1 && is_framed_null_cobordant(fl)) {
    return {false, reason::kOddComponentCount};
  }
  return {false, reason::kObstructionNonzero};
}

WitnessLink witness_singular(const FramedLink& fl) {
  if (!is_framed_null_cobordant(fl)) {
    throw SceneError("witness requires a framed null-cobordant link (Hopf invariant " +
                     std::to_string(hopf_invariant(fl)) + ")");
  }
  const ObstructionVector a = obstruction_vector(fl);
  std::vector<ComponentId> meridians;
  LinkDiagram d = fl.diagram();
  for (ComponentId s = 1; s <= fl.component_count(); ++s) {
    if (a.at(s) == 1) {
      meridians.push_back(s);
      // Labels of existing components survive add_meridian, so arcs of s
      // are looked up in the current diagram.
      d = add_meridian(d, d.component_arcs(s).front(), Sign::Positive);
    }
  }
  const bool split_unknot = meridians.empty();
  if (split_unknot) d = split_union(d, LinkDiagram::from_pd(PdCode{{}, {1}}));
  std::map<ComponentId, Role> roles;
  std::map<ComponentId, Framing> framings;
  for (ComponentId c = 1; c <= d.component_count(); ++c) {
    const bool fiber = c <= fl.component_count();
    roles[c] = fiber ? Role::Fiber : Role::Singular;
    if (fiber) framings[c] = fl.framing(c);
  }
  return WitnessLink{std::move(meridians), split_unknot,
                     LabeledScene(std::move(d), std::move(roles), std::move(framings))};
}

SubmersionReport hp_submersion_check(const LinkDiagram& d) {
  SubmersionReport r;
  if (d.component_count() == 0) {
    r.notes.push_back(reason::kEmptyDiagram);
    return r;
  }
  const LinkingMatrix lk = linking_matrix(d);
  for (ComponentId i = 1; i <= d.component_count(); ++i) {
    r.row_sums.push_back(lk.row_sum(i));
    if (lk.row_sum(i) % 2 == 0) r.failing.push_back(i);
  }
  r.verdict = r.failing.empty() ? Verdict::Realizable : Verdict::NotRealizable;
  r.notes.push_back(r.failing.empty() ? reason::kOddRowSums : reason::kEvenRowSum);
  return r;
}

SplitSingularCertificate chillingworth_report(const LinkDiagram& d) {
  SplitSingularCertificate c;
  c.submersion = hp_submersion_check(d);
  c.certificate = c.submersion.verdict == Verdict::Realizable;
  if (c.certificate) {
    c.explanation =
        "link is a regular fiber of a submersion R^3 -> R^2; a lip move in a ball disjoint from "
        "the link yields a generic map whose singular set is a split unknotted circle, linked by "
        "no fiber component";
  } else if (c.submersion.verdict == Verdict::NotRealizable) {
    c.explanation = "some component has even total linking with the rest; no certificate from "
                    "the submersion construction";
  } else {
    c.explanation = "empty diagram";
  }
  return c;
}

}  // namespace fiberlink

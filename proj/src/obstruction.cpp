#include "fiberlink/obstruction.hpp"

#include <algorithm>
#include <numeric>

#include "fiberlink/invariants.hpp"

namespace fiberlink {

namespace {

int mod2(std::int64_t v) { return static_cast<int>(((v % 2) + 2) % 2); }

}  // namespace

int ObstructionVector::total_parity() const {
  return std::accumulate(a.begin(), a.end(), 0) % 2;
}

bool ObstructionVector::vanishes() const {
  return std::all_of(a.begin(), a.end(), [](int v) { return v == 0; });
}

int framing_parity(const FramedLink& fl, ComponentId c) { return mod2(fl.framing(c) + 1); }

ObstructionVector obstruction_vector(const FramedLink& fl) {
  ObstructionVector v;
  for (ComponentId c = 1; c <= fl.component_count(); ++c) v.a.push_back(framing_parity(fl, c));
  return v;
}

std::string to_string(ParityCheck p) {
  switch (p) {
    case ParityCheck::Holds: return "holds";
    case ParityCheck::Violated: return "violated";
    case ParityCheck::NotApplicable: return "not-applicable";
  }
  return "?";
}

ParityCheck parity_identity_check(const FramedLink& fl) {
  if (!is_framed_null_cobordant(fl)) return ParityCheck::NotApplicable;
  const int sum = obstruction_vector(fl).total_parity();
  return sum == fl.component_count() % 2 ? ParityCheck::Holds : ParityCheck::Violated;
}

FramingChange framing_change_delta(const FramedLink& fl, ComponentId c, Framing new_framing) {
  const FramedLink changed = fl.with_framing(c, new_framing);
  FramingChange out;
  out.delta = mod2(new_framing - fl.framing(c));
  out.vector = obstruction_vector(changed);
  out.hopf_invariant = hopf_invariant(changed);
  out.null_cobordant = out.hopf_invariant == 0;
  if (!out.null_cobordant) {
    out.warning = "reframed link has Hopf invariant " + std::to_string(out.hopf_invariant) +
                  " and is not framed null-cobordant";
  }
  return out;
}

}  // namespace fiberlink

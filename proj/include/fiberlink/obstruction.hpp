#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fiberlink/scene.hpp"

namespace fiberlink {

/// The relative obstruction class of a framed link in S^3, recorded through
/// its values on the components: a[c-1] in {0,1} compares the framing of
/// component c with the standard framing of R^3.
struct ObstructionVector {
  std::vector<int> a;

  int total_parity() const;  // sum of a, mod 2
  bool vanishes() const;
  int at(ComponentId c) const { return a.at(c - 1); }

  friend bool operator==(const ObstructionVector&, const ObstructionVector&) = default;
};

/// Twisting against the blackboard framing plus the self-crossing count
/// plus one, mod 2. The writhe terms cancel, leaving framing + 1 mod 2.
int framing_parity(const FramedLink& fl, ComponentId c);

ObstructionVector obstruction_vector(const FramedLink& fl);

enum class ParityCheck { Holds, Violated, NotApplicable };

std::string to_string(ParityCheck p);

/// For a framed null-cobordant link, sum(a) must equal the number of
/// components mod 2. Violated means an internal inconsistency.
ParityCheck parity_identity_check(const FramedLink& fl);

struct FramingChange {
  int delta = 0;  // change of a_c
  ObstructionVector vector;
  std::int64_t hopf_invariant = 0;
  bool null_cobordant = false;
  std::string warning;  // non-empty when the new link is no longer null-cobordant
};

FramingChange framing_change_delta(const FramedLink& fl, ComponentId c, Framing new_framing);

}  // namespace fiberlink

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "corona.hpp"
#include "model.hpp"

namespace compack {

struct OverlapFinding {
  std::size_t i = 0;
  std::size_t j = 0;
  Offset offset;  // j is taken at this lattice translate
  double depth = 0.0;
};

// Every overlapping pair, periodic images included.
std::vector<OverlapFinding> check_overlaps(const Patch& p);

enum class DiscStatus { Compact, Boundary, Violating };
const char* disc_status_name(DiscStatus s) noexcept;

struct DiscFinding {
  std::size_t index = 0;
  DiscStatus status = DiscStatus::Compact;
  std::optional<Corona> corona;
  std::string reason;  // why the corona did not close
};

struct CompactReport {
  std::vector<DiscFinding> discs;  // one per disc, in patch order
  std::size_t compact = 0;
  std::size_t boundary = 0;
  std::size_t violating = 0;
};

// A disc whose corona does not close is boundary when the patch is aperiodic
// and the ball of radius (own radius + 2 + 2r) around it leaves the convex
// hull of the centers; otherwise it is violating. Requires no overlaps.
CompactReport check_compact(const Patch& p);

struct MembershipFinding {
  std::size_t index = 0;
  Corona corona;
};

std::vector<MembershipFinding> check_corona_membership(const CompactReport& report,
                                                       const CoronaSet& allowed);

// Disc area per unit cell area, with centers reduced into the cell so that
// repeated images count once. Throws Error(Aperiodic) without periods.
double density(const Patch& p);

struct VerifyReport {
  std::size_t disc_count = 0;
  std::vector<OverlapFinding> overlaps;
  std::optional<CompactReport> compact;  // skipped when overlaps exist
  std::vector<MembershipFinding> membership;
  bool membership_checked = false;
  bool radius_mismatch = false;
  bool both_sizes = false;
  std::vector<std::string> notes;

  std::size_t violations() const;
  bool ok() const { return violations() == 0; }
};

// Coordinates only: overlap, compactness and, for a known class id, membership
// in the filtered corona set of that class.
VerifyReport verify_patch(const Patch& p);

// Line-oriented findings followed by a summary block of counts.
std::string format_report(const VerifyReport& r);

}  // namespace compack

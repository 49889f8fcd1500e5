#pragma once

#include "prismafold/unfold.hpp"

#include <map>
#include <string>
#include <vector>

namespace prismafold {

enum class CheckStatus { Pass, Warn, Fail };

/// Outcome of one net check. `witness` names the first violating facet pair,
/// vertex, or edge; `measures` carries the extreme margins the check saw,
/// keyed by stable names, for aggregation across fuzz runs.
struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;
  std::map<std::string, double> measures;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  Tolerances tol;

  /// Overall verdict: no failed check. Warnings (right sign, short margin)
  /// do not fail the report.
  bool pass() const {
    for (const CheckResult& c : checks)
      if (c.status == CheckStatus::Fail) return false;
    return true;
  }
};

/// No two placed facets overlap with interior penetration beyond
/// eps_verify * scale; boundary contact along hinges and cut images is fine.
CheckResult check_simple(const Net& net, const Tolerances& tol = {});

/// Every placed facet is congruent to its 3D original (all label-to-label
/// distances within 1e-9 relative), the base sits at its input coordinates,
/// and every hinge's endpoint images coincide.
CheckResult check_isometry(const Prismatoid& p, const Band& band, const Net& net,
                           const Tolerances& tol = {});

/// At each interior vertex of the four developed boundary paths, the turn is
/// strictly between 0 and the projected polygon turn (eps_angle margins; a
/// correct sign with a short margin is a warning). On prismoid bands the top
/// and base turns must also agree pairwise and corresponding edges must stay
/// parallel.
CheckResult check_stretch(const Prismatoid& p, const Band& band, const CutPlan& plan,
                          const Net& net, const Tolerances& tol = {});

/// Cone containment: M- vertices lie beyond the e^- line but on the base
/// side of the e^+ line; M+ and top vertices lie beyond the e^+ line. Slack
/// eps_verify * scale.
CheckResult check_cones(const Net& net, const Tolerances& tol = {});

/// True iff the distance to path[0] is non-decreasing along every edge:
/// for edge (p, q), (q-p).(p-start) >= -eps and (q-p).(q-start) >= -eps.
bool check_radially_monotone(const std::vector<Vec2>& path, const Tolerances& tol = {});

/// Runs every check against a net produced for (or claimed for) the given
/// instance and plan. Deterministic for fixed input.
VerifyReport verify_net(const Prismatoid& p, const Band& band, const CutPlan& plan,
                        const Net& net, const Tolerances& tol = {});

}  // namespace prismafold

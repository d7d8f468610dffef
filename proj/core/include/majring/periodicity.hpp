#pragma once

#include <cstdint>
#include <optional>

#include "majring/config.hpp"

namespace majring {

enum class TemporalTag { FixedPoint, TwoCycle, Transient };

struct TemporalClass {
    TemporalTag tag = TemporalTag::Transient;
    std::optional<Configuration> partner; // present iff TwoCycle
};

// FixedPoint iff step(cfg) == cfg; TwoCycle iff step(cfg) = partner != cfg
// and step(partner) = cfg; Transient otherwise. Computes at most two steps.
TemporalClass temporal_class(const Configuration& cfg, Rule rule);

// Least p >= 1 with cfg(i+p) == cfg(i) for all i; always divides n.
int spatial_period(const Configuration& cfg);

enum class TheoremCase { StronglyStableFixedForm, WeaklyStablePeriodic, Transient };

// Which of the three structural cases a configuration falls into under the
// majority rule with radius r:
//   StronglyStableFixedForm - temporally periodic, every block >= r+1;
//   WeaklyStablePeriodic    - temporally periodic, every block <= r,
//                             spatially periodic with period <= 2r(r+1);
//   Transient               - otherwise; every unstable run has length <= 2r.
struct ClassificationResult {
    TheoremCase outcome = TheoremCase::Transient;
    std::optional<int> spatial_period;   // WeaklyStablePeriodic
    std::optional<int> max_unstable_run; // Transient
};

ClassificationResult classify_theorem(const Configuration& cfg, int r);

// Twice the potential of a consecutive configuration pair, so that the
// (r + 1/2) weight stays integral:
//   doubled = 2 * sum_i cur(i) * g_prev(i) - (2r+1) * sum_i (cur(i) + prev(i)),
// where g_prev(i) counts the ones in the radius-r neighborhood of i in prev.
// Along a majority trajectory the doubled potential increases by
// sum over flipped cells of |2*g_t(i) - (2r+1)|, which is at least the number
// of cells where E_{t+1} differs from E_{t-1}.
struct PotentialValue {
    std::int64_t doubled = 0;
};

PotentialValue potential2(const Configuration& previous, const Configuration& current, int r);

// Whole-ring balance check for a temporally periodic configuration whose
// blocks all have length <= r. Requires a non-homogeneous ring (a homogeneous
// ring that is short enough to qualify is never balanced).
bool is_balanced_weakly_stable(const Configuration& cfg, int r);

} // namespace majring

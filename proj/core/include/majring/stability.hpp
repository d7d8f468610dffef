#pragma once

#include <vector>

#include "majring/blocks.hpp"
#include "majring/config.hpp"

namespace majring {

enum class Stability : unsigned char { StronglyStable, WeaklyStable, Unstable };

inline char stability_letter(Stability s) {
    switch (s) {
        case Stability::StronglyStable: return 'S';
        case Stability::WeaklyStable: return 'W';
        default: return 'U';
    }
}

// Per-cell stability of a configuration under a rule:
//   StronglyStable - the cell lies in a homogeneous run of length >= r+1
//                    (or a run covering the whole ring, whose state can
//                    never change even when n <= r);
//   Unstable       - the cell's state differs after two steps;
//   WeaklyStable   - everything else.
// The labels are identical for the majority and minority rules at the same
// radius, since two minority steps equal two majority steps.
struct StabilityMap {
    std::vector<Stability> labels;
    Rule rule;

    int size() const { return static_cast<int>(labels.size()); }
};

StabilityMap classify_stability(const Configuration& cfg, Rule rule);

// Maximal cyclic runs of Unstable cells, in ring order. Empty iff the
// configuration is temporally periodic.
std::vector<CellInterval> unstable_runs(const StabilityMap& map);

} // namespace majring

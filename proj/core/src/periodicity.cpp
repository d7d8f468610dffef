#include "majring/periodicity.hpp"

#include <algorithm>

#include "majring/blocks.hpp"
#include "majring/errors.hpp"
#include "majring/stability.hpp"

namespace majring {

TemporalClass temporal_class(const Configuration& cfg, Rule rule) {
    TemporalClass tc;
    const Configuration next = step(cfg, rule);
    if (next == cfg) {
        tc.tag = TemporalTag::FixedPoint;
        return tc;
    }
    if (step(next, rule) == cfg) {
        tc.tag = TemporalTag::TwoCycle;
        tc.partner = next;
        return tc;
    }
    tc.tag = TemporalTag::Transient;
    return tc;
}

int spatial_period(const Configuration& cfg) {
    const int n = cfg.size();
    for (int p = 1; p <= n; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            if (cfg.get(i) != cfg.get(i + p)) ok = false;
        if (ok) return p;
    }
    return n; // unreachable: p = n always matches
}

ClassificationResult classify_theorem(const Configuration& cfg, int r) {
    ClassificationResult res;
    const Rule rule = Rule::majority(r);
    const Configuration after_two = step(step(cfg, rule), rule);

    if (after_two == cfg) {
        const BlockDecomposition d = blocks(cfg);
        int min_len = cfg.size(), max_len = 0;
        for (const Block& b : d.blocks) {
            min_len = std::min(min_len, b.length);
            max_len = std::max(max_len, b.length);
        }
        if (min_len >= r + 1) {
            res.outcome = TheoremCase::StronglyStableFixedForm;
            return res;
        }
        if (max_len > r)
            throw Error("temporally periodic configuration with mixed block lengths");
        res.outcome = TheoremCase::WeaklyStablePeriodic;
        res.spatial_period = spatial_period(cfg);
        return res;
    }

    res.outcome = TheoremCase::Transient;
    std::int64_t longest = 0;
    for (const CellInterval& run : unstable_runs(classify_stability(cfg, rule)))
        longest = std::max(longest, run.length);
    res.max_unstable_run = static_cast<int>(longest);
    return res;
}

PotentialValue potential2(const Configuration& previous, const Configuration& current, int r) {
    if (previous.size() != current.size()) throw LengthMismatch(previous.size(), current.size());
    const int n = previous.size();
    const std::int64_t window = 2 * static_cast<std::int64_t>(r) + 1;
    const std::int64_t full = window / n;
    const std::int64_t rest = window % n;
    const std::int64_t total1 = previous.count_ones();

    std::int64_t coupled = 0; // sum_i current(i) * g_prev(i)
    std::int64_t active = 0;  // sum_i (current(i) + previous(i))
    std::int64_t w = 0;
    for (std::int64_t j = 0; j < rest; ++j) w += previous.get(-r + j);
    for (int i = 0; i < n; ++i) {
        const std::int64_t g = full * total1 + w;
        if (current.get(i)) coupled += g;
        active += current.get(i) + previous.get(i);
        if (rest > 0) {
            w -= previous.get(i - r);
            w += previous.get(i - r + rest);
        }
    }
    return {2 * coupled - window * active};
}

bool is_balanced_weakly_stable(const Configuration& cfg, int r) {
    const Rule rule = Rule::majority(r);
    if (step(step(cfg, rule), rule) != cfg)
        throw PreconditionViolated("configuration is not temporally periodic");
    if (cfg.homogeneous())
        throw PreconditionViolated("balance check requires a non-homogeneous ring");
    for (const Block& b : blocks(cfg).blocks)
        if (b.length > r) throw PreconditionViolated("configuration has a block longer than r");
    return bias(cfg, CellInterval{0, cfg.size()}) == 0;
}

} // namespace majring

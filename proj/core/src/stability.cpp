#include "majring/stability.hpp"

#include <algorithm>

namespace majring {

StabilityMap classify_stability(const Configuration& cfg, Rule rule) {
    const int n = cfg.size();
    const Configuration after_two = step(step(cfg, rule), rule);
    const BlockDecomposition d = blocks(cfg);

    StabilityMap map;
    map.rule = rule;
    map.labels.assign(n, Stability::WeaklyStable);
    for (const Block& b : d.blocks) {
        const bool strong = b.length >= rule.radius + 1 || b.length == n;
        for (int j = 0; j < b.length; ++j) {
            const std::int64_t cell = (b.start + j) % n;
            if (strong)
                map.labels[cell] = Stability::StronglyStable;
            else if (cfg.get(cell) != after_two.get(cell))
                map.labels[cell] = Stability::Unstable;
        }
    }
    return map;
}

std::vector<CellInterval> unstable_runs(const StabilityMap& map) {
    const int n = map.size();
    std::vector<CellInterval> runs;

    auto unstable = [&](int i) { return map.labels[i] == Stability::Unstable; };

    int first_stable = -1;
    for (int i = 0; i < n; ++i)
        if (!unstable(i)) {
            first_stable = i;
            break;
        }
    if (first_stable < 0) {
        runs.push_back({0, n});
        return runs;
    }

    // scan one full ring starting after a stable cell so wrapped runs never split
    int run_start = -1;
    for (int k = 1; k <= n; ++k) {
        const int i = (first_stable + k) % n;
        if (unstable(i)) {
            if (run_start < 0) run_start = i;
        } else if (run_start >= 0) {
            std::int64_t len = (i - run_start) % n;
            if (len <= 0) len += n;
            runs.push_back({run_start, len});
            run_start = -1;
        }
    }
    std::sort(runs.begin(), runs.end(),
              [](const CellInterval& a, const CellInterval& b) { return a.first < b.first; });
    return runs;
}

} // namespace majring

#include "majring/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <thread>

#include "majring/errors.hpp"
#include "majring/periodicity.hpp"

namespace majring {

CanonicalForm canonicalize(const Configuration& cfg) {
    const int n = cfg.size();
    std::set<std::string> orbit;
    std::string best;

    const Configuration variants[4] = {cfg, mirror(cfg), complement(cfg),
                                       complement(mirror(cfg))};
    for (const Configuration& v : variants) {
        for (int k = 0; k < n; ++k) {
            std::string s = rotate(v, k).to_string();
            if (best.empty() || s < best) best = s;
            orbit.insert(std::move(s));
        }
    }

    CanonicalForm cf;
    cf.representative = Configuration::from_string(best);
    cf.symmetry_class_size = static_cast<int>(orbit.size());
    return cf;
}

namespace {

constexpr int kBruteForceMaxRing = 26;

// ranks are scanned directly as words; bit j of a rank is cell n-1-j, which
// is a mirrored cell labeling, and the majority rule commutes with mirroring,
// so the period-2 test is unaffected and ascending rank = lexicographic order
std::vector<std::uint64_t> scan_range(const WordRule& wr, std::uint64_t begin,
                                      std::uint64_t end) {
    std::vector<std::uint64_t> hits;
    for (std::uint64_t x = begin; x < end; ++x)
        if (wr.step(wr.step(x)) == x) hits.push_back(x);
    return hits;
}

} // namespace

std::vector<Configuration> enumerate_bruteforce(int n, int r, Rule rule, unsigned workers) {
    (void)rule; // two steps of either rule coincide, so the periodic set does too
    if (n < 1) throw PreconditionViolated("ring size must be positive");
    if (n > kBruteForceMaxRing)
        throw BudgetExceeded("brute force supports n <= " + std::to_string(kBruteForceMaxRing));

    const WordRule wr(n, r);
    const std::uint64_t space = std::uint64_t{1} << n;
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());

    const std::uint64_t chunk = std::max<std::uint64_t>(std::uint64_t{1} << 16, space / 256);
    const std::size_t num_chunks = static_cast<std::size_t>((space + chunk - 1) / chunk);
    std::vector<std::vector<std::uint64_t>> per_chunk(num_chunks);

    if (workers <= 1 || num_chunks <= 1) {
        per_chunk[0] = scan_range(wr, 0, space);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                const std::size_t c = next.fetch_add(1);
                if (c >= num_chunks) return;
                const std::uint64_t begin = c * chunk;
                const std::uint64_t end = std::min(space, begin + chunk);
                per_chunk[c] = scan_range(wr, begin, end);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    std::vector<Configuration> out;
    for (const auto& hits : per_chunk)
        for (std::uint64_t x : hits) out.push_back(Configuration::from_rank(x, n));
    return out;
}

namespace {

// even-count compositions with parts in [1, max_part], total in [2, max_total]
void for_each_run_profile(int max_part, int max_total,
                          const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> parts;
    auto rec = [&](auto&& self, int total) -> void {
        if (parts.size() >= 2 && parts.size() % 2 == 0) fn(parts);
        for (int p = 1; p <= max_part && total + p <= max_total; ++p) {
            parts.push_back(p);
            self(self, total + p);
            parts.pop_back();
        }
    };
    rec(rec, 0);
}

Configuration from_runs(const std::vector<int>& runs, bool first_value) {
    int n = 0;
    for (int l : runs) n += l;
    Configuration cfg(n);
    int cell = 0;
    bool value = first_value;
    for (int l : runs) {
        for (int j = 0; j < l; ++j) cfg.set(cell++, value);
        value = !value;
    }
    return cfg;
}

} // namespace

GeneratorSet generate_patterns(int r) {
    if (r < 1) throw PreconditionViolated("radius must be >= 1");
    // the candidate space is all run profiles with parts <= r and total
    // <= 2r(r+1); it grows like c^(2r(r+1)) and passes desk scale at r = 4
    if (r > 3) throw BudgetExceeded("generator search supports r <= 3");
    const int max_len = 2 * r * (r + 1);
    const Rule rule = Rule::majority(r);

    std::set<std::string> reps;
    for_each_run_profile(r, max_len, [&](const std::vector<int>& runs) {
        // one phase suffices: the complement lands in the same canonical class
        const Configuration cfg = from_runs(runs, false);
        if (spatial_period(cfg) != cfg.size()) return;
        if (step(step(cfg, rule), rule) != cfg) return;
        reps.insert(canonicalize(cfg).representative.to_string());
    });

    GeneratorSet gs;
    gs.radius = r;
    gs.generators.assign(reps.begin(), reps.end());
    std::sort(gs.generators.begin(), gs.generators.end(),
              [](const std::string& a, const std::string& b) {
                  return a.size() != b.size() ? a.size() < b.size() : a < b;
              });
    return gs;
}

std::vector<Configuration> enumerate_from_patterns(int n, int r) {
    if (n < 1) throw PreconditionViolated("ring size must be positive");
    std::set<std::string> out;

    out.insert(std::string(n, '0'));
    out.insert(std::string(n, '1'));

    // long-run family: every run of length >= r+1, anchored compositions
    // expanded over both phases and all rotations
    {
        std::vector<int> parts;
        auto rec = [&](auto&& self, int total) -> void {
            if (total == n && parts.size() >= 2 && parts.size() % 2 == 0) {
                for (bool phase : {false, true}) {
                    const Configuration base = from_runs(parts, phase);
                    for (int k = 0; k < n; ++k) out.insert(rotate(base, k).to_string());
                }
                return;
            }
            for (int p = r + 1; total + p <= n; ++p) {
                parts.push_back(p);
                self(self, total + p);
                parts.pop_back();
            }
        };
        rec(rec, 0);
    }

    // short-run family: repeated generator strings, orbit-expanded
    for (const std::string& s : generate_patterns(r).generators) {
        const int len = static_cast<int>(s.size());
        if (n % len != 0) continue;
        const Configuration g = Configuration::from_string(s);
        const Configuration variants[4] = {g, mirror(g), complement(g), complement(mirror(g))};
        for (const Configuration& v : variants) {
            std::string tile;
            const std::string vs = v.to_string();
            for (int c = 0; c < n / len; ++c) tile += vs;
            const Configuration full = Configuration::from_string(tile);
            for (int k = 0; k < n; ++k) out.insert(rotate(full, k).to_string());
        }
    }

    std::vector<Configuration> result;
    result.reserve(out.size());
    for (const std::string& s : out) result.push_back(Configuration::from_string(s));
    return result;
}

} // namespace majring

#include "majring/checks.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "majring/blocks.hpp"
#include "majring/enumeration.hpp"
#include "majring/errors.hpp"
#include "majring/mappings.hpp"
#include "majring/periodicity.hpp"
#include "majring/render.hpp"
#include "majring/stability.hpp"

namespace majring {

namespace {

// reference update: direct per-cell counting, no sliding window, no words
Configuration naive_step(const Configuration& cfg, Rule rule) {
    const int n = cfg.size();
    const int r = rule.radius;
    Configuration out(n);
    for (int i = 0; i < n; ++i) {
        int c0 = 0, c1 = 0;
        for (int d = -r; d <= r; ++d) (cfg.get(i + d) ? c1 : c0)++;
        bool v = !(c0 > c1);
        if (rule.kind == RuleKind::Minority) v = !v;
        out.set(i, v);
    }
    return out;
}

Configuration random_config(std::mt19937_64& rng, int n) {
    Configuration cfg(n);
    for (int base = 0; base < n; base += 64) {
        std::uint64_t w = rng();
        for (int j = 0; j < 64 && base + j < n; ++j) cfg.set(base + j, (w >> j) & 1);
    }
    return cfg;
}

struct Check {
    CheckResult result;

    bool require(bool cond, const std::string& what) {
        ++result.cases;
        if (!cond && result.passed) {
            result.passed = false;
            result.detail = what;
        }
        return cond;
    }
    bool require(bool cond, const Configuration& cfg, const std::string& what) {
        ++result.cases;
        if (!cond && result.passed) {
            result.passed = false;
            result.detail = what + " [cfg " + cfg.to_string() + "]";
        }
        return cond;
    }
};

struct Pools {
    std::vector<Configuration> all;          // exhaustive + random instances
    std::vector<Configuration> weakly;       // periodic, non-homogeneous, blocks <= r
    std::vector<Configuration> periodic_all; // step^2-fixed members of `all`
};

Pools build_pools(const CheckOptions& opts) {
    Pools p;
    const Rule maj = Rule::majority(opts.radius);

    const int exhaustive_max = std::min(opts.n_max, 18);
    for (int n = 1; n <= exhaustive_max; ++n)
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
            p.all.push_back(Configuration::from_rank(x, n));

    std::mt19937_64 rng(opts.seed);
    for (int s = 0; s < opts.samples; ++s) {
        const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(opts.random_n_max));
        p.all.push_back(random_config(rng, n));
    }

    for (const Configuration& cfg : p.all) {
        if (step(step(cfg, maj), maj) != cfg) continue;
        p.periodic_all.push_back(cfg);
        if (cfg.homogeneous()) continue;
        bool short_blocks = true;
        for (const Block& b : blocks(cfg).blocks)
            if (b.length > opts.radius) short_blocks = false;
        if (short_blocks) p.weakly.push_back(cfg);
    }

    // a few repeated-generator rings so the pair machinery sees larger rings
    if (opts.radius <= 3) {
        for (const std::string& s : generate_patterns(opts.radius).generators) {
            for (int copies = 2; copies <= 3; ++copies) {
                if (static_cast<int>(s.size()) * copies > 64) break;
                p.weakly.push_back(parse_configuration(s, copies));
            }
        }
    }
    return p;
}

} // namespace

std::vector<CheckResult> run_property_suite(const CheckOptions& opts) {
    const int r = opts.radius;
    const Rule maj = Rule::majority(r);
    const Rule min = Rule::minority(r);
    const Pools pools = build_pools(opts);

    std::vector<CheckResult> results;
    auto run_check = [&](const std::string& name, auto&& body) {
        Check c;
        c.result.name = name;
        try {
            body(c);
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        results.push_back(std::move(c.result));
    };

    run_check("step agreement (naive / sliding / word)", [&](Check& c) {
        for (const Configuration& cfg : pools.all) {
            const Configuration expect = naive_step(cfg, maj);
            c.require(step(cfg, maj) == expect, cfg, "sliding-window step deviates");
            if (cfg.size() <= 64) {
                const WordRule wr(cfg.size(), r);
                c.require(wr.step(cfg.word()) == expect.word(), cfg, "word step deviates");
                c.require(wr.step(cfg.word(), RuleKind::Minority) ==
                              naive_step(cfg, min).word(),
                          cfg, "word minority step deviates");
            }
        }
    });

    run_check("self-duality under complement", [&](Check& c) {
        for (const Configuration& cfg : pools.all)
            c.require(step(complement(cfg), maj) == complement(step(cfg, maj)), cfg,
                      "complement does not commute with majority step");
    });

    run_check("minority = complement of majority; two steps coincide", [&](Check& c) {
        for (const Configuration& cfg : pools.all) {
            c.require(step(cfg, min) == complement(step(cfg, maj)), cfg, "minority link broken");
            c.require(step(step(cfg, min), min) == step(step(cfg, maj), maj), cfg,
                      "minority step^2 deviates from majority step^2");
        }
    });

    run_check("rotation equivariance", [&](Check& c) {
        for (const Configuration& cfg : pools.all) {
            const Configuration next = step(cfg, maj);
            for (std::int64_t k : {std::int64_t{1}, std::int64_t{cfg.size() / 2},
                                   std::int64_t{cfg.size() - 1}})
                c.require(step(rotate(cfg, k), maj) == rotate(next, k), cfg,
                          "rotation does not commute with step");
        }
    });

    run_check("homogeneous runs of length >= r+1 persist", [&](Check& c) {
        for (const Configuration& cfg : pools.all) {
            const Trajectory traj = evolve(cfg, maj);
            for (const Block& b : blocks(cfg).blocks) {
                if (b.length < r + 1) continue;
                for (const Configuration& state : traj.states)
                    for (int j = 0; j < b.length; ++j)
                        c.require(state.get(b.start + j) == b.value, cfg,
                                  "strongly stable interval changed state");
            }
        }
    });

    run_check("every trajectory reaches period 1 or 2 within 4n steps", [&](Check& c) {
        for (const Configuration& cfg : pools.all) {
            for (Rule rule : {maj, min}) {
                try {
                    const Trajectory traj = evolve(cfg, rule);
                    c.require(traj.period == 1 || traj.period == 2, cfg, "period not in {1,2}");
                } catch (const BudgetExceeded&) {
                    c.require(false, cfg, "no cycle within 4n steps");
                }
            }
        }
    });

    run_check("doubled potential increases by at least the flip count", [&](Check& c) {
        for (const Configuration& cfg : pools.all) {
            const Trajectory traj = evolve(cfg, maj);
            for (std::size_t t = 1; t + 1 < traj.states.size(); ++t) {
                const std::int64_t before =
                    potential2(traj.states[t - 1], traj.states[t], r).doubled;
                const std::int64_t after =
                    potential2(traj.states[t], traj.states[t + 1], r).doubled;
                int flips = 0;
                for (int i = 0; i < cfg.size(); ++i)
                    flips += traj.states[t + 1].get(i) != traj.states[t - 1].get(i);
                c.require(after - before >= flips, cfg, "potential increase below flip count");
            }
        }
    });

    run_check("switch point argument and balanced window", [&](Check& c) {
        for (const Configuration& cfg : pools.all) {
            const Configuration next = step(cfg, maj);
            for (auto [i, j] : switch_points(next)) {
                c.require(cfg.get(i - r) == next.get(i) && cfg.get(i + 1 + r) == next.get(j), cfg,
                          "switch point argument violated");
                c.require(bias(cfg, CellInterval::span(i - r + 1, i + r)) == 0, cfg,
                          "window around switch point not balanced");
            }
        }
    });

    run_check("switch point predictor matches the step exactly", [&](Check& c) {
        for (const Configuration& cfg : pools.all) {
            const Configuration next = step(cfg, maj);
            for (int i = 0; i < cfg.size(); ++i) {
                const auto predicted = predict_switch_point(cfg, i, r);
                const bool actual = next.get(i) != next.get(i + 1);
                c.require(predicted.has_value() == actual, cfg, "predictor presence wrong");
                if (predicted && actual)
                    c.require(predicted->first == next.get(i) &&
                                  predicted->second == next.get(i + 1),
                              cfg, "predicted switch values wrong");
            }
        }
    });

    run_check("block length formula for short blocks of the image", [&](Check& c) {
        for (const Configuration& cfg : pools.all) {
            const Configuration next = step(cfg, maj);
            for (const Block& b : blocks(next).blocks) {
                if (b.length > 2 * r + 1 || b.length == next.size()) continue;
                c.require(predict_block_length(cfg, next, b, r) == b.length, cfg,
                          "predicted block length differs from actual");
            }
        }
    });

    run_check("block count never increases", [&](Check& c) {
        for (const Configuration& cfg : pools.all)
            c.require(blocks(step(cfg, maj)).count() <= blocks(cfg).count(), cfg,
                      "block count increased");
    });

    run_check("block-length vector round trip", [&](Check& c) {
        for (const Configuration& cfg : pools.all)
            c.require(reconstruct(block_length_vector(cfg)) == cfg, cfg, "round trip failed");
    });

    run_check("stability labels: definitions, rule independence, run bound", [&](Check& c) {
        for (const Configuration& cfg : pools.all) {
            const StabilityMap ms = classify_stability(cfg, maj);
            const StabilityMap mm = classify_stability(cfg, min);
            const Configuration after_two = step(step(cfg, maj), maj);
            c.require(ms.labels == mm.labels, cfg, "majority/minority labels differ");
            for (int i = 0; i < cfg.size(); ++i) {
                if (ms.labels[i] == Stability::Unstable)
                    c.require(cfg.get(i) != after_two.get(i), cfg, "unstable cell kept its state");
                else
                    c.require(cfg.get(i) == after_two.get(i), cfg, "stable cell changed state");
            }
            const auto runs = unstable_runs(ms);
            c.require(runs.empty() == (after_two == cfg), cfg,
                      "transience and unstable cells disagree");
            for (const CellInterval& run : runs)
                c.require(run.length <= 2 * r, cfg, "unstable run longer than 2r");
        }
    });

    // Along a transient step the count of unstable cells can grow (001001011
    // under radius 2 goes from 2 to 3), so only the strongly stable count is
    // monotone; convergence itself is covered by the 4n-step check above.
    run_check("strongly stable cells accumulate and decide the limit", [&](Check& c) {
        for (const Configuration& cfg : pools.all) {
            const Configuration after_two = step(step(cfg, maj), maj);
            if (after_two == cfg) continue;
            const StabilityMap before = classify_stability(cfg, maj);
            auto count_strong = [](const StabilityMap& m) {
                int k = 0;
                for (Stability s : m.labels) k += s == Stability::StronglyStable;
                return k;
            };
            const int strong_before = count_strong(before);
            if (strong_before == 0) continue;
            const StabilityMap after = classify_stability(step(cfg, maj), maj);
            c.require(count_strong(after) > strong_before, cfg,
                      "strongly stable count did not grow on a transient step");

            const Trajectory traj = evolve(cfg, maj);
            c.require(traj.period == 1, cfg, "trajectory with strongly stable cells not fixed");
            bool long_runs = true;
            for (const Block& b : blocks(traj.states[traj.preperiod]).blocks)
                long_runs &= b.length >= r + 1;
            c.require(long_runs, cfg, "limit of strongly-stable trajectory has short runs");
        }
    });

    run_check("theorem trichotomy with case bounds", [&](Check& c) {
        for (const Configuration& cfg : pools.all) {
            const ClassificationResult res = classify_theorem(cfg, r);
            switch (res.outcome) {
                case TheoremCase::StronglyStableFixedForm:
                    for (const Block& b : blocks(cfg).blocks)
                        c.require(b.length >= r + 1, cfg, "short block in long-run case");
                    break;
                case TheoremCase::WeaklyStablePeriodic:
                    for (const Block& b : blocks(cfg).blocks)
                        c.require(b.length <= r, cfg, "long block in short-run case");
                    c.require(res.spatial_period.has_value() &&
                                  *res.spatial_period <= 2 * r * (r + 1) &&
                                  cfg.size() % *res.spatial_period == 0,
                              cfg, "spatial period out of bounds");
                    break;
                case TheoremCase::Transient:
                    c.require(res.max_unstable_run.has_value() && *res.max_unstable_run <= 2 * r,
                              cfg, "unstable run exceeds 2r");
                    break;
            }
        }
    });

    run_check("weakly stable rings are balanced", [&](Check& c) {
        for (const Configuration& cfg : pools.weakly)
            c.require(is_balanced_weakly_stable(cfg, r), cfg, "weakly stable ring unbalanced");
    });

    // The per-configuration swap is one-directional: a fixed point of either
    // rule is a 2-cycle of the other, while a 2-cycle whose partner is not its
    // complement stays a 2-cycle (001011 under radius 2). Per cell the
    // temporal period always swaps.
    run_check("minority swaps temporal periods", [&](Check& c) {
        for (const Configuration& cfg : pools.periodic_all) {
            const TemporalTag tag_maj = temporal_class(cfg, maj).tag;
            const TemporalTag tag_min = temporal_class(cfg, min).tag;
            if (tag_maj == TemporalTag::FixedPoint)
                c.require(tag_min == TemporalTag::TwoCycle, cfg,
                          "majority fixed point is not a minority 2-cycle");
            if (tag_min == TemporalTag::FixedPoint)
                c.require(tag_maj == TemporalTag::TwoCycle, cfg,
                          "minority fixed point is not a majority 2-cycle");

            const Configuration nx = step(cfg, maj);
            const Configuration mn = step(cfg, min);
            for (int i = 0; i < cfg.size(); ++i)
                c.require((nx.get(i) == cfg.get(i)) == (mn.get(i) != cfg.get(i)), cfg,
                          "cell temporal period did not swap");

            bool long_runs = true;
            for (const Block& b : blocks(cfg).blocks) long_runs &= b.length >= r + 1;
            if (long_runs) {
                c.require(tag_maj == TemporalTag::FixedPoint, cfg,
                          "long-run ring is not a majority fixed point");
                const TemporalClass tc = temporal_class(cfg, min);
                c.require(tc.tag == TemporalTag::TwoCycle && tc.partner &&
                              *tc.partner == complement(cfg),
                          cfg, "long-run ring is not a minority 2-cycle with its complement");
            }
        }
    });

    run_check("left/right mappings: values, injectivity, odd intervals", [&](Check& c) {
        for (const Configuration& cfg : pools.all) {
            const Configuration next = step(cfg, maj);
            const BlockDecomposition dp = blocks(cfg);
            const BlockDecomposition dn = blocks(next);
            if (dp.count() < 2 || dn.count() < 2) continue;
            std::set<int> left_starts, right_starts, mid_starts;
            bool all_short = true;
            for (const Block& b : dn.blocks) {
                const auto [fl, fr] = left_right_mapping(cfg, next, b, r);
                c.require(fl.value == b.value && fr.value == b.value, cfg,
                          "mapped block value differs");
                const auto interval = block_interval(dp, fl, fr);
                c.require(interval.size() % 2 == 1, cfg, "even block interval");
                left_starts.insert(fl.start);
                right_starts.insert(fr.start);
                mid_starts.insert(alignment(cfg, next, b, r).start);
                all_short &= b.length <= 2 * r + 1;
            }
            c.require(static_cast<int>(left_starts.size()) == dn.count(), cfg,
                      "left mapping not one-to-one");
            c.require(static_cast<int>(right_starts.size()) == dn.count(), cfg,
                      "right mapping not one-to-one");
            // blocks longer than 2r+1 or neighborhoods wrapping the ring can
            // fold two blocks onto one aligned image, so the one-to-one
            // property is asserted on non-wrapping short-block pairs and on
            // temporally periodic pairs
            const bool periodic = step(next, maj) == cfg;
            if (periodic || (all_short && 2 * r + 1 <= cfg.size()))
                c.require(static_cast<int>(mid_starts.size()) == dn.count(), cfg,
                          "alignment not one-to-one");
        }
    });

    run_check("aligned pairs: horizon, inverse, vector laws, difference vectors", [&](Check& c) {
        for (const Configuration& cfg : pools.weakly) {
            const AlignedPair pair = make_aligned_pair(cfg, r);
            const int k = pair.count();
            const int h = pair.horizon;
            c.require(h <= r, cfg, "horizon exceeds r");

            for (const Block& b : pair.decomp_next.blocks) {
                c.require(iterate_alignment(pair, b, 2) == b, cfg, "phi^2 is not the identity");
                c.require(iterate_alignment(pair, b, 4) == b, cfg, "phi^4 is not the identity");
            }
            for (const Block& b : pair.decomp.blocks) {
                const auto fwd = forward_alignment(pair.sigma, pair.sigma_next, b, r);
                c.require(fwd.has_value(), cfg, "forward alignment not total on periodic pair");
                if (fwd)
                    c.require(alignment(pair.sigma, pair.sigma_next, *fwd, r) == b, cfg,
                              "forward alignment is not the inverse");
            }

            for (int i = 0; i < k; ++i) {
                int alt = 0;
                for (int j = -h; j <= h; ++j) {
                    const int sign = ((j + h) % 2 == 0) ? 1 : -1;
                    alt += sign * pair.at(pair.v, i + j);
                }
                c.require(pair.v_next[i] == alt, cfg, "alternating-sum law violated");
                c.require(pair.v_next[i] + pair.at(pair.v_next, i + 1) ==
                              pair.at(pair.v, i - h) + pair.at(pair.v, i + h + 1),
                          cfg, "pair-sum law violated (next)");
                c.require(pair.v[i] + pair.at(pair.v, i + 1) ==
                              pair.at(pair.v_next, i - h) + pair.at(pair.v_next, i + h + 1),
                          cfg, "pair-sum law violated");
            }

            const DifferenceVectors dv = difference_vectors(pair);
            auto at = [&](const std::vector<int>& vec, std::int64_t i) {
                std::int64_t m = i % k;
                if (m < 0) m += k;
                return vec[m];
            };
            for (int i = 0; i < k; ++i) {
                c.require(at(dv.delta, i + 2 * h) == dv.delta[i], cfg, "delta not 2h-periodic");
                c.require(at(dv.delta_prime, i + 2 * h) == dv.delta_prime[i], cfg,
                          "delta' not 2h-periodic");
                c.require(dv.delta_prime[i] == at(dv.delta, i - h), cfg,
                          "delta' is not delta shifted by h");
            }
            for (int i = 0; i < k; ++i) {
                for (int m = 0; m <= 2 * h + 2; ++m) {
                    int sum = pair.v[i];
                    for (int j = 0; j < m; ++j) {
                        sum += at(dv.delta, i + 2 * j * (h + 1));
                        sum += at(dv.delta_prime, i + (2 * j + 1) * (h + 1));
                    }
                    c.require(sum == pair.at(pair.v, i + 2 * m * (h + 1)), cfg,
                              "telescoping sum violated");
                }
                std::int64_t cycle_sum = 0;
                for (int j = 0; j < 2 * h; ++j) {
                    cycle_sum += at(dv.delta, i + 2 * j * (h + 1));
                    cycle_sum += at(dv.delta_prime, i + (2 * j + 1) * (h + 1));
                }
                c.require(cycle_sum == 0, cfg, "difference-vector cycle sum nonzero");
            }
            for (int i = 0; i < k; ++i) {
                int window = 0;
                for (int j = 0; j < 2 * h; ++j) window += pair.at(pair.v, i + j);
                c.require(window <= 2 * r, cfg, "2h consecutive blocks longer than 2r");
            }

            // block length via signed sums over the f_left..f_right interval
            for (const Block& b : pair.decomp_next.blocks) {
                const auto [fl, fr] = left_right_mapping(pair.sigma, pair.sigma_next, b, r);
                int signed_sum = 0;
                for (const Block& x : block_interval(pair.decomp, fl, fr))
                    signed_sum += (x.value == b.value) ? x.length : -x.length;
                c.require(signed_sum == b.length, cfg, "interval block-length formula violated");
            }

            // exactly one switch point of sigma next to each edge of a block of sigma_next
            for (const Block& b : pair.decomp_next.blocks) {
                const std::int64_t i = b.start;
                const std::int64_t j = i + b.length - 1;
                auto switches_in = [&](std::int64_t from, std::int64_t to) {
                    int count = 0;
                    for (std::int64_t l = from; l < to; ++l)
                        count += pair.sigma.get(l) != pair.sigma.get(l + 1);
                    return count;
                };
                c.require(switches_in(i - r - 1, j - r) == 1, cfg,
                          "left edge interval switch count != 1");
                c.require(switches_in(i + r, j + r + 1) == 1, cfg,
                          "right edge interval switch count != 1");
            }
        }
    });

    // the generator search is bounded at r <= 3, so the pattern-based checks
    // only run in that range
    run_check("pattern enumeration equals brute force", [&](Check& c) {
        if (r > 3) return;
        for (int n = 1; n <= std::min(opts.n_max, 18); ++n) {
            const auto brute = enumerate_bruteforce(n, r, maj);
            const auto pattern = enumerate_from_patterns(n, r);
            c.require(brute == pattern,
                      "pattern and brute-force enumerations differ at n=" + std::to_string(n));
        }
    });

    run_check("generators stay periodic when repeated", [&](Check& c) {
        if (r > 3) return;
        for (const std::string& s : generate_patterns(r).generators) {
            const Configuration g = Configuration::from_string(s);
            c.require(canonicalize(g).representative == g, g, "generator is not self-canonical");
            for (int k = 1; k * static_cast<int>(s.size()) <= 64; ++k) {
                const Configuration cfg = parse_configuration(s, k);
                c.require(step(step(cfg, maj), maj) == cfg, cfg,
                          "repeated generator not temporally periodic");
            }
        }
    });

    run_check("renderer is byte-deterministic", [&](Check& c) {
        const Configuration seed_cfg = parse_configuration("0011010", 2);
        const Trajectory traj = evolve(seed_cfg, maj);
        std::vector<StabilityMap> maps;
        for (const Configuration& state : traj.states)
            maps.push_back(classify_stability(state, maj));
        for (RenderFormat f : {RenderFormat::Text, RenderFormat::Svg, RenderFormat::Pgm}) {
            RenderSpec spec{f, f != RenderFormat::Pgm, 4};
            const std::string a = render_spacetime(traj, maps, spec);
            const std::string b = render_spacetime(traj, maps, spec);
            c.require(a == b, "render output differs between runs");
            if (f == RenderFormat::Pgm) {
                std::ostringstream head;
                head << "P5\n" << seed_cfg.size() * 4 << " " << traj.states.size() * 4 << "\n255\n";
                c.require(a.rfind(head.str(), 0) == 0, "pgm header dimensions wrong");
            }
        }
    });

    return results;
}

} // namespace majring

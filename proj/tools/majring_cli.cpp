// majring: simulate, classify, enumerate, and verify one-dimensional cyclic
// majority/minority cellular automata.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "majring/blocks.hpp"
#include "majring/checks.hpp"
#include "majring/config.hpp"
#include "majring/enumeration.hpp"
#include "majring/errors.hpp"
#include "majring/mappings.hpp"
#include "majring/periodicity.hpp"
#include "majring/render.hpp"
#include "majring/stability.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace majring;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

Rule make_rule(const std::string& name, int r) {
    return name == "min" ? Rule::minority(r) : Rule::majority(r);
}

Configuration initial_config(const std::string& init, const std::string& pattern, int copies) {
    if (!init.empty()) return parse_configuration(init, 1);
    return parse_configuration(pattern, copies);
}

struct RunArgs {
    std::string rule = "maj";
    int radius = 1;
    std::string init;
    std::string pattern;
    int copies = 1;
    int steps = 1;
    std::string format = "text";
    bool overlay = false;
    int cell_size = 8;
};

int cmd_run(const RunArgs& args) {
    const Rule rule = make_rule(args.rule, args.radius);
    const Configuration start = initial_config(args.init, args.pattern, args.copies);

    Trajectory traj;
    traj.states.push_back(start);
    for (int t = 0; t < args.steps; ++t) traj.states.push_back(step(traj.states.back(), rule));

    std::vector<StabilityMap> maps;
    if (args.overlay)
        for (const Configuration& state : traj.states)
            maps.push_back(classify_stability(state, rule));

    if (args.format == "json") {
        json doc;
        doc["rule"] = args.rule;
        doc["radius"] = args.radius;
        doc["n"] = start.size();
        doc["steps"] = args.steps;
        json states = json::array();
        for (const Configuration& state : traj.states) states.push_back(state.to_string());
        doc["states"] = states;
        if (args.overlay) {
            json labels = json::array();
            for (const StabilityMap& m : maps) {
                std::string row;
                for (Stability s : m.labels) row += stability_letter(s);
                labels.push_back(row);
            }
            doc["stability"] = labels;
        }
        std::cout << doc.dump(2) << "\n";
        return kExitOk;
    }

    RenderSpec spec;
    spec.overlay = args.overlay;
    spec.cell_size = args.cell_size;
    if (args.format == "text")
        spec.format = RenderFormat::Text;
    else if (args.format == "svg")
        spec.format = RenderFormat::Svg;
    else
        spec.format = RenderFormat::Pgm;

    const std::string doc = render_spacetime(traj, maps, spec);
    std::fwrite(doc.data(), 1, doc.size(), stdout);
    return kExitOk;
}

struct ClassifyArgs {
    std::string rule = "maj";
    int radius = 1;
    std::string init;
    std::string format = "text";
};

int cmd_classify(const ClassifyArgs& args) {
    const Rule rule = make_rule(args.rule, args.radius);
    const Configuration cfg = parse_configuration(args.init, 1);

    const TemporalClass tc = temporal_class(cfg, rule);
    const ClassificationResult res = classify_theorem(cfg, args.radius);

    const char* temporal = tc.tag == TemporalTag::FixedPoint ? "FixedPoint"
                           : tc.tag == TemporalTag::TwoCycle ? "TwoCycle"
                                                             : "Transient";
    const char* outcome = res.outcome == TheoremCase::StronglyStableFixedForm
                              ? "StronglyStableFixedForm"
                          : res.outcome == TheoremCase::WeaklyStablePeriodic
                              ? "WeaklyStablePeriodic"
                              : "Transient";

    if (args.format == "json") {
        json doc;
        doc["rule"] = args.rule;
        doc["radius"] = args.radius;
        doc["n"] = cfg.size();
        doc["init"] = cfg.to_string();
        doc["temporal"] = temporal;
        if (tc.partner) doc["partner"] = tc.partner->to_string();
        doc["case"] = outcome;
        if (res.spatial_period) doc["spatial_period"] = *res.spatial_period;
        if (res.max_unstable_run) doc["max_unstable_run"] = *res.max_unstable_run;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "rule: " << args.rule << "\n";
        std::cout << "radius: " << args.radius << "\n";
        std::cout << "n: " << cfg.size() << "\n";
        std::cout << "init: " << cfg.to_string() << "\n";
        std::cout << "temporal: " << temporal << "\n";
        if (tc.partner) std::cout << "partner: " << tc.partner->to_string() << "\n";
        std::cout << "case: " << outcome << "\n";
        if (res.spatial_period) std::cout << "spatial_period: " << *res.spatial_period << "\n";
        if (res.max_unstable_run)
            std::cout << "max_unstable_run: " << *res.max_unstable_run << "\n";
    }
    return kExitOk;
}

struct EnumerateArgs {
    int radius = 1;
    int n = 4;
    std::string method = "brute";
    bool canonical = false;
    std::string rule = "maj";
};

void print_config_list(const std::vector<Configuration>& configs, bool canonical) {
    if (!canonical) {
        for (const Configuration& cfg : configs) std::cout << cfg.to_string() << "\n";
        return;
    }
    std::vector<std::string> reps;
    for (const Configuration& cfg : configs) {
        std::string rep = canonicalize(cfg).representative.to_string();
        if (std::find(reps.begin(), reps.end(), rep) == reps.end()) reps.push_back(std::move(rep));
    }
    std::sort(reps.begin(), reps.end());
    for (const std::string& rep : reps) std::cout << rep << "\n";
}

int cmd_enumerate(const EnumerateArgs& args) {
    const Rule rule = make_rule(args.rule, args.radius);
    if (args.method == "brute") {
        print_config_list(enumerate_bruteforce(args.n, args.radius, rule), args.canonical);
        return kExitOk;
    }
    if (args.method == "pattern") {
        print_config_list(enumerate_from_patterns(args.n, args.radius), args.canonical);
        return kExitOk;
    }
    const auto brute = enumerate_bruteforce(args.n, args.radius, rule);
    const auto pattern = enumerate_from_patterns(args.n, args.radius);
    std::cout << "# brute (" << brute.size() << ")\n";
    print_config_list(brute, args.canonical);
    std::cout << "# pattern (" << pattern.size() << ")\n";
    print_config_list(pattern, args.canonical);
    if (brute == pattern) {
        std::cout << "MATCH\n";
        return kExitOk;
    }
    std::cout << "MISMATCH\n";
    return kExitVerifyFailed;
}

struct VerifyArgs {
    int radius = 1;
    int n_max = 10;
    int samples = 1000;
    std::uint64_t seed = 0;
};

int cmd_verify(const VerifyArgs& args) {
    CheckOptions opts;
    opts.radius = args.radius;
    opts.n_max = args.n_max;
    opts.samples = args.samples;
    opts.seed = args.seed;

    bool all_passed = true;
    for (const CheckResult& res : run_property_suite(opts)) {
        if (res.passed) {
            std::cout << "PASS  " << res.name << "  (" << res.cases << " cases)\n";
        } else {
            std::cout << "FAIL  " << res.name << "  " << res.detail << "\n";
            all_passed = false;
        }
    }
    std::cout << (all_passed ? "all properties passed\n" : "property failures detected\n");
    return all_passed ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"one-dimensional cyclic majority/minority cellular automata"};
    app.require_subcommand(1);

    RunArgs run_args;
    CLI::App* run = app.add_subcommand("run", "evolve a configuration and render the diagram");
    run->add_option("--rule", run_args.rule)->check(CLI::IsMember({"maj", "min"}));
    run->add_option("-r,--radius", run_args.radius)->required()->check(CLI::PositiveNumber);
    auto* init_opt = run->add_option("--init", run_args.init);
    auto* pattern_opt = run->add_option("--pattern", run_args.pattern);
    run->add_option("--copies", run_args.copies)->check(CLI::PositiveNumber);
    run->add_option("--steps", run_args.steps)->required()->check(CLI::NonNegativeNumber);
    run->add_option("--format", run_args.format)
        ->check(CLI::IsMember({"text", "svg", "pgm", "json"}));
    run->add_flag("--overlay", run_args.overlay);
    run->add_option("--cell-size", run_args.cell_size)->check(CLI::PositiveNumber);
    init_opt->excludes(pattern_opt);
    pattern_opt->excludes(init_opt);

    ClassifyArgs classify_args;
    CLI::App* classify = app.add_subcommand("classify", "temporal and structural classification");
    classify->add_option("--rule", classify_args.rule)->check(CLI::IsMember({"maj", "min"}));
    classify->add_option("-r,--radius", classify_args.radius)
        ->required()
        ->check(CLI::PositiveNumber);
    classify->add_option("--init", classify_args.init)->required();
    classify->add_option("--format", classify_args.format)->check(CLI::IsMember({"text", "json"}));

    EnumerateArgs enum_args;
    CLI::App* enumerate =
        app.add_subcommand("enumerate", "list all temporally periodic configurations");
    enumerate->add_option("-r,--radius", enum_args.radius)->required()->check(CLI::PositiveNumber);
    enumerate->add_option("-n", enum_args.n)->required()->check(CLI::PositiveNumber);
    enumerate->add_option("--method", enum_args.method)
        ->check(CLI::IsMember({"brute", "pattern", "both"}));
    enumerate->add_flag("--canonical", enum_args.canonical);
    enumerate->add_option("--rule", enum_args.rule)->check(CLI::IsMember({"maj", "min"}));

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "run the structural property suite");
    verify->add_option("-r,--radius", verify_args.radius)->required()->check(CLI::PositiveNumber);
    verify->add_option("--n-max", verify_args.n_max)->required()->check(CLI::PositiveNumber);
    verify->add_option("--samples", verify_args.samples)->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", verify_args.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : kExitUsage;
    }

    try {
        if (run->parsed()) {
            if (run_args.init.empty() && run_args.pattern.empty())
                throw PreconditionViolated("one of --init or --pattern is required");
            return cmd_run(run_args);
        }
        if (classify->parsed()) return cmd_classify(classify_args);
        if (enumerate->parsed()) return cmd_enumerate(enum_args);
        if (verify->parsed()) return cmd_verify(verify_args);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

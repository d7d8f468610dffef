#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "majring/enumeration.hpp"
#include "majring/errors.hpp"
#include "oracles.hpp"

using namespace majring;

namespace {

// independent periodic-set oracle: scan all strings, two reference steps each
std::set<std::string> oracle_periodic_set(int n, int r) {
    std::set<std::string> out;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        const Configuration cfg = Configuration::from_rank(x, n);
        const Rule maj = Rule::majority(r);
        if (oracle::naive_step(oracle::naive_step(cfg, maj), maj) == cfg)
            out.insert(cfg.to_string());
    }
    return out;
}

std::set<std::string> as_strings(const std::vector<Configuration>& configs) {
    std::set<std::string> out;
    for (const Configuration& cfg : configs) out.insert(cfg.to_string());
    return out;
}

std::set<std::string> canonical_classes(const std::vector<std::string>& strings) {
    std::set<std::string> out;
    for (const std::string& s : strings)
        out.insert(canonicalize(Configuration::from_string(s)).representative.to_string());
    return out;
}

} // namespace

TEST_CASE("canonicalize") {
    CHECK(canonicalize(Configuration::from_string("1010")).representative.to_string() == "0101");

    // mirror and complement land in the same class
    const std::string base =
        canonicalize(Configuration::from_string("010011")).representative.to_string();
    CHECK(canonicalize(Configuration::from_string("110010")).representative.to_string() == base);
    CHECK(canonicalize(Configuration::from_string("101100")).representative.to_string() == base);

    CHECK(canonicalize(Configuration::from_string("0101")).symmetry_class_size == 2);
    CHECK(canonicalize(parse_configuration("0", 5)).symmetry_class_size == 2);
}

TEST_CASE("canonical representative is a fixed point of canonicalize") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 200; ++trial) {
        const Configuration cfg = oracle::random_config(rng, 1 + static_cast<int>(rng() % 16));
        const CanonicalForm cf = canonicalize(cfg);
        CHECK(canonicalize(cf.representative).representative == cf.representative);
        CHECK(cf.representative.to_string() <= cfg.to_string());
    }
}

TEST_CASE("brute force enumeration against the naive oracle") {
    const auto got = enumerate_bruteforce(4, 1, Rule::majority(1));
    CHECK(as_strings(got) == std::set<std::string>{"0000", "1111", "0011", "0110", "1100", "1001",
                                                   "0101", "1010"});
    CHECK(got.size() == 8);
    // output is sorted lexicographically
    for (std::size_t i = 1; i < got.size(); ++i)
        CHECK(got[i - 1].to_string() < got[i].to_string());

    CHECK(as_strings(enumerate_bruteforce(3, 1, Rule::majority(1))) ==
          std::set<std::string>{"000", "111"});
    CHECK(enumerate_bruteforce(5, 1, Rule::majority(1)).size() == 12);

    for (int n = 2; n <= 10; ++n)
        for (int r = 1; r <= 3; ++r)
            CHECK(as_strings(enumerate_bruteforce(n, r, Rule::majority(r))) ==
                  oracle_periodic_set(n, r));
}

TEST_CASE("brute force is independent of the worker count") {
    const auto one = enumerate_bruteforce(12, 2, Rule::majority(2), 1);
    const auto two = enumerate_bruteforce(12, 2, Rule::majority(2), 2);
    const auto five = enumerate_bruteforce(12, 2, Rule::majority(2), 5);
    CHECK(one == two);
    CHECK(one == five);
}

TEST_CASE("brute force budget") {
    CHECK_THROWS_AS(enumerate_bruteforce(27, 1, Rule::majority(1)), BudgetExceeded);
}

TEST_CASE("generator search budget") {
    CHECK_THROWS_AS(generate_patterns(4), BudgetExceeded);
}

TEST_CASE("generator sets match the published families") {
    const GeneratorSet r1 = generate_patterns(1);
    CHECK(r1.generators == std::vector<std::string>{"01"});

    const GeneratorSet r2 = generate_patterns(2);
    CHECK(canonical_classes(r2.generators) ==
          canonical_classes({"01", "0011", "001101", "001011"}));

    const GeneratorSet r3 = generate_patterns(3);
    CHECK(canonical_classes(r3.generators) ==
          canonical_classes({"01", "0011", "010011", "010110", "001110", "01011001", "10100101",
                             "10100110", "01011100", "10010011", "00011101", "10110001",
                             "0011001110", "1000111001"}));
}

TEST_CASE("generator strings stay periodic at every multiple of their length") {
    for (int r = 1; r <= 3; ++r) {
        const Rule maj = Rule::majority(r);
        for (const std::string& s : generate_patterns(r).generators) {
            CHECK(static_cast<int>(s.size()) <= 2 * r * (r + 1));
            for (int copies = 1; copies * static_cast<int>(s.size()) <= 64; ++copies) {
                const Configuration cfg = parse_configuration(s, copies);
                CHECK(step(step(cfg, maj), maj) == cfg);
            }
        }
    }
}

TEST_CASE("pattern enumeration agrees with brute force") {
    for (int n = 1; n <= 12; ++n)
        for (int r = 1; r <= 2; ++r)
            CHECK(enumerate_from_patterns(n, r) == enumerate_bruteforce(n, r, Rule::majority(r)));

    CHECK(as_strings(enumerate_from_patterns(5, 2)) == std::set<std::string>{"00000", "11111"});

    const auto with_generator = as_strings(enumerate_from_patterns(18, 3));
    std::string tile;
    for (int c = 0; c < 3; ++c) tile += "010011";
    const Configuration expanded = Configuration::from_string(tile);
    for (int k = 0; k < 18; ++k) CHECK(with_generator.count(rotate(expanded, k).to_string()) == 1);
}

TEST_CASE("periodic sets coincide for majority and minority") {
    for (int n = 2; n <= 10; ++n)
        for (int r = 1; r <= 2; ++r)
            CHECK(enumerate_bruteforce(n, r, Rule::majority(r)) ==
                  enumerate_bruteforce(n, r, Rule::minority(r)));
}

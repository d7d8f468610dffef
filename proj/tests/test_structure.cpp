#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "majring/blocks.hpp"
#include "majring/errors.hpp"
#include "oracles.hpp"

using namespace majring;

TEST_CASE("block decomposition") {
    const BlockDecomposition d = blocks(Configuration::from_string("001011"));
    REQUIRE(d.count() == 4);
    CHECK(d.blocks[0] == Block{0, 2, false});
    CHECK(d.blocks[1] == Block{2, 1, true});
    CHECK(d.blocks[2] == Block{3, 1, false});
    CHECK(d.blocks[3] == Block{4, 2, true});
    for (int k = 0; k < 4; ++k) CHECK(d.blocks[k].length == (k == 0 || k == 3 ? 2 : 1));

    const BlockDecomposition h = blocks(parse_configuration("0", 5));
    REQUIRE(h.count() == 1);
    CHECK(h.blocks[0].start == 0);
    CHECK(h.blocks[0].length == 5);

    // block containing cell 0 comes first even when it wraps
    const BlockDecomposition w = blocks(Configuration::from_string("1001"));
    REQUIRE(w.count() == 2);
    CHECK(w.blocks[0].start == 3);
    CHECK(w.blocks[0].length == 2);
    CHECK(w.blocks[0].value == true);
}

TEST_CASE("block decomposition matches the naive scan") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 24);
        const Configuration cfg = oracle::random_config(rng, n);
        const auto expect = oracle::naive_blocks(cfg);
        const BlockDecomposition got = blocks(cfg);
        REQUIRE(got.count() == static_cast<int>(expect.size()));
        for (std::size_t k = 0; k < expect.size(); ++k) {
            CHECK(got.blocks[k].start == expect[k].start);
            CHECK(got.blocks[k].length == expect[k].length);
            CHECK(got.blocks[k].value == expect[k].value);
        }
    }
}

TEST_CASE("switch points") {
    const auto sp = switch_points(Configuration::from_string("0011"));
    REQUIRE(sp.size() == 2);
    CHECK(sp[0] == std::pair{1, 2});
    CHECK(sp[1] == std::pair{3, 0});
    CHECK(switch_points(parse_configuration("1", 6)).empty());
}

TEST_CASE("block length vector and round trip") {
    const BlockLengthVector u = block_length_vector(parse_configuration("0011", 3));
    CHECK(u.lengths == std::vector<int>{2, 2, 2, 2, 2, 2});
    CHECK(u.start_value == false);

    const BlockLengthVector v = block_length_vector(Configuration::from_string("001011"));
    CHECK(v.lengths == std::vector<int>{2, 1, 1, 2});
    CHECK(v.start_value == false);

    const BlockLengthVector h = block_length_vector(parse_configuration("0", 5));
    CHECK(h.lengths == std::vector<int>{5});

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 400; ++trial) {
        const Configuration cfg = oracle::random_config(rng, 1 + static_cast<int>(rng() % 24));
        CHECK(reconstruct(block_length_vector(cfg)) == cfg);
    }
}

TEST_CASE("bias") {
    const Configuration cfg = Configuration::from_string("0011");
    CHECK(bias(cfg, CellInterval::wrapped(0, 3, 4)) == 0);
    CHECK(bias(cfg, CellInterval::wrapped(0, 1, 4)) == 2);
    CHECK(bias(parse_configuration("01", 4), CellInterval{0, 8}) == 0);
}

TEST_CASE("predict_block_length: worked example and guards") {
    const Configuration prev = parse_configuration("0011", 3);
    const Configuration next = step(prev, Rule::majority(2));
    REQUIRE(next.to_string() == "110011001100");

    const Block block{0, 2, true};
    CHECK(predict_block_length(prev, next, block, 2) == 2);

    // wrong pair
    CHECK_THROWS_AS(predict_block_length(next, prev, block, 2), PreconditionViolated);
    // block longer than 2r+1 is rejected
    const Configuration fp = Configuration::from_string("00001111");
    CHECK_THROWS_AS(predict_block_length(fp, fp, Block{0, 4, false}, 1), PreconditionViolated);
    // full-ring blocks are rejected even when short enough
    const Configuration homog = parse_configuration("0", 3);
    CHECK_THROWS_AS(predict_block_length(homog, homog, Block{0, 3, false}, 2),
                    PreconditionViolated);
}

TEST_CASE("predict_block_length equals the actual length on random pairs") {
    std::mt19937_64 rng(37);
    int qualifying = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 63);
        const int r = 1 + static_cast<int>(rng() % 4);
        const Configuration prev = oracle::random_config(rng, n);
        const Configuration next = step(prev, Rule::majority(r));
        for (const Block& b : blocks(next).blocks) {
            if (b.length > 2 * r + 1 || b.length == n) continue;
            ++qualifying;
            CHECK(predict_block_length(prev, next, b, r) == b.length);
        }
    }
    CHECK(qualifying > 1000);
}

TEST_CASE("predict_switch_point: worked example") {
    const Configuration prev = parse_configuration("0011", 3);
    const auto hit = predict_switch_point(prev, 11, 2);
    REQUIRE(hit.has_value());
    CHECK(hit->first == false);
    CHECK(hit->second == true);

    const Configuration next = step(prev, Rule::majority(2));
    CHECK(next.get(11) == false);
    CHECK(next.get(0) == true);

    for (int i = 0; i < 8; ++i)
        CHECK_FALSE(predict_switch_point(parse_configuration("0", 8), i, 1).has_value());
}

TEST_CASE("switch point argument, balance, and the converse predictor") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 63);
        const int r = 1 + static_cast<int>(rng() % 4);
        const Configuration prev = oracle::random_config(rng, n);
        const Configuration next = step(prev, Rule::majority(r));

        for (auto [i, j] : switch_points(next)) {
            CHECK(prev.get(i - r) == next.get(i));
            CHECK(prev.get(i + 1 + r) == next.get(j));
            CHECK(bias(prev, CellInterval::span(i - r + 1, i + r)) == 0);
        }
        for (int i = 0; i < n; ++i) {
            const auto predicted = predict_switch_point(prev, i, r);
            const bool actual = next.get(i) != next.get(i + 1);
            CHECK(predicted.has_value() == actual);
            if (predicted) {
                CHECK(predicted->first == next.get(i));
                CHECK(predicted->second == next.get(i + 1));
            }
        }
    }
}

TEST_CASE("block count never increases") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 48);
        const int r = 1 + static_cast<int>(rng() % 4);
        const Configuration cfg = oracle::random_config(rng, n);
        CHECK(blocks(step(cfg, Rule::majority(r))).count() <= blocks(cfg).count());
    }
}

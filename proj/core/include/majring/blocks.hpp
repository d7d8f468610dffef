#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "majring/config.hpp"

namespace majring {

// A maximal homogeneous block: `length` cells of equal state starting at
// `start`. Unless it covers the whole ring, the cells immediately before and
// after hold the opposite state. Two blocks are the same block iff they have
// the same start cell and value (the decomposition makes length redundant).
struct Block {
    int start = 0;
    int length = 1;
    bool value = false;

    int end(int n) const { return static_cast<int>((start + length - 1) % n); }

    friend bool operator==(const Block& a, const Block& b) {
        return a.start == b.start && a.value == b.value;
    }
};

// The maximal homogeneous blocks of a configuration in ring order, starting
// from the block containing cell 0. The blocks tile the ring; consecutive
// blocks alternate values; the count is even unless the ring is homogeneous.
struct BlockDecomposition {
    int n = 0;
    std::vector<Block> blocks;

    int count() const { return static_cast<int>(blocks.size()); }
    // index of the block containing a cell
    int block_index_of_cell(std::int64_t cell) const;
    const Block& block_of_cell(std::int64_t cell) const;
    // index of a block given by (start, value); throws PreconditionViolated if absent
    int index_of(const Block& b) const;
};

BlockDecomposition blocks(const Configuration& cfg);

// Pairs (i, i+1) with cfg(i) != cfg(i+1), in ring order.
std::vector<std::pair<int, int>> switch_points(const Configuration& cfg);

// The cyclic sequence of block lengths, anchored at the block containing
// cell 0. (lengths, start_value, anchor) reconstructs the configuration.
struct BlockLengthVector {
    std::vector<int> lengths;
    bool start_value = false;
    int anchor = 0; // first cell of block 0

    int sum() const;
};

BlockLengthVector block_length_vector(const Configuration& cfg);
Configuration reconstruct(const BlockLengthVector& v);

// #_0 - #_1 over the interval; 0 means balanced.
int bias(const Configuration& cfg, CellInterval iv);

// Predicts the length of a block [i,j] of next = step(prev, maj r) from prev
// alone, via |[i,j]| = #_beta(prev[i-r, j+r]) - #_not_beta(prev[j-r, i+r]).
// Requires block length <= 2r+1 and a proper block (the derivation is
// anchored at the switch points bordering the block).
int predict_block_length(const Configuration& prev, const Configuration& next, const Block& block,
                         int r);

// Decides from prev alone whether step(prev, maj r) has a switch point at
// (i, i+1): present iff the 2r-cell window [i-r+1, i+r] is balanced and
// prev(i-r) != prev(i+1+r), in which case the new values are
// (prev(i-r), prev(i+1+r)).
std::optional<std::pair<bool, bool>> predict_switch_point(const Configuration& prev,
                                                          std::int64_t i, int r);

} // namespace majring

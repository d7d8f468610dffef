#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "majring/blocks.hpp"
#include "majring/config.hpp"

namespace majring {

// Block-to-block mappings between a configuration and its majority image.
// All operations here require next == step(prev, majority r).

// For a block [i,j] of next, returns (f_left, f_right): the blocks of prev
// containing the cells j-r and i+r. Both carry the value of the input block.
std::pair<Block, Block> left_right_mapping(const Configuration& prev, const Configuration& next,
                                           const Block& block, int r);

// The contiguous blocks of `decomp` from `from` to `to` in ring order,
// endpoints included.
std::vector<Block> block_interval(const BlockDecomposition& decomp, const Block& from,
                                  const Block& to);

// The middle block of block_interval(blocks(prev), f_left, f_right); well
// defined because that interval always has odd size.
Block alignment(const Configuration& prev, const Configuration& next, const Block& block, int r);

// The unique block b' of next with alignment(prev, next, b') == block, or
// absent. Total on temporally periodic pairs, partial otherwise.
std::optional<Block> forward_alignment(const Configuration& prev, const Configuration& next,
                                       const Block& block, int r);

// A temporally periodic pair (sigma, sigma_next = step(sigma)) together with
// its aligned block-length vectors: entry k of v_next is the length of block
// k of sigma_next, and entry k of v is the length of the block of sigma that
// the alignment mapping assigns to it. The horizon is the block distance
// from the aligned block to f_left/f_right, constant over the pair.
struct AlignedPair {
    Configuration sigma;
    Configuration sigma_next;
    BlockDecomposition decomp;      // blocks(sigma)
    BlockDecomposition decomp_next; // blocks(sigma_next)
    std::vector<int> v;             // aligned lengths from sigma
    std::vector<int> v_next;        // lengths of the blocks of sigma_next
    std::vector<int> correspondence; // aligned index k -> index into decomp.blocks
    int horizon = 0;
    int radius = 1;

    int count() const { return static_cast<int>(v.size()); }
    int at(const std::vector<int>& vec, std::int64_t i) const {
        std::int64_t m = i % count();
        if (m < 0) m += count();
        return vec[m];
    }
};

// Requires step(step(sigma)) == sigma and a non-homogeneous ring.
AlignedPair make_aligned_pair(const Configuration& sigma, int r);

// Alternating iterate of the alignment mapping within a periodic pair:
// blocks of sigma_next map to sigma and back. k = 0 is the identity; k = 2
// returns the block it started from.
Block iterate_alignment(const AlignedPair& pair, const Block& block, int k);

// Delta_i  = v_next_{i+h+1} - v_i  and  Delta'_i = v_{i+h+1} - v_next_i for
// horizon h; defined for weakly stable pairs (all blocks of length <= r).
struct DifferenceVectors {
    std::vector<int> delta;
    std::vector<int> delta_prime;
    int step_size = 1; // h + 1
};

DifferenceVectors difference_vectors(const AlignedPair& pair);

} // namespace majring

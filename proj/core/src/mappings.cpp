#include "majring/mappings.hpp"

#include "majring/errors.hpp"

namespace majring {

namespace {

void require_image_pair(const Configuration& prev, const Configuration& next, int r) {
    if (next != step(prev, Rule::majority(r)))
        throw PreconditionViolated("next is not the majority image of prev");
}

} // namespace

std::pair<Block, Block> left_right_mapping(const Configuration& prev, const Configuration& next,
                                           const Block& block, int r) {
    require_image_pair(prev, next, r);
    blocks(next).index_of(block); // membership guard
    const BlockDecomposition dp = blocks(prev);

    const std::int64_t i = block.start;
    const std::int64_t j = i + block.length - 1;
    const Block f_left = dp.block_of_cell(j - r);
    const Block f_right = dp.block_of_cell(i + r);
    return {f_left, f_right};
}

std::vector<Block> block_interval(const BlockDecomposition& decomp, const Block& from,
                                  const Block& to) {
    const int a = decomp.index_of(from);
    const int b = decomp.index_of(to);
    const int k = decomp.count();
    int size = (b - a) % k;
    if (size < 0) size += k;
    ++size;

    std::vector<Block> out;
    out.reserve(size);
    for (int s = 0; s < size; ++s) out.push_back(decomp.blocks[(a + s) % k]);
    return out;
}

Block alignment(const Configuration& prev, const Configuration& next, const Block& block, int r) {
    const auto [f_left, f_right] = left_right_mapping(prev, next, block, r);
    const std::vector<Block> interval = block_interval(blocks(prev), f_left, f_right);
    if (interval.size() % 2 == 0)
        throw PreconditionViolated("alignment undefined: even block interval");
    return interval[interval.size() / 2];
}

std::optional<Block> forward_alignment(const Configuration& prev, const Configuration& next,
                                       const Block& block, int r) {
    require_image_pair(prev, next, r);
    blocks(prev).index_of(block); // membership guard
    const BlockDecomposition dn = blocks(next);

    // invert the full backward table; the backward mapping is one-to-one
    std::optional<Block> found;
    for (const Block& b : dn.blocks) {
        if (alignment(prev, next, b, r) == block) {
            if (found) throw Error("alignment mapping is not one-to-one");
            found = b;
        }
    }
    return found;
}

AlignedPair make_aligned_pair(const Configuration& sigma, int r) {
    AlignedPair pair;
    pair.sigma = sigma;
    pair.sigma_next = step(sigma, Rule::majority(r));
    if (step(pair.sigma_next, Rule::majority(r)) != sigma) throw NotTemporallyPeriodic();
    if (sigma.homogeneous()) throw HomogeneousConfiguration();

    pair.radius = r;
    pair.decomp = blocks(sigma);
    pair.decomp_next = blocks(pair.sigma_next);
    const int k = pair.decomp_next.count();
    if (pair.decomp.count() != k)
        throw Error("periodic pair with unequal block counts");

    pair.v.resize(k);
    pair.v_next.resize(k);
    pair.correspondence.resize(k);
    int horizon = -1;
    for (int i = 0; i < k; ++i) {
        const Block& b = pair.decomp_next.blocks[i];
        const auto [f_left, f_right] = left_right_mapping(pair.sigma, pair.sigma_next, b, r);
        const std::vector<Block> interval = block_interval(pair.decomp, f_left, f_right);
        if (interval.size() % 2 == 0) throw Error("even block interval in periodic pair");
        const int h = static_cast<int>(interval.size() / 2);
        if (horizon < 0)
            horizon = h;
        else if (horizon != h)
            throw Error("horizon is not constant over the pair");

        const Block target = interval[h];
        const int j = pair.decomp.index_of(target);
        pair.correspondence[i] = j;
        pair.v[i] = pair.decomp.blocks[j].length;
        pair.v_next[i] = b.length;
    }
    pair.horizon = horizon;

    // the alignment preserves adjacency, so the correspondence is a rotation
    for (int i = 0; i < k; ++i) {
        const int expect = (pair.correspondence[0] + i) % k;
        if (pair.correspondence[i] != expect)
            throw Error("alignment correspondence is not a rotation");
    }
    return pair;
}

Block iterate_alignment(const AlignedPair& pair, const Block& block, int k) {
    if (k < 0) throw PreconditionViolated("iterate count must be >= 0");

    // locate the block in one of the two decompositions
    bool in_next = false;
    for (const Block& b : pair.decomp_next.blocks)
        if (b == block) in_next = true;
    if (!in_next) pair.decomp.index_of(block); // throws if absent from both

    Block cur = block;
    for (int s = 0; s < k; ++s) {
        if (in_next)
            cur = alignment(pair.sigma, pair.sigma_next, cur, pair.radius);
        else
            cur = alignment(pair.sigma_next, pair.sigma, cur, pair.radius);
        in_next = !in_next;
    }
    return cur;
}

DifferenceVectors difference_vectors(const AlignedPair& pair) {
    for (const Block& b : pair.decomp.blocks)
        if (b.length > pair.radius)
            throw PreconditionViolated("difference vectors require a weakly stable pair");
    for (const Block& b : pair.decomp_next.blocks)
        if (b.length > pair.radius)
            throw PreconditionViolated("difference vectors require a weakly stable pair");

    const int k = pair.count();
    const int h = pair.horizon;
    DifferenceVectors dv;
    dv.step_size = h + 1;
    dv.delta.resize(k);
    dv.delta_prime.resize(k);
    for (int i = 0; i < k; ++i) {
        dv.delta[i] = pair.at(pair.v_next, i + h + 1) - pair.v[i];
        dv.delta_prime[i] = pair.at(pair.v, i + h + 1) - pair.v_next[i];
    }
    return dv;
}

} // namespace majring

#include "majring/blocks.hpp"

#include <algorithm>

#include "majring/errors.hpp"

namespace majring {

int BlockDecomposition::block_index_of_cell(std::int64_t cell) const {
    std::int64_t c = cell % n;
    if (c < 0) c += n;
    // cells of block k: start, ..., start+length-1 (mod n)
    for (int k = 0; k < count(); ++k) {
        const Block& b = blocks[k];
        std::int64_t off = (c - b.start) % n;
        if (off < 0) off += n;
        if (off < b.length) return k;
    }
    throw PreconditionViolated("cell not covered by decomposition");
}

const Block& BlockDecomposition::block_of_cell(std::int64_t cell) const {
    return blocks[block_index_of_cell(cell)];
}

int BlockDecomposition::index_of(const Block& b) const {
    for (int k = 0; k < count(); ++k)
        if (blocks[k] == b) return k;
    throw PreconditionViolated("block does not belong to decomposition");
}

BlockDecomposition blocks(const Configuration& cfg) {
    const int n = cfg.size();
    BlockDecomposition d;
    d.n = n;

    std::vector<int> starts; // cells i with cfg(i-1) != cfg(i)
    for (int i = 0; i < n; ++i)
        if (cfg.get(i - 1) != cfg.get(i)) starts.push_back(i);

    if (starts.empty()) {
        d.blocks.push_back({0, n, cfg.get(0)});
        return d;
    }

    // begin with the block containing cell 0: the one starting at the largest
    // start if cell 0 is not itself a block start (that block wraps past 0)
    std::size_t k0 = 0;
    if (starts[0] != 0) k0 = starts.size() - 1;

    for (std::size_t j = 0; j < starts.size(); ++j) {
        const int s = starts[(k0 + j) % starts.size()];
        const int next_s = starts[(k0 + j + 1) % starts.size()];
        int len = (next_s - s) % n;
        if (len <= 0) len += n;
        d.blocks.push_back({s, len, cfg.get(s)});
    }
    return d;
}

std::vector<std::pair<int, int>> switch_points(const Configuration& cfg) {
    std::vector<std::pair<int, int>> out;
    const int n = cfg.size();
    for (int i = 0; i < n; ++i)
        if (cfg.get(i) != cfg.get(i + 1)) out.emplace_back(i, (i + 1) % n);
    return out;
}

int BlockLengthVector::sum() const {
    int s = 0;
    for (int l : lengths) s += l;
    return s;
}

BlockLengthVector block_length_vector(const Configuration& cfg) {
    const BlockDecomposition d = blocks(cfg);
    BlockLengthVector v;
    v.start_value = d.blocks[0].value;
    v.anchor = d.blocks[0].start;
    v.lengths.reserve(d.blocks.size());
    for (const Block& b : d.blocks) v.lengths.push_back(b.length);
    return v;
}

Configuration reconstruct(const BlockLengthVector& v) {
    const int n = v.sum();
    Configuration cfg(n);
    std::int64_t cell = v.anchor;
    bool value = v.start_value;
    for (int l : v.lengths) {
        for (int j = 0; j < l; ++j) cfg.set(cell++, value);
        value = !value;
    }
    return cfg;
}

int bias(const Configuration& cfg, CellInterval iv) {
    return count_states(cfg, iv, false) - count_states(cfg, iv, true);
}

int predict_block_length(const Configuration& prev, const Configuration& next, const Block& block,
                         int r) {
    if (next != step(prev, Rule::majority(r)))
        throw PreconditionViolated("next is not the majority image of prev");
    if (block.length > 2 * r + 1)
        throw PreconditionViolated("block longer than 2r+1");
    if (block.length == next.size())
        throw PreconditionViolated("block covers the whole ring; no bordering switch points");
    const BlockDecomposition dn = blocks(next);
    const int k = dn.index_of(block);
    if (dn.blocks[k].length != block.length)
        throw PreconditionViolated("block does not belong to blocks(next)");

    const std::int64_t i = block.start;
    const std::int64_t j = i + block.length - 1; // unreduced end
    const int same = count_states(prev, CellInterval::span(i - r, j + r), block.value);
    const int other = count_states(prev, CellInterval::span(j - r, i + r), !block.value);
    return same - other;
}

std::optional<std::pair<bool, bool>> predict_switch_point(const Configuration& prev,
                                                          std::int64_t i, int r) {
    const bool left = prev.get(i - r);
    const bool right = prev.get(i + 1 + r);
    if (left == right) return std::nullopt;
    if (bias(prev, CellInterval::span(i - r + 1, i + r)) != 0) return std::nullopt;
    return std::make_pair(left, right);
}

} // namespace majring

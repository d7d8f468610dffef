#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace majring {

// A sequence of cells first, first+1, ..., first+length-1, read modulo the
// ring size. The sequence may be longer than the ring, in which case cells
// repeat and are counted with multiplicity (this is what makes radius-r
// neighborhoods with 2r+1 > n behave like the infinite periodic extension).
struct CellInterval {
    std::int64_t first = 0;
    std::int64_t length = 1;

    // Integer span [first, last] with last >= first; length = last - first + 1.
    static CellInterval span(std::int64_t first, std::int64_t last);
    // Ring interval [i, j]: the cells i, i+1, ..., j mod n (wrap if j < i).
    static CellInterval wrapped(std::int64_t i, std::int64_t j, int n);
    // The radius-r neighborhood of a cell: [center-r, center+r], 2r+1 cells.
    static CellInterval neighborhood(std::int64_t center, int radius);

    std::int64_t last() const { return first + length - 1; }
};

enum class RuleKind { Majority, Minority };

struct Rule {
    RuleKind kind = RuleKind::Majority;
    int radius = 1;

    static Rule majority(int r) { return {RuleKind::Majority, r}; }
    static Rule minority(int r) { return {RuleKind::Minority, r}; }

    bool operator==(const Rule&) const = default;
};

// A cyclic binary string of length n; cell i holds a state in {0,1}.
// Equality is positional. Bits are packed into 64-bit words; unused high
// bits of the last word are kept zero so whole-value comparison is valid.
class Configuration {
public:
    Configuration() = default;
    explicit Configuration(int n);

    static Configuration from_string(std::string_view bits);
    // Builds the configuration whose text form has lexicographic rank `rank`
    // among all length-n strings (cell 0 is the most significant bit).
    static Configuration from_rank(std::uint64_t rank, int n);

    int size() const { return n_; }
    bool get(std::int64_t i) const;
    void set(std::int64_t i, bool v);
    int count_ones() const;
    bool homogeneous() const;

    // Cell 0 first.
    std::string to_string() const;

    // Raw word for rings with n <= 64; bit i is cell i.
    std::uint64_t word() const;

    bool operator==(const Configuration&) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;

    std::int64_t wrap(std::int64_t i) const;
};

// text repeated `copies` times; throws EmptyText / InvalidCharacter.
Configuration parse_configuration(std::string_view text, int copies);

// Number of positions l in the sequence denoted by `iv` with cfg(l mod n) == state,
// counted with multiplicity when the sequence is longer than the ring.
int count_states(const Configuration& cfg, CellInterval iv, bool state);

Configuration complement(const Configuration& cfg);
// result(i) = cfg(i - k): the pattern moves k cells to the right.
Configuration rotate(const Configuration& cfg, std::int64_t k);
// result(i) = cfg(n - 1 - i).
Configuration mirror(const Configuration& cfg);

// One synchronous update. Majority: out(i) = 0 iff zeros outnumber ones in
// the radius-r neighborhood of i, else 1 (the tie branch is unreachable
// because neighborhoods hold an odd number of cells). Minority is the
// per-cell complement of the majority output.
Configuration step(const Configuration& cfg, Rule rule);

struct Trajectory {
    std::vector<Configuration> states; // sigma_0 ... sigma_T
    std::size_t preperiod = 0;         // first index of the detected cycle
    int period = 1;                    // 1 or 2
};

// Iterates `step` until a cycle of period <= 2 appears (sigma_t == sigma_{t-1}
// or sigma_t == sigma_{t-2}); longer periods cannot occur under these rules.
// Throws BudgetExceeded after max_steps updates.
Trajectory evolve(const Configuration& cfg, Rule rule, std::size_t max_steps);
// Same with the default budget max_steps = 4n.
Trajectory evolve(const Configuration& cfg, Rule rule);

// Bit-parallel stepper for rings with n <= 64: all cells update in a handful
// of word operations via carry-save accumulation of the neighborhood sums.
class WordRule {
public:
    WordRule(int n, int r);

    int ring_size() const { return n_; }
    std::uint64_t step(std::uint64_t bits, RuleKind kind = RuleKind::Majority) const;
    std::uint64_t mask() const { return mask_; }

private:
    int n_;
    int r_;
    int planes_;
    std::uint64_t mask_;
    // residue rotations of the ring and how many neighborhood offsets hit each
    std::vector<std::pair<int, int>> shift_mult_;
};

} // namespace majring

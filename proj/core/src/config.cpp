#include "majring/config.hpp"

#include <bit>
#include <cassert>

#include "majring/errors.hpp"

namespace majring {

CellInterval CellInterval::span(std::int64_t first, std::int64_t last) {
    if (last < first) throw PreconditionViolated("span requires last >= first");
    return {first, last - first + 1};
}

CellInterval CellInterval::wrapped(std::int64_t i, std::int64_t j, int n) {
    if (n < 1) throw PreconditionViolated("ring size must be positive");
    std::int64_t d = (j - i) % n;
    if (d < 0) d += n;
    return {i, d + 1};
}

CellInterval CellInterval::neighborhood(std::int64_t center, int radius) {
    if (radius < 1) throw PreconditionViolated("radius must be >= 1");
    return {center - radius, 2 * static_cast<std::int64_t>(radius) + 1};
}

Configuration::Configuration(int n) : n_(n), words_((n + 63) / 64, 0) {
    if (n < 1) throw PreconditionViolated("ring size must be positive");
}

Configuration Configuration::from_string(std::string_view bits) {
    return parse_configuration(bits, 1);
}

Configuration Configuration::from_rank(std::uint64_t rank, int n) {
    if (n > 64) throw PreconditionViolated("from_rank requires n <= 64");
    Configuration cfg(n);
    for (int i = 0; i < n; ++i) cfg.set(i, (rank >> (n - 1 - i)) & 1u);
    return cfg;
}

std::int64_t Configuration::wrap(std::int64_t i) const {
    std::int64_t m = i % n_;
    return m < 0 ? m + n_ : m;
}

bool Configuration::get(std::int64_t i) const {
    const std::int64_t k = wrap(i);
    return (words_[k >> 6] >> (k & 63)) & 1u;
}

void Configuration::set(std::int64_t i, bool v) {
    const std::int64_t k = wrap(i);
    const std::uint64_t bit = std::uint64_t{1} << (k & 63);
    if (v)
        words_[k >> 6] |= bit;
    else
        words_[k >> 6] &= ~bit;
}

int Configuration::count_ones() const {
    int total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
}

bool Configuration::homogeneous() const {
    const int ones = count_ones();
    return ones == 0 || ones == n_;
}

std::string Configuration::to_string() const {
    std::string s(n_, '0');
    for (int i = 0; i < n_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

std::uint64_t Configuration::word() const {
    if (n_ > 64) throw PreconditionViolated("word() requires n <= 64");
    return words_[0];
}

Configuration parse_configuration(std::string_view text, int copies) {
    if (text.empty()) throw EmptyText();
    if (copies < 1) throw PreconditionViolated("copies must be >= 1");
    for (std::size_t p = 0; p < text.size(); ++p)
        if (text[p] != '0' && text[p] != '1') throw InvalidCharacter(text[p], p);

    Configuration cfg(static_cast<int>(text.size()) * copies);
    for (int c = 0; c < copies; ++c)
        for (std::size_t p = 0; p < text.size(); ++p)
            cfg.set(c * static_cast<int>(text.size()) + static_cast<int>(p), text[p] == '1');
    return cfg;
}

int count_states(const Configuration& cfg, CellInterval iv, bool state) {
    if (iv.length < 1) throw PreconditionViolated("interval length must be >= 1");
    const int n = cfg.size();
    const std::int64_t full = iv.length / n;
    const std::int64_t rest = iv.length % n;
    const int per_ring = state ? cfg.count_ones() : n - cfg.count_ones();
    int total = static_cast<int>(full) * per_ring;
    for (std::int64_t j = 0; j < rest; ++j)
        if (cfg.get(iv.first + j) == state) ++total;
    return total;
}

Configuration complement(const Configuration& cfg) {
    Configuration out(cfg.size());
    for (int i = 0; i < cfg.size(); ++i) out.set(i, !cfg.get(i));
    return out;
}

Configuration rotate(const Configuration& cfg, std::int64_t k) {
    Configuration out(cfg.size());
    for (int i = 0; i < cfg.size(); ++i) out.set(i, cfg.get(i - k));
    return out;
}

Configuration mirror(const Configuration& cfg) {
    Configuration out(cfg.size());
    for (int i = 0; i < cfg.size(); ++i) out.set(i, cfg.get(cfg.size() - 1 - i));
    return out;
}

Configuration step(const Configuration& cfg, Rule rule) {
    if (rule.radius < 1) throw PreconditionViolated("radius must be >= 1");
    const int n = cfg.size();
    const int r = rule.radius;
    const std::int64_t window = 2 * static_cast<std::int64_t>(r) + 1;
    const std::int64_t full = window / n;
    const std::int64_t rest = window % n;
    const int total1 = cfg.count_ones();

    Configuration out(n);
    // ones in the cells [i-r, i-r+rest-1]; slides one cell per iteration
    std::int64_t w = 0;
    for (std::int64_t j = 0; j < rest; ++j) w += cfg.get(-r + j);
    for (int i = 0; i < n; ++i) {
        const std::int64_t c1 = full * total1 + w;
        const std::int64_t c0 = window - c1;
        bool v = !(c0 > c1);
        if (rule.kind == RuleKind::Minority) v = !v;
        out.set(i, v);
        if (rest > 0) {
            w -= cfg.get(i - r);
            w += cfg.get(i - r + rest);
        }
    }
    return out;
}

Trajectory evolve(const Configuration& cfg, Rule rule, std::size_t max_steps) {
    if (max_steps < 1) throw PreconditionViolated("max_steps must be >= 1");
    Trajectory traj;
    traj.states.push_back(cfg);
    for (std::size_t t = 1; t <= max_steps; ++t) {
        traj.states.push_back(step(traj.states.back(), rule));
        if (traj.states[t] == traj.states[t - 1]) {
            traj.preperiod = t - 1;
            traj.period = 1;
            return traj;
        }
        if (t >= 2 && traj.states[t] == traj.states[t - 2]) {
            traj.preperiod = t - 2;
            traj.period = 2;
            return traj;
        }
    }
    throw BudgetExceeded("no cycle of period <= 2 within " + std::to_string(max_steps) + " steps");
}

Trajectory evolve(const Configuration& cfg, Rule rule) {
    return evolve(cfg, rule, 4 * static_cast<std::size_t>(cfg.size()));
}

namespace {

// y bit i = x bit ((i + d) mod n), for 0 <= d < n
inline std::uint64_t ring_shift(std::uint64_t x, int d, int n, std::uint64_t mask) {
    if (d == 0) return x;
    return ((x >> d) | (x << (n - d))) & mask;
}

} // namespace

WordRule::WordRule(int n, int r) : n_(n), r_(r) {
    if (n < 1 || n > 64) throw PreconditionViolated("WordRule requires 1 <= n <= 64");
    if (r < 1) throw PreconditionViolated("radius must be >= 1");
    mask_ = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);

    std::vector<int> mult(n, 0);
    for (int d = -r; d <= r; ++d) {
        int m = d % n;
        if (m < 0) m += n;
        ++mult[m];
    }
    for (int m = 0; m < n; ++m)
        if (mult[m] > 0) shift_mult_.emplace_back(m, mult[m]);

    planes_ = 1;
    while ((1 << planes_) <= 2 * r + 1) ++planes_;
}

std::uint64_t WordRule::step(std::uint64_t bits, RuleKind kind) const {
    bits &= mask_;
    // bit-sliced per-cell counter of ones in the neighborhood
    std::uint64_t counts[8] = {};
    for (auto [shift, mult] : shift_mult_) {
        const std::uint64_t plane = ring_shift(bits, shift, n_, mask_);
        for (int k = 0; (mult >> k) != 0; ++k) {
            if (!((mult >> k) & 1)) continue;
            std::uint64_t carry = plane;
            for (int level = k; carry != 0; ++level) {
                const std::uint64_t t = counts[level] & carry;
                counts[level] ^= carry;
                carry = t;
            }
        }
    }
    // per-cell test: count >= r+1 (cells where ones hold the strict majority)
    const int threshold = r_ + 1;
    std::uint64_t gt = 0, eq = mask_;
    for (int k = planes_; k >= 0; --k) {
        const std::uint64_t xk = counts[k];
        if ((threshold >> k) & 1) {
            eq &= xk;
        } else {
            gt |= eq & xk;
            eq &= ~xk;
        }
    }
    const std::uint64_t majority = gt | eq;
    return (kind == RuleKind::Minority) ? ~majority & mask_ : majority;
}

} // namespace majring

#pragma once

#include <string>
#include <vector>

#include "majring/config.hpp"

namespace majring {

// Least representative of the orbit of a configuration under
// {rotations} x {identity, mirror} x {identity, complement}, by string order.
struct CanonicalForm {
    Configuration representative;
    int symmetry_class_size = 1; // distinct configurations in the orbit
};

CanonicalForm canonicalize(const Configuration& cfg);

// All configurations of length n with step^2(cfg) == cfg, in lexicographic
// order of their text form. The scan is partitioned into contiguous rank
// ranges processed by independent workers and merged in range order, so the
// output does not depend on the worker count. workers = 0 means one worker
// per hardware thread. Throws BudgetExceeded for n > 26.
std::vector<Configuration> enumerate_bruteforce(int n, int r, Rule rule, unsigned workers = 0);

// The weakly stable generator family for radius r: primitive cyclic strings s
// with every run of length <= r and |s| <= 2r(r+1) such that the ring s is
// temporally periodic. A ring made of repeated copies of such a string is
// temporally periodic at every multiple of |s|. Stored as canonical class
// representatives, ordered by (length, text). The long-block family is not
// enumerated here; it is described by its regular form.
// The candidate scan is exponential in 2r(r+1); r > 3 throws BudgetExceeded.
struct GeneratorSet {
    int radius = 1;
    std::vector<std::string> generators;
};

GeneratorSet generate_patterns(int r);

// Reconstructs every temporally periodic configuration of length n from the
// two families: configurations whose runs all have length >= r+1 (plus the
// two homogeneous rings), and all rotations of repeated generator strings
// whose length divides n. Sorted lexicographically.
std::vector<Configuration> enumerate_from_patterns(int n, int r);

} // namespace majring

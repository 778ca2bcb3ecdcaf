#ifndef HCREV_ORACLE_HPP
#define HCREV_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "hcrev/hctree.hpp"
#include "hcrev/instance.hpp"

namespace hcrev {

/// Ground truth from exhaustive search: the exact optimum, one witness
/// achieving it, and how many candidates were enumerated (self-checkable
/// against the closed-form count).
struct OracleResult {
    Rational optimum;
    HcTree witness;
    std::uint64_t trees_enumerated;
};

/// Maximum revenue over every rooted binary tree with leaves 1..n, by
/// inserting leaf k+1 into each of the 2k-1 edges of every tree on k
/// leaves. The witness is the first maximizer in enumeration order (slots
/// scanned by ascending node id). Capped at n = 10 (34,459,425 trees).
OracleResult opt_tree_bruteforce(const SimilarityGraph& g);

/// Number of trees the enumerator visits for n leaves; equals the double
/// factorial (2n-3)!!. Capped at n = 12.
std::uint64_t enumerate_tree_count(int n);

/// Monte Carlo revenue of the random balanced-split baseline. Means are
/// exact rationals (integer accumulation over the trials); the standard
/// errors are floating-point diagnostics.
struct RandRevenueEstimate {
    int trials;
    Rational total_mean;
    double total_se;
    std::vector<Rational> edge_mean;  // parallel to g.edges()
    std::vector<double> edge_se;
};

RandRevenueEstimate rand_revenue_estimate(const SimilarityGraph& g, int trials,
                                          std::uint64_t seed);

}  // namespace hcrev

#endif

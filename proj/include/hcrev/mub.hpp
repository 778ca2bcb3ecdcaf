#ifndef HCREV_MUB_HPP
#define HCREV_MUB_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hcrev/instance.hpp"

namespace hcrev {

/// Balanced bipartition of the data points 1..n (n even). Side 0 is always
/// the side containing leaf 1, so equal partitions compare equal.
class Bisection {
  public:
    Bisection(int n, std::vector<std::uint8_t> side_of_leaf);

    int n() const { return n_; }
    /// Side bit of a 1-based leaf id.
    int side(int leaf) const { return side_[leaf - 1]; }
    const std::vector<std::uint8_t>& sides() const { return side_; }
    std::vector<int> side_leaves(int which) const;

    /// One character per leaf 1..n, '0' for leaf 1's side.
    std::string to_bit_string() const;

    bool operator==(const Bisection& o) const { return n_ == o.n_ && side_ == o.side_; }

  private:
    int n_;
    std::vector<std::uint8_t> side_;
};

/// Intra-side and cut weights of a bisection; W_L + W_R + cut = total.
struct BisectionWeights {
    Rational intra_left;   // side 0
    Rational intra_right;  // side 1
    Rational cut;
};

BisectionWeights bisection_weights(const SimilarityGraph& g, const Bisection& b);

/// Revenue of the depth-2 tree induced by a bisection: every uncut edge
/// earns w * (n - n/2), cut edges earn nothing, so R = (n/2) * (W_L + W_R).
Rational bisection_revenue(const SimilarityGraph& g, const Bisection& b);

/// Exact max-uncut bisection by enumerating the C(n-1, n/2-1) sides that
/// contain leaf 1. Ties go to the lexicographically smallest side containing
/// leaf 1. Refuses n above `n_cap` (default 24, about 1.35M subsets).
Bisection mub_exact(const SimilarityGraph& g, int n_cap = 24);

/// Best-improvement cross-pair swap local search from a seeded random
/// balanced start; returns a swap-local optimum of the uncut weight.
Bisection mub_local_search(const SimilarityGraph& g, std::uint64_t seed);

/// Local search from an explicit start, exposed for tests and experiments.
Bisection mub_local_search_from(const SimilarityGraph& g, Bisection start);

/// Uniformly random balanced bipartition.
Bisection mub_random(const SimilarityGraph& g, std::uint64_t seed);

}  // namespace hcrev

#endif

#ifndef HCREV_ALGOS_HPP
#define HCREV_ALGOS_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "hcrev/hctree.hpp"
#include "hcrev/instance.hpp"
#include "hcrev/mub.hpp"

namespace hcrev {

enum class Algo { rand, avglink, bisect_random, opt };
enum class MubSolver { exact, local, random };

Algo parse_algo(std::string_view name);
MubSolver parse_solver(std::string_view name);
std::string to_string(Algo a);
std::string to_string(MubSolver s);

/// How a run is parameterized. The solver field only matters for
/// bisect_random; ratio_label records the guarantee each solver stands in
/// for (the exact solver plays the role of a ratio-1 oracle, the local
/// search is an unproven heuristic stand-in for a 0.8776-approximation).
struct AlgorithmConfig {
    Algo algo = Algo::rand;
    MubSolver solver = MubSolver::exact;
    std::uint64_t seed = 0;
    int trials = 1;

    bool randomized() const { return algo == Algo::rand || algo == Algo::bisect_random; }
    void validate() const;  // throws std::invalid_argument
};

std::string solver_ratio_label(MubSolver s);

/// Splits 1..n into uniformly random halves (sizes ceil/floor of m/2, the
/// larger half on the left), recursively, down to singletons.
HcTree random_tree(int n, std::uint64_t seed);

/// Agglomerative clustering merging the pair of clusters with the largest
/// average cross weight; ties prefer the smallest (min leaf of one side,
/// min leaf of the other), and the cluster holding the smaller min leaf
/// becomes the left child. Comparisons are exact (cross-multiplied).
HcTree average_linkage(const SimilarityGraph& g);

/// Root split from the chosen max-uncut-bisection solver (side of leaf 1
/// on the left), then each side is completed by random balanced splitting.
HcTree bisect_then_random(const SimilarityGraph& g, MubSolver solver, std::uint64_t seed);

/// Derandomized half-revenue extraction: picks the orientation by
/// conditional expectations, lays the leaves on a line, and returns the
/// best of the n/2 window bisections {x, ..., x + n/2 - 1} (smallest x on
/// ties). Guarantees bisection_revenue(g, result) >= revenue(g, t) / 2.
Bisection extract_half_revenue_bisection(const SimilarityGraph& g, const HcTree& t);

}  // namespace hcrev

#endif

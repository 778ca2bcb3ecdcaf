#ifndef HCREV_INSTANCE_HPP
#define HCREV_INSTANCE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hcrev/rational.hpp"

namespace hcrev {

/// One similarity edge; endpoints are 1-based leaf ids with u < v.
struct Edge {
    int u;
    int v;
    Rational w;

    bool operator==(const Edge& o) const { return u == o.u && v == o.v && w == o.w; }
};

/// Weighted similarity graph on data points 1..n. Immutable after
/// construction; edges are normalized (u < v), deduplicated and sorted.
/// Zero-weight edges are not stored: an absent pair and a weight-0 pair
/// are equivalent for every objective in this library.
class SimilarityGraph {
  public:
    SimilarityGraph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool operator==(const SimilarityGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

  private:
    int n_;
    std::vector<Edge> edges_;
};

/// Integer view of the edge weights over a common denominator. Hot paths
/// (oracles, Monte Carlo loops, solvers) run on these int64 numerators and
/// convert back to Rational at the boundary; weight denominators always
/// divide 10^9, so the common denominator does too.
struct ScaledWeights {
    std::int64_t den;
    std::vector<std::int64_t> num;  // parallel to graph.edges()
};

ScaledWeights scale_weights(const SimilarityGraph& g);

/// Parses the edge-list format: first line "n m", then m lines "i j w";
/// lines starting with '#' (and blank lines) are ignored. Errors carry the
/// 1-based line number.
SimilarityGraph parse_graph(std::istream& in);
SimilarityGraph parse_graph(const std::string& text);

/// Emits the same format with edges sorted by (u, v); parse(serialize(g))
/// reproduces g exactly.
std::string serialize_graph(const SimilarityGraph& g);

/// Perfect matching (1,2), (3,4), ... with unit weights; n must be even.
SimilarityGraph gen_matching(int n);

/// G(n, p)-style instance: each pair kept independently with probability
/// `density`, weight uniform in {1, ..., max_weight}. Same seed, same graph.
SimilarityGraph gen_random(int n, double density, std::int64_t max_weight, std::uint64_t seed);

Rational total_weight(const SimilarityGraph& g);

}  // namespace hcrev

#endif

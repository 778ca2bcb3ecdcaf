#include "hcrev/algos.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hcrev/ordering.hpp"
#include "hcrev/rng.hpp"

namespace hcrev {

Algo parse_algo(std::string_view name) {
    if (name == "rand") return Algo::rand;
    if (name == "avglink") return Algo::avglink;
    if (name == "bisect-random") return Algo::bisect_random;
    if (name == "opt") return Algo::opt;
    throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

MubSolver parse_solver(std::string_view name) {
    if (name == "exact") return MubSolver::exact;
    if (name == "local") return MubSolver::local;
    if (name == "random") return MubSolver::random;
    throw std::invalid_argument("unknown solver: " + std::string(name));
}

std::string to_string(Algo a) {
    switch (a) {
        case Algo::rand: return "rand";
        case Algo::avglink: return "avglink";
        case Algo::bisect_random: return "bisect-random";
        case Algo::opt: return "opt";
    }
    return "?";
}

std::string to_string(MubSolver s) {
    switch (s) {
        case MubSolver::exact: return "exact";
        case MubSolver::local: return "local";
        case MubSolver::random: return "random";
    }
    return "?";
}

std::string solver_ratio_label(MubSolver s) {
    switch (s) {
        case MubSolver::exact: return "1";
        case MubSolver::local: return "heuristic (stands in for 0.8776)";
        case MubSolver::random: return "baseline (no guarantee)";
    }
    return "?";
}

void AlgorithmConfig::validate() const {
    if (trials < 1) throw std::invalid_argument("trial count must be at least 1");
}

namespace {

/// Recursive balanced splitter over an explicit label set; shuffling the
/// slice makes every half-sized subset equally likely.
int random_split(TreeBuilder& b, std::vector<int>& labels, int lo, int hi, Rng& rng) {
    int m = hi - lo;
    if (m == 1) return b.leaf(labels[lo]);
    for (int i = m; i > 1; --i) {
        int j = lo + (int)rng.below((std::uint64_t)i);
        std::swap(labels[lo + i - 1], labels[j]);
    }
    int mid = lo + (m + 1) / 2;
    int left = random_split(b, labels, lo, mid, rng);
    int right = random_split(b, labels, mid, hi, rng);
    return b.join(left, right);
}

}  // namespace

HcTree random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("need at least one leaf");
    TreeBuilder b(n);
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    Rng rng(seed);
    return b.build(random_split(b, labels, 0, n, rng));
}

HcTree average_linkage(const SimilarityGraph& g) {
    int n = g.n();
    TreeBuilder b(n);
    if (n == 1) return b.build(b.leaf(1));

    ScaledWeights sw = scale_weights(g);
    struct Cluster {
        int node;
        int min_leaf;
        std::int64_t size;
    };
    std::vector<Cluster> cl(n);
    for (int i = 0; i < n; ++i) cl[i] = {b.leaf(i + 1), i + 1, 1};
    // cross[i][j]: total scaled weight between clusters i and j
    std::vector<std::vector<int128>> cross(n, std::vector<int128>(n, 0));
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        int u = g.edges()[e].u - 1, v = g.edges()[e].v - 1;
        cross[u][v] += sw.num[e];
        cross[v][u] += sw.num[e];
    }

    std::vector<int> live(n);
    std::iota(live.begin(), live.end(), 0);
    while (live.size() > 1) {
        int best_a = -1, best_b = -1;
        for (std::size_t x = 0; x < live.size(); ++x) {
            for (std::size_t y = x + 1; y < live.size(); ++y) {
                int i = live[x], j = live[y];
                if (cl[j].min_leaf < cl[i].min_leaf) std::swap(i, j);
                if (best_a < 0) {
                    best_a = i, best_b = j;
                    continue;
                }
                // avg(i,j) vs avg(best): cross-multiplied exact comparison
                int128 lhs = cross[i][j] * (int128)(cl[best_a].size * cl[best_b].size);
                int128 rhs = cross[best_a][best_b] * (int128)(cl[i].size * cl[j].size);
                bool better = lhs > rhs;
                if (lhs == rhs)
                    better = cl[i].min_leaf < cl[best_a].min_leaf ||
                             (cl[i].min_leaf == cl[best_a].min_leaf &&
                              cl[j].min_leaf < cl[best_b].min_leaf);
                if (better) best_a = i, best_b = j;
            }
        }
        int a = best_a, bb = best_b;
        int merged = b.join(cl[a].node, cl[bb].node);
        cl[a] = {merged, cl[a].min_leaf, cl[a].size + cl[bb].size};
        for (int k : live)
            if (k != a && k != bb) cross[a][k] = cross[k][a] = cross[a][k] + cross[bb][k];
        live.erase(std::find(live.begin(), live.end(), bb));
    }
    return b.build(cl[live[0]].node);
}

HcTree bisect_then_random(const SimilarityGraph& g, MubSolver solver, std::uint64_t seed) {
    int n = g.n();
    if (n % 2 != 0) throw std::invalid_argument("bisection needs an even number of points");
    Bisection root = [&] {
        switch (solver) {
            case MubSolver::exact: return mub_exact(g);
            case MubSolver::local: return mub_local_search(g, derive_seed(seed, 1));
            default: return mub_random(g, derive_seed(seed, 1));
        }
    }();

    TreeBuilder b(n);
    Rng rng(derive_seed(seed, 2));
    std::vector<int> side0 = root.side_leaves(0);
    std::vector<int> side1 = root.side_leaves(1);
    int left = random_split(b, side0, 0, (int)side0.size(), rng);
    int right = random_split(b, side1, 0, (int)side1.size(), rng);
    return b.build(b.join(left, right));
}

Bisection extract_half_revenue_bisection(const SimilarityGraph& g, const HcTree& t) {
    int n = g.n();
    if (n % 2 != 0) throw std::invalid_argument("bisection needs an even number of points");
    if (t.n() != n) throw std::invalid_argument("graph and tree sizes differ");

    Orientation o = conditional_expectation_ordering(g, t);
    LeafOrdering pi = leaf_ordering(t, o);

    std::vector<std::uint8_t> side(n);
    Rational best_rev;
    int half = n / 2;
    std::vector<std::uint8_t> best;
    for (int x = 1; x <= half; ++x) {
        for (int p = 1; p <= n; ++p) side[pi.leaf_at(p) - 1] = (p >= x && p < x + half) ? 0 : 1;
        Rational rev = bisection_revenue(g, Bisection(n, side));
        if (best.empty() || rev > best_rev) {
            best_rev = rev;
            best = side;
        }
    }
    return Bisection(n, best);
}

}  // namespace hcrev

#include "hcrev/mub.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hcrev/rng.hpp"

namespace hcrev {

namespace {

void require_even(int n, const char* op) {
    if (n % 2 != 0) throw std::invalid_argument(std::string(op) + " requires an even number of data points");
}

/// Balanced side assignment from a shuffle; uniform over bipartitions.
std::vector<std::uint8_t> random_sides(int n, Rng& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    std::vector<std::uint8_t> side(n, 1);
    for (int i = 0; i < n / 2; ++i) side[perm[i]] = 0;
    return side;
}

}  // namespace

Bisection::Bisection(int n, std::vector<std::uint8_t> side_of_leaf) : n_(n), side_(std::move(side_of_leaf)) {
    require_even(n_, "bisection");
    if ((int)side_.size() != n_) throw std::invalid_argument("side assignment must cover all n leaves");
    int zeros = 0;
    for (auto s : side_) {
        if (s > 1) throw std::invalid_argument("side bits must be 0 or 1");
        zeros += s == 0;
    }
    if (zeros != n_ / 2) throw std::invalid_argument("bisection sides must have n/2 leaves each");
    if (side_[0] != 0)
        for (auto& s : side_) s ^= 1;
}

std::vector<int> Bisection::side_leaves(int which) const {
    std::vector<int> out;
    out.reserve(n_ / 2);
    for (int leaf = 1; leaf <= n_; ++leaf)
        if (side_[leaf - 1] == which) out.push_back(leaf);
    return out;
}

std::string Bisection::to_bit_string() const {
    std::string s(n_, '0');
    for (int i = 0; i < n_; ++i) s[i] = char('0' + side_[i]);
    return s;
}

BisectionWeights bisection_weights(const SimilarityGraph& g, const Bisection& b) {
    if (g.n() != b.n()) throw std::invalid_argument("bisection does not match the graph");
    BisectionWeights w;
    for (const auto& e : g.edges()) {
        if (b.side(e.u) != b.side(e.v))
            w.cut += e.w;
        else if (b.side(e.u) == 0)
            w.intra_left += e.w;
        else
            w.intra_right += e.w;
    }
    return w;
}

Rational bisection_revenue(const SimilarityGraph& g, const Bisection& b) {
    auto w = bisection_weights(g, b);
    return Rational(g.n() / 2) * (w.intra_left + w.intra_right);
}

Bisection mub_exact(const SimilarityGraph& g, int n_cap) {
    int n = g.n();
    require_even(n, "mub_exact");
    if (n > n_cap)
        throw std::invalid_argument("mub_exact: n=" + std::to_string(n) + " exceeds the enumeration cap " +
                                    std::to_string(n_cap));
    auto sw = scale_weights(g);
    int m = (int)g.edges().size();
    std::vector<int> eu(m), ev(m);
    for (int i = 0; i < m; ++i) {
        eu[i] = g.edges()[i].u - 1;
        ev[i] = g.edges()[i].v - 1;
    }

    int half = n / 2;
    // Members of leaf 1's side besides leaf 1, as 0-based ids in {1..n-1},
    // advanced in lexicographic order so the first maximum seen is the
    // lexicographically smallest optimal side.
    std::vector<int> pick(half - 1);
    std::iota(pick.begin(), pick.end(), 1);

    int128 best = -1;
    std::vector<std::uint8_t> best_side;
    std::vector<std::uint8_t> side(n);
    for (;;) {
        std::fill(side.begin(), side.end(), 1);
        side[0] = 0;
        for (int p : pick) side[p] = 0;
        int128 uncut = 0;
        for (int i = 0; i < m; ++i)
            if (side[eu[i]] == side[ev[i]]) uncut += sw.num[i];
        if (uncut > best) {
            best = uncut;
            best_side = side;
        }
        // next combination
        int i = half - 2;
        while (i >= 0 && pick[i] == n - (half - 1 - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int k = i + 1; k < half - 1; ++k) pick[k] = pick[k - 1] + 1;
    }
    return Bisection(n, std::move(best_side));
}

Bisection mub_local_search_from(const SimilarityGraph& g, Bisection start) {
    int n = g.n();
    require_even(n, "mub_local_search");
    if (n != start.n()) throw std::invalid_argument("start bisection does not match the graph");
    auto sw = scale_weights(g);

    // Dense weight lookup and per-leaf weight into each side.
    std::vector<std::int64_t> w((size_t)n * n, 0);
    for (size_t i = 0; i < g.edges().size(); ++i) {
        int u = g.edges()[i].u - 1, v = g.edges()[i].v - 1;
        w[(size_t)u * n + v] = w[(size_t)v * n + u] = sw.num[i];
    }
    std::vector<std::uint8_t> side(start.sides());
    std::vector<int128> to_side0(n, 0), to_side1(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (side[b] == 0)
                to_side0[a] += w[(size_t)a * n + b];
            else
                to_side1[a] += w[(size_t)a * n + b];
        }

    for (;;) {
        int128 best_gain = 0;
        int best_u = -1, best_v = -1;
        for (int u = 0; u < n; ++u) {
            if (side[u] != 0) continue;
            for (int v = 0; v < n; ++v) {
                if (side[v] != 1) continue;
                int128 gain = (to_side1[u] - to_side0[u]) + (to_side0[v] - to_side1[v]) -
                              2 * w[(size_t)u * n + v];
                if (gain > best_gain) {
                    best_gain = gain;
                    best_u = u;
                    best_v = v;
                }
            }
        }
        if (best_u < 0) break;
        side[best_u] = 1;
        side[best_v] = 0;
        for (int a = 0; a < n; ++a) {
            std::int64_t wu = w[(size_t)a * n + best_u], wv = w[(size_t)a * n + best_v];
            to_side0[a] += wv - wu;
            to_side1[a] += wu - wv;
        }
    }
    return Bisection(n, std::move(side));
}

Bisection mub_local_search(const SimilarityGraph& g, std::uint64_t seed) {
    require_even(g.n(), "mub_local_search");
    Rng rng(seed);
    return mub_local_search_from(g, Bisection(g.n(), random_sides(g.n(), rng)));
}

Bisection mub_random(const SimilarityGraph& g, std::uint64_t seed) {
    require_even(g.n(), "mub_random");
    Rng rng(seed);
    return Bisection(g.n(), random_sides(g.n(), rng));
}

}  // namespace hcrev

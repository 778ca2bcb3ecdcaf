#include "hcrev/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "hcrev/algos.hpp"
#include "hcrev/rng.hpp"

namespace hcrev {

namespace {

constexpr int kOptCap = 10;
constexpr int kCountCap = 12;

/// Mutable tree under leaf-by-leaf construction. Node ids: leaf z is z-1,
/// the internal node created when leaf z arrives is n+z-2 (the root of the
/// two-leaf base tree is id n). The Dasgupta cost of the present leaves is
/// maintained incrementally: inserting a leaf grows by one the LCA subtree
/// of every present edge whose LCA is an ancestor of the graft point, and
/// adds the new leaf's own edges at their LCAs.
struct Enumerator {
    int n;
    std::vector<std::int64_t> w;     // dense n*n scaled weights
    std::vector<int> par, lft, rgt;  // -1 when absent
    std::vector<int> size;
    std::vector<std::int64_t> lcaw;  // scaled weight of present edges with this LCA
    int128 cost = 0;                 // scaled Dasgupta cost of the present tree
    int root = -1;

    std::vector<std::vector<std::int64_t>> wo_stack;  // per-level undo scratch

    explicit Enumerator(const SimilarityGraph& g) : n(g.n()) {
        ScaledWeights sw = scale_weights(g);
        w.assign((std::size_t)n * n, 0);
        for (std::size_t e = 0; e < g.edges().size(); ++e) {
            int u = g.edges()[e].u - 1, v = g.edges()[e].v - 1;
            w[(std::size_t)u * n + v] = w[(std::size_t)v * n + u] = sw.num[e];
        }
        int slots = 2 * n - 1;
        par.assign(slots, -1);
        lft.assign(slots, -1);
        rgt.assign(slots, -1);
        size.assign(slots, 1);
        lcaw.assign(slots, 0);
        wo_stack.assign(n + 1, {});
        // base tree on leaves 1 and 2
        par[0] = par[1] = n;
        lft[n] = 0;
        rgt[n] = 1;
        size[n] = 2;
        lcaw[n] = w[1];
        cost = 2 * (int128)w[1];
        root = n;
    }

    std::int64_t weight_to_subtree(int leaf_id, int sub) const {
        const std::int64_t* row = &w[(std::size_t)leaf_id * n];
        std::int64_t total = 0;
        int stack[64];
        int top = 0;
        stack[top++] = sub;
        while (top > 0) {
            int u = stack[--top];
            if (lft[u] < 0) {
                total += row[u];
            } else {
                stack[top++] = lft[u];
                stack[top++] = rgt[u];
            }
        }
        return total;
    }

    /// Cost growth if leaf z were grafted above node x; no mutation.
    int128 insert_delta(int z, int x) const {
        int zi = z - 1;
        int128 d = (int128)weight_to_subtree(zi, x) * (size[x] + 1);
        int c = x;
        for (int a = par[x]; a >= 0; c = a, a = par[a]) {
            int other = (lft[a] == c) ? rgt[a] : lft[a];
            d += lcaw[a] + (int128)weight_to_subtree(zi, other) * (size[a] + 1);
        }
        return d;
    }

    /// Grafts leaf z above node x; records enough in wo_stack[z] to undo.
    void insert(int z, int x) {
        int zi = z - 1, v = n + z - 2;
        auto& wo = wo_stack[z];
        wo.clear();
        std::int64_t wx = weight_to_subtree(zi, x);
        int128 d = (int128)wx * (size[x] + 1);
        int c = x;
        for (int a = par[x]; a >= 0; c = a, a = par[a]) {
            int other = (lft[a] == c) ? rgt[a] : lft[a];
            std::int64_t woa = weight_to_subtree(zi, other);
            d += lcaw[a] + (int128)woa * (size[a] + 1);
            wo.push_back(woa);
        }
        int up = par[x];
        par[v] = up;
        if (up < 0)
            root = v;
        else if (lft[up] == x)
            lft[up] = v;
        else
            rgt[up] = v;
        lft[v] = x;
        rgt[v] = zi;
        par[x] = v;
        par[zi] = v;
        size[v] = size[x] + 1;
        lcaw[v] = wx;
        std::size_t i = 0;
        for (int a = up; a >= 0; a = par[a], ++i) {
            size[a] += 1;
            lcaw[a] += wo[i];
        }
        cost += d;
    }

    void remove(int z, int x) {
        int zi = z - 1, v = n + z - 2;
        const auto& wo = wo_stack[z];
        int up = par[v];
        int128 d = (int128)lcaw[v] * size[v];
        std::size_t i = 0;
        for (int a = up; a >= 0; a = par[a], ++i) {
            size[a] -= 1;
            lcaw[a] -= wo[i];
            d += lcaw[a] + (int128)wo[i] * (size[a] + 1);
        }
        par[x] = up;
        if (up < 0)
            root = x;
        else if (lft[up] == v)
            lft[up] = x;
        else
            rgt[up] = x;
        par[zi] = -1;
        par[v] = -1;
        lft[v] = rgt[v] = -1;
        lcaw[v] = 0;
        size[v] = 1;
        cost -= d;
    }

    HcTree snapshot() const {
        std::vector<HcTree::Node> nodes(2 * n - 1);
        for (int i = 0; i < 2 * n - 1; ++i) {
            nodes[i].parent = par[i];
            nodes[i].left = lft[i];
            nodes[i].right = rgt[i];
            nodes[i].label = (i < n) ? i + 1 : 0;
        }
        return HcTree(std::move(nodes), root);
    }
};

}  // namespace

OracleResult opt_tree_bruteforce(const SimilarityGraph& g) {
    int n = g.n();
    if (n > kOptCap)
        throw std::invalid_argument("brute-force oracle is capped at n = 10, got n = " +
                                    std::to_string(n));
    if (n == 1) {
        TreeBuilder b(1);
        return {Rational(0), b.build(b.leaf(1)), 1};
    }

    ScaledWeights sw = scale_weights(g);
    int128 wtot = 0;
    for (std::int64_t x : sw.num) wtot += x;

    Enumerator en(g);
    std::uint64_t count = 0;
    bool have_best = false;
    int128 best = 0;
    std::vector<int> choice(n + 1, -1);       // slot picked for each inserted leaf
    std::vector<int> best_choice(n + 1, -1);  // snapshot of the argmax path

    auto consider = [&](int z, int x, int128 rev) {
        ++count;
        if (!have_best || rev > best) {
            have_best = true;
            best = rev;
            best_choice = choice;
            best_choice[z] = x;
        }
    };

    if (n == 2) {
        consider(2, -1, (int128)n * wtot - en.cost);
    } else {
        // Recursion over the number of present leaves; at the final leaf the
        // cost delta is evaluated without mutating the tree.
        auto rec = [&](auto&& self, int k) -> void {
            int z = k + 1;
            for (int pass = 0; pass < 2; ++pass) {
                int from = pass == 0 ? 0 : en.n;
                int to = pass == 0 ? k : en.n + k - 1;
                for (int x = from; x < to; ++x) {
                    if (z == n) {
                        consider(z, x, (int128)n * wtot - (en.cost + en.insert_delta(z, x)));
                    } else {
                        choice[z] = x;
                        en.insert(z, x);
                        self(self, k + 1);
                        en.remove(z, x);
                    }
                }
            }
        };
        rec(rec, 2);
    }

    // Rebuild the winning tree by replaying its insertion path.
    Enumerator out(g);
    for (int z = 3; z <= n; ++z)
        if (best_choice[z] >= 0) out.insert(z, best_choice[z]);
    HcTree witness = out.snapshot();
    Rational optimum = Rational::fraction(best, sw.den);
    return {optimum, std::move(witness), count};
}

std::uint64_t enumerate_tree_count(int n) {
    if (n < 1) throw std::invalid_argument("need at least one leaf");
    if (n > kCountCap)
        throw std::invalid_argument("tree counting is capped at n = 12, got n = " +
                                    std::to_string(n));
    if (n <= 2) return 1;

    // Pointer-only version of the oracle's enumeration. Above n = 10 the
    // final level is counted in closed form (2k-1 slots per tree on k
    // leaves) to stay affordable; below that the final slots are iterated
    // one by one, so the count checks the slot iteration itself.
    std::vector<int> par(2 * n - 1, -1), lft(2 * n - 1, -1), rgt(2 * n - 1, -1);
    int root = n;
    par[0] = par[1] = n;
    lft[n] = 0;
    rgt[n] = 1;
    bool closed_last_level = n > 10;

    std::uint64_t count = 0;
    auto rec = [&](auto&& self, int k) -> void {
        int z = k + 1;
        if (closed_last_level && z == n) {
            count += 2 * (std::uint64_t)k - 1;
            return;
        }
        int zi = z - 1, v = n + z - 2;
        for (int pass = 0; pass < 2; ++pass) {
            int from = pass == 0 ? 0 : n;
            int to = pass == 0 ? k : n + k - 1;
            for (int x = from; x < to; ++x) {
                if (z == n) {
                    ++count;
                    continue;
                }
                int up = par[x];
                par[v] = up;
                if (up < 0)
                    root = v;
                else if (lft[up] == x)
                    lft[up] = v;
                else
                    rgt[up] = v;
                lft[v] = x;
                rgt[v] = zi;
                par[x] = v;
                par[zi] = v;
                self(self, k + 1);
                par[x] = up;
                if (up < 0)
                    root = x;
                else if (lft[up] == v)
                    lft[up] = x;
                else
                    rgt[up] = x;
                par[zi] = -1;
                par[v] = -1;
                lft[v] = rgt[v] = -1;
            }
        }
    };
    rec(rec, 2);
    (void)root;
    return count;
}

RandRevenueEstimate rand_revenue_estimate(const SimilarityGraph& g, int trials,
                                          std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trial count must be at least 1");
    int n = g.n();
    std::size_t m = g.edges().size();
    ScaledWeights sw = scale_weights(g);

    std::vector<int128> esum(m, 0);
    std::vector<long double> esq(m, 0.0L);
    int128 tsum = 0;
    long double tsq = 0.0L;

    for (int t = 0; t < trials; ++t) {
        HcTree tree = random_tree(n, derive_seed(seed, (std::uint64_t)t));
        int128 trial_total = 0;
        for (std::size_t e = 0; e < m; ++e) {
            const Edge& ed = g.edges()[e];
            int sz = subtree_size_at_lca(tree, ed.u, ed.v);
            int128 rev = (int128)sw.num[e] * (n - sz);
            esum[e] += rev;
            esq[e] += (long double)rev * (long double)rev;
            trial_total += rev;
        }
        tsum += trial_total;
        tsq += (long double)trial_total * (long double)trial_total;
    }

    auto se_of = [&](int128 sum, long double sq) -> double {
        if (trials < 2) return 0.0;
        long double den = (long double)sw.den;
        long double mean = (long double)sum / den / trials;
        long double var = (sq / (den * den) - (long double)trials * mean * mean) / (trials - 1);
        if (var < 0) var = 0;
        return (double)std::sqrt((double)(var / trials));
    };

    RandRevenueEstimate out;
    out.trials = trials;
    out.total_mean = Rational::fraction(tsum, (int128)sw.den * trials);
    out.total_se = se_of(tsum, tsq);
    out.edge_mean.reserve(m);
    out.edge_se.reserve(m);
    for (std::size_t e = 0; e < m; ++e) {
        out.edge_mean.push_back(Rational::fraction(esum[e], (int128)sw.den * trials));
        out.edge_se.push_back(se_of(esum[e], esq[e]));
    }
    return out;
}

}  // namespace hcrev

#include "doctest.h"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hcrev/algos.hpp"
#include "hcrev/hctree.hpp"
#include "hcrev/instance.hpp"
#include "hcrev/ordering.hpp"
#include "hcrev/rng.hpp"

using namespace hcrev;

namespace {

std::vector<int> leaves_under(const HcTree& t, int id) {
    std::vector<int> out;
    std::vector<int> stack = {id};
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        if (t.is_leaf(cur)) {
            out.push_back(t.node(cur).label);
            continue;
        }
        stack.push_back(t.node(cur).left);
        stack.push_back(t.node(cur).right);
    }
    return out;
}

}  // namespace

TEST_CASE("orientation bits validate, index and print") {
    HcTree t = parse_newick("((1,2),(3,4));");
    CHECK(t.internal_count() == 3);

    Orientation none = Orientation::all_original(t);
    CHECK(none.internal_count() == 3);
    CHECK(none.to_bit_string() == "000");

    Orientation m = Orientation::from_mask(t, 0b101);
    CHECK(m.to_bit_string() == "101");
    CHECK(m.swapped(0));
    CHECK(!m.swapped(1));
    CHECK(m.swapped(2));
    CHECK(Orientation::from_mask(t, 0) == none);

    CHECK_THROWS_AS(Orientation({0, 2, 0}), std::invalid_argument);
}

TEST_CASE("leaf orderings follow the swap bits") {
    HcTree t = parse_newick("((1,2),(3,4));");

    LeafOrdering identity = leaf_ordering(t, Orientation::all_original(t));
    for (int k = 1; k <= 4; ++k) {
        CHECK(identity.pos(k) == k);
        CHECK(identity.leaf_at(k) == k);
    }

    // Breadth-first internal order: root, then its left child, then its
    // right child.
    LeafOrdering root_swapped = leaf_ordering(t, Orientation({1, 0, 0}));
    CHECK(root_swapped.pos(3) == 1);
    CHECK(root_swapped.pos(4) == 2);
    CHECK(root_swapped.pos(1) == 3);
    CHECK(root_swapped.pos(2) == 4);

    LeafOrdering left_swapped = leaf_ordering(t, Orientation({0, 1, 0}));
    CHECK(left_swapped.pos(2) == 1);
    CHECK(left_swapped.pos(1) == 2);
    CHECK(left_swapped.pos(3) == 3);
    CHECK(left_swapped.pos(4) == 4);
    CHECK(left_swapped.leaf_at(1) == 2);
    CHECK(left_swapped.leaf_at(2) == 1);
}

TEST_CASE("leaf ordering rejects mismatched input") {
    HcTree t = parse_newick("((1,2),(3,4));");
    HcTree small = parse_newick("(1,2);");
    CHECK_THROWS_AS(leaf_ordering(t, Orientation::all_original(small)), std::invalid_argument);

    LeafOrdering identity = leaf_ordering(t, Orientation::all_original(t));
    CHECK_THROWS_AS(identity.pos(0), std::out_of_range);
    CHECK_THROWS_AS(identity.pos(5), std::out_of_range);
    CHECK_THROWS_AS(identity.leaf_at(0), std::out_of_range);
    CHECK_THROWS_AS(identity.leaf_at(5), std::out_of_range);
}

TEST_CASE("orientation sampling is deterministic and uniform") {
    HcTree pair = parse_newick("(1,2);");
    HcTree quad = parse_newick("((1,2),(3,4));");

    CHECK(sample_orientation(quad, 12345) == sample_orientation(quad, 12345));

    // One fair bit: 10^4 draws, sigma = sqrt(0.25 / 10^4) = 0.005.
    int ones = 0;
    for (int i = 0; i < 10000; ++i)
        if (sample_orientation(pair, derive_seed(7, i)).swapped(0)) ++ones;
    double freq = ones / 10000.0;
    CHECK(freq > 0.5 - 0.015);
    CHECK(freq < 0.5 + 0.015);

    // Eight patterns: 10^5 draws, sigma = sqrt(p(1-p) / 10^5) with p = 1/8,
    // so 3 sigma is just over 0.00314.
    std::map<std::string, int> counts;
    for (int i = 0; i < 100000; ++i) ++counts[sample_orientation(quad, derive_seed(9, i)).to_bit_string()];
    CHECK(counts.size() == 8);
    for (const auto& [bits, count] : counts) {
        CAPTURE(bits);
        double f = count / 100000.0;
        CHECK(f > 0.125 - 0.0032);
        CHECK(f < 0.125 + 0.0032);
    }
}

TEST_CASE("ordering distances on fixed embeddings") {
    HcTree six = parse_newick("(((1,2),3),((4,5),6));");
    LeafOrdering identity6 = leaf_ordering(six, Orientation::all_original(six));
    CHECK(ordering_distance(identity6, 3, 4) == 1);
    CHECK(ordering_distance(identity6, 4, 3) == 1);
    CHECK(ordering_distance(identity6, 1, 6) == 5);

    HcTree quad = parse_newick("((1,2),(3,4));");
    LeafOrdering identity4 = leaf_ordering(quad, Orientation::all_original(quad));
    CHECK(ordering_distance(identity4, 1, 3) == 2);

    // Sibling leaves stay adjacent under every orientation.
    for (std::uint64_t mask = 0; mask < 32; ++mask) {
        LeafOrdering pi = leaf_ordering(six, Orientation::from_mask(six, mask));
        CHECK(ordering_distance(pi, 1, 2) == 1);
        CHECK(ordering_distance(pi, 4, 5) == 1);
    }
}

TEST_CASE("weighted ordering cost sums distance times weight") {
    HcTree quad = parse_newick("((1,2),(3,4));");
    LeafOrdering identity4 = leaf_ordering(quad, Orientation::all_original(quad));
    CHECK(weighted_ordering_cost(gen_matching(4), identity4) == Rational(2));
    CHECK(weighted_ordering_cost(SimilarityGraph(4, {}), identity4) == Rational(0));

    HcTree chain = parse_newick("(((1,2),3),4);");
    LeafOrdering identityc = leaf_ordering(chain, Orientation::all_original(chain));
    SimilarityGraph star(4, {{1, 2, 3}, {1, 3, 2}, {1, 4, 1}});
    CHECK(weighted_ordering_cost(star, identityc) == Rational(10));

    CHECK_THROWS_AS(weighted_ordering_cost(gen_matching(6), identity4), std::invalid_argument);
}

TEST_CASE("expected cost interpolates between the half bound and a realized cost") {
    for (std::uint64_t seed : {11ULL, 22ULL, 33ULL}) {
        for (int n : {5, 8}) {
            SimilarityGraph g = gen_random(n, 0.7, 9, seed);
            HcTree t = random_tree(n, derive_seed(seed, 1));

            std::vector<std::int8_t> open(t.internal_count(), -1);
            CHECK(expected_ordering_cost(g, t, open) == dasgupta_cost(g, t) / Rational(2));

            for (std::uint64_t mask : {0ULL, 1ULL, 5ULL, ~0ULL}) {
                Orientation o = Orientation::from_mask(t, mask & ((1ULL << t.internal_count()) - 1));
                std::vector<std::int8_t> fixed(t.internal_count());
                for (int k = 0; k < t.internal_count(); ++k) fixed[k] = o.swapped(k) ? 1 : 0;
                CHECK(expected_ordering_cost(g, t, fixed) == weighted_ordering_cost(g, leaf_ordering(t, o)));
            }
        }
    }
}

TEST_CASE("expected cost is the exact average over undecided bits") {
    // Resolving one undecided node must split the expectation evenly, and
    // unrolling every node must reproduce the mean over all 2^(n-1)
    // orientations.
    SimilarityGraph g(5, {{1, 2, 4}, {1, 5, 2}, {2, 3, 7}, {3, 4, 1}, {4, 5, 3}});
    HcTree t = parse_newick("(((1,2),3),(4,5));");

    std::vector<std::int8_t> partial(t.internal_count(), -1);
    partial[1] = 1;
    for (int k : {0, 2, 3}) {
        std::vector<std::int8_t> keep = partial, swap = partial;
        keep[k] = 0;
        swap[k] = 1;
        Rational split = (expected_ordering_cost(g, t, keep) + expected_ordering_cost(g, t, swap)) / Rational(2);
        CHECK(expected_ordering_cost(g, t, partial) == split);
    }

    Rational total = 0;
    int patterns = 1 << t.internal_count();
    for (int mask = 0; mask < patterns; ++mask)
        total += weighted_ordering_cost(g, leaf_ordering(t, Orientation::from_mask(t, mask)));
    std::vector<std::int8_t> open(t.internal_count(), -1);
    CHECK(expected_ordering_cost(g, t, open) == total / Rational(patterns));
}

TEST_CASE("expected cost validates its inputs") {
    HcTree t = parse_newick("((1,2),(3,4));");
    SimilarityGraph g = gen_matching(4);
    CHECK_THROWS_AS(expected_ordering_cost(gen_matching(6), t, {-1, -1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(expected_ordering_cost(g, t, {-1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(expected_ordering_cost(g, t, {-1, 2, 0}), std::invalid_argument);
}

TEST_CASE("conditional expectations ordering meets the half cost bound") {
    HcTree quad = parse_newick("((1,2),(3,4));");
    SimilarityGraph match4 = gen_matching(4);
    Orientation o4 = conditional_expectation_ordering(match4, quad);
    CHECK(weighted_ordering_cost(match4, leaf_ordering(quad, o4)) == Rational(2));

    HcTree chain = parse_newick("(((1,2),3),4);");
    SimilarityGraph star(4, {{1, 2, 3}, {1, 3, 2}, {1, 4, 1}});
    Orientation oc = conditional_expectation_ordering(star, chain);
    Rational y = weighted_ordering_cost(star, leaf_ordering(chain, oc));
    CHECK(y == Rational(7));
    CHECK(y <= dasgupta_cost(star, chain) / Rational(2));
    CHECK(oc.to_bit_string() == "010");

    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        int n = 4 + (int)(seed % 9);
        SimilarityGraph g = gen_random(n, 0.6, 10, seed);
        HcTree t = random_tree(n, derive_seed(seed, 2));
        Orientation o = conditional_expectation_ordering(g, t);
        Rational cost = weighted_ordering_cost(g, leaf_ordering(t, o));
        CHECK(cost * Rational(2) <= dasgupta_cost(g, t));
    }
}

TEST_CASE("exhaustive swap enumeration matches the expectation identities") {
    for (const char* newick : {"((1,2),3);", "((1,2),(3,4));", "(((1,2),3),4);",
                               "(((1,2),3),((4,5),6));", "((((((1,2),3),4),5),6),7);",
                               "(((1,2),(3,4)),((5,6),(7,8)));"}) {
        CAPTURE(newick);
        HcTree t = parse_newick(newick);
        int n = t.n();
        std::uint64_t patterns = 1ULL << t.internal_count();

        std::vector<std::vector<std::int64_t>> dist_sum(n + 1, std::vector<std::int64_t>(n + 1, 0));
        std::vector<std::int64_t> pos_sum(n + 1, 0);
        for (std::uint64_t mask = 0; mask < patterns; ++mask) {
            LeafOrdering pi = leaf_ordering(t, Orientation::from_mask(t, mask));
            for (int i = 1; i <= n; ++i) {
                pos_sum[i] += pi.pos(i);
                for (int j = i + 1; j <= n; ++j) {
                    int y = ordering_distance(pi, i, j);
                    CHECK(y <= subtree_size_at_lca(t, i, j));
                    dist_sum[i][j] += y;
                }
            }
            for (int id = 0; id < (int)t.nodes().size(); ++id) {
                if (t.is_leaf(id)) continue;
                int lo = n + 1, hi = 0;
                std::vector<int> block = leaves_under(t, id);
                for (int leaf : block) {
                    lo = std::min(lo, pi.pos(leaf));
                    hi = std::max(hi, pi.pos(leaf));
                }
                CHECK(hi - lo + 1 == (int)block.size());
            }
        }

        // Mean distance of a pair is half its lca subtree size; mean leaf
        // position is (n+1)/2. Both checked without division.
        for (int i = 1; i <= n; ++i) {
            CHECK(2 * pos_sum[i] == (std::int64_t)(n + 1) * (std::int64_t)patterns);
            for (int j = i + 1; j <= n; ++j)
                CHECK(2 * dist_sum[i][j] == (std::int64_t)subtree_size_at_lca(t, i, j) * (std::int64_t)patterns);
        }
    }
}

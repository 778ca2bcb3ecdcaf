#include "hcrev/ordering.hpp"

#include <stdexcept>

#include "hcrev/rng.hpp"

namespace hcrev {

Orientation::Orientation(std::vector<std::uint8_t> swapped) : swapped_(std::move(swapped)) {
    for (std::uint8_t b : swapped_) {
        if (b > 1) throw std::invalid_argument("orientation bits must be 0 or 1");
    }
}

Orientation Orientation::all_original(const HcTree& t) {
    return Orientation(std::vector<std::uint8_t>(t.internal_count(), 0));
}

Orientation Orientation::from_mask(const HcTree& t, std::uint64_t mask) {
    int k = t.internal_count();
    if (k > 63) throw std::invalid_argument("orientation mask covers at most 63 internal nodes");
    std::vector<std::uint8_t> bits(k);
    for (int i = 0; i < k; ++i) bits[i] = (mask >> i) & 1;
    return Orientation(std::move(bits));
}

std::string Orientation::to_bit_string() const {
    std::string s(swapped_.size(), '0');
    for (std::size_t i = 0; i < swapped_.size(); ++i)
        if (swapped_[i]) s[i] = '1';
    return s;
}

int LeafOrdering::pos(int label) const {
    if (label < 1 || label > n()) throw std::out_of_range("leaf label out of range");
    return pos_[label];
}

int LeafOrdering::leaf_at(int position) const {
    if (position < 1 || position > n()) throw std::out_of_range("leaf position out of range");
    return leaf_at_[position];
}

LeafOrdering leaf_ordering(const HcTree& t, const Orientation& o) {
    if (o.internal_count() != t.internal_count())
        throw std::invalid_argument("orientation does not match tree");
    LeafOrdering out;
    out.pos_.assign(t.n() + 1, 0);
    out.leaf_at_.assign(t.n() + 1, 0);

    int next = 1;
    std::vector<int> stack = {t.root()};
    while (!stack.empty()) {
        int id = stack.back();
        stack.pop_back();
        const auto& nd = t.node(id);
        if (t.is_leaf(id)) {
            out.pos_[nd.label] = next;
            out.leaf_at_[next] = nd.label;
            ++next;
            continue;
        }
        int first = nd.left, second = nd.right;
        if (o.swapped(t.internal_index(id))) std::swap(first, second);
        stack.push_back(second);  // LIFO: pushed last is visited last
        stack.push_back(first);
    }
    return out;
}

Orientation sample_orientation(const HcTree& t, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::uint8_t> bits(t.internal_count());
    for (auto& b : bits) b = rng.coin() ? 1 : 0;
    return Orientation(std::move(bits));
}

int ordering_distance(const LeafOrdering& ordering, int label_i, int label_j) {
    int d = ordering.pos(label_i) - ordering.pos(label_j);
    return d < 0 ? -d : d;
}

Rational weighted_ordering_cost(const SimilarityGraph& g, const LeafOrdering& ordering) {
    if (g.n() != ordering.n()) throw std::invalid_argument("graph and ordering sizes differ");
    Rational total = 0;
    for (const Edge& e : g.edges()) total += e.w * Rational(ordering_distance(ordering, e.u, e.v));
    return total;
}

namespace {

/// Twice the expected block offset of a leaf inside the subtree hanging off
/// `stop` (exclusive): 2 + per-ancestor contribution of the sibling subtree,
/// 2*size when the sibling is fixed before the leaf, size when the ancestor
/// is still undecided, 0 when fixed after. Returns via out-params the child
/// of `stop` the walk came through.
std::int64_t twice_expected_offset(const HcTree& t, const std::vector<std::int8_t>& decisions,
                                   int leaf_label, int stop, int& child_of_stop) {
    std::int64_t off2 = 2;
    int c = t.leaf_node(leaf_label);
    int p = t.node(c).parent;
    while (p != stop) {
        const auto& nd = t.node(p);
        int sibling = (nd.left == c) ? nd.right : nd.left;
        std::int8_t d = decisions[t.internal_index(p)];
        bool sibling_first = (d == 0) ? (sibling == nd.left) : (sibling == nd.right);
        if (d < 0)
            off2 += t.node(sibling).size;
        else if (sibling_first)
            off2 += 2 * (std::int64_t)t.node(sibling).size;
        c = p;
        p = nd.parent;
    }
    child_of_stop = c;
    return off2;
}

}  // namespace

Rational expected_ordering_cost(const SimilarityGraph& g, const HcTree& t,
                                const std::vector<std::int8_t>& decisions) {
    if (g.n() != t.n()) throw std::invalid_argument("graph and tree sizes differ");
    if ((int)decisions.size() != t.internal_count())
        throw std::invalid_argument("decision vector does not match tree");
    for (std::int8_t d : decisions)
        if (d < -1 || d > 1) throw std::invalid_argument("decisions must be -1, 0 or 1");

    ScaledWeights sw = scale_weights(g);
    int128 sum = 0;  // in half-units of the scaled weights
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        int i = g.edges()[e].u, j = g.edges()[e].v;
        int l = t.lca(i, j);
        int ci = 0, cj = 0;
        std::int64_t off2_i = twice_expected_offset(t, decisions, i, l, ci);
        std::int64_t off2_j = twice_expected_offset(t, decisions, j, l, cj);
        std::int64_t ni = t.node(ci).size, nj = t.node(cj).size;

        std::int8_t dl = decisions[t.internal_index(l)];
        std::int64_t y2;
        if (dl < 0) {
            // The halves of the two placements cancel the offsets exactly.
            y2 = ni + nj;
        } else {
            int first = (dl == 0) ? t.node(l).left : t.node(l).right;
            y2 = (first == ci) ? 2 * ni - off2_i + off2_j : 2 * nj - off2_j + off2_i;
        }
        sum += (int128)sw.num[e] * y2;
    }
    return Rational::fraction(sum, (int128)2 * sw.den);
}

Orientation conditional_expectation_ordering(const SimilarityGraph& g, const HcTree& t) {
    std::vector<std::int8_t> decisions(t.internal_count(), -1);
    for (int k = 0; k < t.internal_count(); ++k) {
        decisions[k] = 0;
        Rational keep = expected_ordering_cost(g, t, decisions);
        decisions[k] = 1;
        Rational swap = expected_ordering_cost(g, t, decisions);
        decisions[k] = (swap < keep) ? 1 : 0;
    }
    std::vector<std::uint8_t> bits(decisions.begin(), decisions.end());
    return Orientation(std::move(bits));
}

}  // namespace hcrev

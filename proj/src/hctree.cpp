#include "hcrev/hctree.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace hcrev {

HcTree::HcTree(std::vector<Node> nodes, int root) : nodes_(std::move(nodes)), root_(root) {
    if (nodes_.empty() || root_ < 0 || root_ >= (int)nodes_.size())
        throw std::invalid_argument("tree root out of range");
    if (nodes_[root_].parent != -1) throw std::invalid_argument("root must not have a parent");

    // Walk from the root, recomputing size/depth and checking shape.
    int leaves = 0, visited = 0;
    std::vector<int> stack{root_};
    std::vector<int> post;
    post.reserve(nodes_.size());
    while (!stack.empty()) {
        int id = stack.back();
        stack.pop_back();
        ++visited;
        post.push_back(id);
        Node& nd = nodes_[id];
        nd.depth = nd.parent < 0 ? 0 : nodes_[nd.parent].depth + 1;
        if ((nd.left < 0) != (nd.right < 0))
            throw std::invalid_argument("internal nodes need exactly two children");
        if (nd.left < 0) {
            ++leaves;
            nd.size = 1;
        } else {
            for (int c : {nd.left, nd.right}) {
                if (c < 0 || c >= (int)nodes_.size() || nodes_[c].parent != id)
                    throw std::invalid_argument("inconsistent parent/child links");
                stack.push_back(c);
            }
        }
    }
    if (visited != (int)nodes_.size()) throw std::invalid_argument("tree contains unreachable nodes");
    for (auto it = post.rbegin(); it != post.rend(); ++it) {
        Node& nd = nodes_[*it];
        if (nd.left >= 0) nd.size = nodes_[nd.left].size + nodes_[nd.right].size;
    }

    n_ = leaves;
    leaf_node_.assign(n_ + 1, -1);
    for (int id = 0; id < (int)nodes_.size(); ++id) {
        if (!is_leaf(id)) continue;
        int label = nodes_[id].label;
        if (label < 1 || label > n_ || leaf_node_[label] != -1)
            throw std::invalid_argument("leaf labels must form a permutation of 1..n");
        leaf_node_[label] = id;
    }

    internal_index_.assign(nodes_.size(), -1);
    std::deque<int> queue{root_};
    while (!queue.empty()) {
        int id = queue.front();
        queue.pop_front();
        if (is_leaf(id)) continue;
        internal_index_[id] = (int)bfs_internal_.size();
        bfs_internal_.push_back(id);
        queue.push_back(nodes_[id].left);
        queue.push_back(nodes_[id].right);
    }
}

int HcTree::leaf_node(int label) const {
    if (label < 1 || label > n_) throw std::out_of_range("leaf label out of range: " + std::to_string(label));
    return leaf_node_[label];
}

int HcTree::lca(int label_i, int label_j) const {
    int a = leaf_node(label_i), b = leaf_node(label_j);
    while (a != b) {
        if (nodes_[a].depth >= nodes_[b].depth)
            a = nodes_[a].parent;
        else
            b = nodes_[b].parent;
    }
    return a;
}

std::string HcTree::to_newick() const {
    std::string out;
    // Iterative to survive deep combs.
    struct Frame {
        int id;
        int stage;
    };
    std::vector<Frame> stack{{root_, 0}};
    while (!stack.empty()) {
        auto& f = stack.back();
        const Node& nd = nodes_[f.id];
        if (nd.left < 0) {
            out += std::to_string(nd.label);
            stack.pop_back();
        } else if (f.stage == 0) {
            out += '(';
            f.stage = 1;
            stack.push_back({nd.left, 0});
        } else if (f.stage == 1) {
            out += ',';
            f.stage = 2;
            stack.push_back({nd.right, 0});
        } else {
            out += ')';
            stack.pop_back();
        }
    }
    out += ';';
    return out;
}

HcTree parse_newick(const std::string& text) {
    size_t pos = 0;
    auto fail = [&](const std::string& what) -> void {
        throw std::invalid_argument("newick parse error at offset " + std::to_string(pos) + ": " + what);
    };
    std::vector<HcTree::Node> nodes;
    // Returns node id; recursion depth bounded by input nesting.
    auto parse_node = [&](auto&& self) -> int {
        if (pos >= text.size()) fail("unexpected end");
        if (text[pos] == '(') {
            ++pos;
            int left = self(self);
            if (pos >= text.size() || text[pos] != ',') fail("expected ','");
            ++pos;
            int right = self(self);
            if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
            ++pos;
            int id = (int)nodes.size();
            nodes.push_back({});
            nodes[id].left = left;
            nodes[id].right = right;
            nodes[left].parent = id;
            nodes[right].parent = id;
            return id;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected leaf label or '('");
        int label = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            label = label * 10 + (text[pos] - '0');
            ++pos;
        }
        int id = (int)nodes.size();
        nodes.push_back({});
        nodes[id].label = label;
        return id;
    };
    int root = parse_node(parse_node);
    if (pos >= text.size() || text[pos] != ';') fail("missing terminating ';'");
    ++pos;
    if (pos != text.size()) fail("trailing characters");
    return HcTree(std::move(nodes), root);
}

TreeBuilder::TreeBuilder(int n) {
    if (n < 1) throw std::invalid_argument("tree needs at least one leaf");
    nodes_.resize(n);
    for (int i = 0; i < n; ++i) nodes_[i].label = i + 1;
}

int TreeBuilder::join(int left, int right) {
    int id = (int)nodes_.size();
    nodes_.push_back({});
    nodes_[id].left = left;
    nodes_[id].right = right;
    nodes_[left].parent = id;
    nodes_[right].parent = id;
    return id;
}

HcTree TreeBuilder::build(int root) { return HcTree(std::move(nodes_), root); }

int subtree_size_at_lca(const HcTree& t, int label_i, int label_j) {
    if (label_i == label_j) throw std::invalid_argument("subtree size query needs two distinct leaves");
    return t.node(t.lca(label_i, label_j)).size;
}

namespace {

void require_same_points(const SimilarityGraph& g, const HcTree& t) {
    if (g.n() != t.n())
        throw std::invalid_argument("tree has " + std::to_string(t.n()) + " leaves but the graph has " +
                                    std::to_string(g.n()) + " data points");
}

}  // namespace

std::vector<Rational> per_edge_revenue(const SimilarityGraph& g, const HcTree& t) {
    require_same_points(g, t);
    std::vector<Rational> out;
    out.reserve(g.edges().size());
    for (const auto& e : g.edges())
        out.push_back(e.w * Rational(g.n() - subtree_size_at_lca(t, e.u, e.v)));
    return out;
}

Rational revenue(const SimilarityGraph& g, const HcTree& t) {
    require_same_points(g, t);
    Rational sum;
    for (const auto& e : g.edges()) sum += e.w * Rational(g.n() - subtree_size_at_lca(t, e.u, e.v));
    return sum;
}

Rational dasgupta_cost(const SimilarityGraph& g, const HcTree& t) {
    require_same_points(g, t);
    Rational sum;
    for (const auto& e : g.edges()) sum += e.w * Rational(subtree_size_at_lca(t, e.u, e.v));
    return sum;
}

BisectionTree bisection_tree(const Bisection& b, int n) {
    if (b.n() != n) throw std::invalid_argument("bisection does not partition 1..n");
    return BisectionTree{b};
}

Rational revenue(const SimilarityGraph& g, const BisectionTree& t) { return bisection_revenue(g, t.split); }

}  // namespace hcrev

#ifndef HCREV_HCTREE_HPP
#define HCREV_HCTREE_HPP

#include <string>
#include <vector>

#include "hcrev/instance.hpp"
#include "hcrev/mub.hpp"

namespace hcrev {

/// Rooted binary hierarchical-clustering tree whose leaves are exactly the
/// data points 1..n. Immutable after construction; every internal node has
/// a designated left and right child and a cached leaf count.
class HcTree {
  public:
    struct Node {
        int parent = -1;
        int left = -1;
        int right = -1;
        int label = 0;  // leaf label in 1..n, 0 for internal nodes
        int size = 1;   // leaves below (inclusive)
        int depth = 0;
    };

    /// Validates and adopts a node array. `root` indexes into `nodes`;
    /// depth and size fields are recomputed, the rest must be consistent.
    HcTree(std::vector<Node> nodes, int root);

    int n() const { return n_; }
    int root() const { return root_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    const Node& node(int id) const { return nodes_[id]; }
    bool is_leaf(int id) const { return nodes_[id].left < 0; }
    int leaf_node(int label) const;  // node id of a leaf label
    int internal_count() const { return n_ - 1; }

    /// Internal nodes in breadth-first order from the root; the position of
    /// a node in this order is its orientation bit index.
    const std::vector<int>& internal_bfs_order() const { return bfs_internal_; }
    int internal_index(int node_id) const { return internal_index_[node_id]; }

    int lca(int label_i, int label_j) const;

    std::string to_newick() const;
    bool operator==(const HcTree& o) const { return to_newick() == o.to_newick(); }

  private:
    std::vector<Node> nodes_;
    int root_;
    int n_;
    std::vector<int> leaf_node_;       // label -> node id (index 0 unused)
    std::vector<int> bfs_internal_;    // internal node ids, BFS from root
    std::vector<int> internal_index_;  // node id -> orientation bit index (-1 for leaves)
};

/// Parses "((1,2),(3,4));" style trees: integer leaf labels, children kept
/// in written order, mandatory terminating semicolon, no branch lengths.
HcTree parse_newick(const std::string& text);

/// Builds the left-leaning tree that pairs consecutive leaves of `order`
/// bottom-up according to a merge list; helper for algorithm construction.
class TreeBuilder {
  public:
    /// Creates n leaves labeled 1..n; returns their node handles.
    explicit TreeBuilder(int n);
    int leaf(int label) const { return label - 1; }
    /// Joins two roots into a new node (left, right); returns its handle.
    int join(int left, int right);
    /// Finalizes into a validated tree rooted at `root`.
    HcTree build(int root);

  private:
    std::vector<HcTree::Node> nodes_;
};

/// Number of leaves of the subtree rooted at the least common ancestor of
/// two distinct leaves; always in [2, n].
int subtree_size_at_lca(const HcTree& t, int label_i, int label_j);

/// Revenue objective: sum over edges of w * (n - |subtree at LCA|).
Rational revenue(const SimilarityGraph& g, const HcTree& t);

/// Per-edge revenue contributions, parallel to g.edges().
std::vector<Rational> per_edge_revenue(const SimilarityGraph& g, const HcTree& t);

/// Dasgupta cost: sum over edges of w * |subtree at LCA|. Complementary to
/// revenue: revenue + cost = n * total_weight, exactly.
Rational dasgupta_cost(const SimilarityGraph& g, const HcTree& t);

/// Depth-2 tree induced by a bisection: the root splits the two sides and
/// each side hangs below one child. Only its revenue accounting is defined
/// (an uncut edge earns w * n/2, a cut edge earns 0); it is deliberately
/// not a binary HcTree, since no binary realization of the side "stars"
/// preserves those per-edge values.
struct BisectionTree {
    Bisection split;
};

BisectionTree bisection_tree(const Bisection& b, int n);

Rational revenue(const SimilarityGraph& g, const BisectionTree& t);

}  // namespace hcrev

#endif

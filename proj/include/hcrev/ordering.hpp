#ifndef HCREV_ORDERING_HPP
#define HCREV_ORDERING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hcrev/hctree.hpp"
#include "hcrev/instance.hpp"

namespace hcrev {

/// One bit per internal node of a fixed tree: keep the stored child order
/// or swap left and right. Bits are indexed by the tree's breadth-first
/// internal order, so a tree on n leaves always carries n-1 bits.
class Orientation {
  public:
    explicit Orientation(std::vector<std::uint8_t> swapped);
    static Orientation all_original(const HcTree& t);
    /// Bits from an integer mask, bit k of `mask` driving internal index k;
    /// used by exhaustive enumerations over all 2^(n-1) orientations.
    static Orientation from_mask(const HcTree& t, std::uint64_t mask);

    int internal_count() const { return (int)swapped_.size(); }
    bool swapped(int internal_index) const { return swapped_[internal_index] != 0; }

    /// '0'/'1' per internal node in breadth-first order.
    std::string to_bit_string() const;

    bool operator==(const Orientation& o) const { return swapped_ == o.swapped_; }

  private:
    std::vector<std::uint8_t> swapped_;
};

/// Planar embedding of a tree's leaves: position of each leaf label when
/// the tree is drawn with no crossing edges. Only leaf_ordering produces
/// these, so every value is realizable by construction.
class LeafOrdering {
  public:
    int n() const { return (int)pos_.size() - 1; }
    /// Line position of a leaf label, in 1..n.
    int pos(int label) const;
    /// Leaf label at a line position, in 1..n.
    int leaf_at(int position) const;

  private:
    friend LeafOrdering leaf_ordering(const HcTree&, const Orientation&);
    std::vector<int> pos_;      // label -> position, index 0 unused
    std::vector<int> leaf_at_;  // position -> label, index 0 unused
};

/// In-order leaf positions after applying the orientation's swaps.
LeafOrdering leaf_ordering(const HcTree& t, const Orientation& o);

/// Independent fair coin per internal node; deterministic given the seed.
Orientation sample_orientation(const HcTree& t, std::uint64_t seed);

/// |pos(i) - pos(j)|, in [1, n-1].
int ordering_distance(const LeafOrdering& ordering, int label_i, int label_j);

/// Sum over edges of w * |pos(i) - pos(j)|.
Rational weighted_ordering_cost(const SimilarityGraph& g, const LeafOrdering& ordering);

/// Expected weighted ordering cost when each internal node is fixed to
/// original (0), fixed to swapped (1), or still a fair coin (-1); decisions
/// are indexed like orientation bits. Exact (denominators are halves).
/// With no decisions made this equals sum_e w_e * |T_e| / 2; with all
/// decisions made it equals the realized weighted ordering cost.
Rational expected_ordering_cost(const SimilarityGraph& g, const HcTree& t,
                                const std::vector<std::int8_t>& decisions);

/// Derandomized orientation choice: fixes internal nodes top-down (breadth-
/// first), keeping whichever bit does not increase the conditional
/// expectation of the weighted ordering cost (ties keep the original
/// order). The result Y satisfies Y <= sum_e w_e * |T_e| / 2, exactly.
Orientation conditional_expectation_ordering(const SimilarityGraph& g, const HcTree& t);

}  // namespace hcrev

#endif

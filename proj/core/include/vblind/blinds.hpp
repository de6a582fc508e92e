#pragma once

#include <map>
#include <optional>
#include <vector>

#include "vblind/alpha_set.hpp"
#include "vblind/curve.hpp"
#include "vblind/geometry.hpp"
#include "vblind/projline.hpp"

namespace vblind {

// Path from the root of a construction tree; the empty index is the root.
using TreeIndex = std::vector<int>;

// Finite tree of depth m whose node i has N_i children. Branching defaults to
// one value per level and can be overridden node by node.
class BranchTree {
public:
    static BranchTree uniform(std::vector<int> per_level);
    static BranchTree constant(int depth, int branching);

    int depth() const noexcept { return static_cast<int>(per_level_.size()); }
    int branching(const TreeIndex& node) const;
    void set_branching(const TreeIndex& node, int n);
    bool contains(const TreeIndex& node) const;
    long long leaf_count() const;

    const std::vector<int>& per_level() const noexcept { return per_level_; }
    const std::map<TreeIndex, int>& overrides() const noexcept { return overrides_; }

    friend bool operator==(const BranchTree&, const BranchTree&) = default;

private:
    explicit BranchTree(std::vector<int> per_level);
    long long count_below(TreeIndex& node) const;

    std::vector<int> per_level_;
    std::map<TreeIndex, int> overrides_;
};

struct ConstructionMeta {
    std::optional<Direction> theta_small;
    std::optional<Direction> theta_cover;
    std::optional<Chirality> chirality;
    std::optional<BranchTree> tree;
    std::vector<double> level_lengths;  // level 0 is the root

    friend bool operator==(const ConstructionMeta&, const ConstructionMeta&) = default;
};

// An intermediate segment kept for rendering; stage 0 is the input.
struct StagedSegment {
    Segment segment;
    int stage = 0;

    friend bool operator==(const StagedSegment&, const StagedSegment&) = default;
};

struct BlindSet {
    std::vector<Segment> segments;
    std::vector<TreeIndex> provenance;
    ConstructionMeta meta;
    std::vector<StagedSegment> scaffold;

    double total_length() const noexcept;

    friend bool operator==(const BlindSet&, const BlindSet&) = default;
};

inline constexpr double kAngleGuard = 1e-10;

std::vector<Segment> divide(const Segment& seg, int n);

// LINE(a, c) where c is the meeting point of the line through a in direction
// theta_small and the line through b in direction theta_cover.
Segment rotate(const Segment& seg, Direction theta_small, Direction theta_cover);

// The sense in which one travels from theta_cover through the segment's
// direction to theta_small.
Chirality blind_chirality(const Segment& seg, Direction theta_small, Direction theta_cover);

BlindSet vb(const Segment& seg, Direction theta_small, Direction theta_cover, int n,
            std::optional<Chirality> expected = std::nullopt);

BlindSet iter_vb(const Segment& seg, Direction theta_small, Direction theta_cover,
                 const BranchTree& tree, Chirality chirality);

struct CoverSearchOptions {
    int n0 = 1;
    int n_max = 1 << 20;
    std::optional<double> neighborhood;  // every blind within this distance of seg
    std::optional<double> max_blind_length;  // every blind strictly shorter than this
};

struct CoverSearchResult {
    int n = 0;
    BlindSet blinds;
};

// Smallest N = n0 * 2^j for which every piece of vb(seg, ..., N) satisfies the
// one-segment covering hypotheses for all alpha in a_cover: the triangle
// {a_i, b_i, c_i} stays in the open strip and the tangent directions over it
// stay in the closed arc from theta_cover to the segment direction.
CoverSearchResult auto_vb_cover(const CurveProfile& curve, const Segment& seg,
                                Direction theta_small, Direction theta_cover,
                                const AlphaSet& a_cover, const CoverSearchOptions& options = {});

struct IterSearchOptions {
    int n0 = 2;
    int n_max = 1 << 20;
    int m_max = 64;
    double kappa = 2.0;
    std::optional<double> neighborhood;
    long long max_leaves = 1LL << 22;
};

// Iterated blinds from seg toward theta_small with depth m = floor(arc/eps) + 1.
// Each node's branching is doubled until its children sit inside the node's
// neighbourhood radius (radii shrink like eps * length) and, when a_cover is
// given, the covering hypotheses hold at that stage.
BlindSet auto_iter_vb(const CurveProfile& curve, const Segment& seg, Direction theta_small,
                      Direction theta_cover, double eps, const AlphaSet& a_small,
                      const std::optional<AlphaSet>& a_cover, Chirality chirality,
                      const IterSearchOptions& options = {});

}  // namespace vblind

#include "vblind/blinds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "vblind/errors.hpp"

namespace vblind {

namespace {

std::string index_string(const TreeIndex& idx) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < idx.size(); ++i) {
        os << (i ? "," : "") << idx[i];
    }
    os << ')';
    return os.str();
}

Point unit(Direction d) { return {std::cos(d.radians()), std::sin(d.radians())}; }

void check_angles(Direction seg, Direction small, Direction cover) {
    if (dist(seg, small) <= kAngleGuard || dist(seg, cover) <= kAngleGuard ||
        dist(small, cover) <= kAngleGuard) {
        throw PreconditionError("degenerate angles: segment, small and cover directions must be "
                                "pairwise distinct");
    }
}

// Whether, for every alpha in a_cover, the triangle hull stays strictly inside
// the strip and its tangent directions stay in `allowed`.
bool hull_covers(const CurveProfile& curve, const AlphaSet& a_cover, Point p, Point q, Point r,
                 const Arc& allowed, double* failing_alpha) {
    const Interval xs{std::min({p.x1, q.x1, r.x1}), std::max({p.x1, q.x1, r.x1})};
    for (const Interval& comp : a_cover.components()) {
        const double tlo = comp.lo - xs.hi;
        const double thi = comp.hi - xs.lo;
        bool ok = tlo > curve.a() && thi < curve.b();
        if (ok) {
            const auto span = direction_span(curve, comp, xs);
            ok = span && span_within(*span, allowed);
        }
        if (!ok) {
            if (failing_alpha) {
                *failing_alpha = 0.5 * (comp.lo + comp.hi);
            }
            return false;
        }
    }
    return true;
}

}  // namespace

BranchTree::BranchTree(std::vector<int> per_level) : per_level_(std::move(per_level)) {
    if (per_level_.empty()) {
        throw PreconditionError("branch tree depth must be at least 1");
    }
    for (int n : per_level_) {
        if (n < 1) {
            throw PreconditionError("branching must be at least 1");
        }
    }
}

BranchTree BranchTree::uniform(std::vector<int> per_level) { return BranchTree(std::move(per_level)); }

BranchTree BranchTree::constant(int depth, int branching) {
    if (depth < 1) {
        throw PreconditionError("branch tree depth must be at least 1");
    }
    return BranchTree(std::vector<int>(static_cast<std::size_t>(depth), branching));
}

bool BranchTree::contains(const TreeIndex& node) const {
    if (node.size() > per_level_.size()) {
        return false;
    }
    TreeIndex prefix;
    for (int i : node) {
        if (i < 0 || i >= branching(prefix)) {
            return false;
        }
        prefix.push_back(i);
    }
    return true;
}

int BranchTree::branching(const TreeIndex& node) const {
    if (node.size() >= per_level_.size()) {
        throw PreconditionError("leaf " + index_string(node) + " has no children");
    }
    const auto it = overrides_.find(node);
    return it != overrides_.end() ? it->second : per_level_[node.size()];
}

void BranchTree::set_branching(const TreeIndex& node, int n) {
    if (n < 1) {
        throw PreconditionError("branching must be at least 1");
    }
    if (node.size() >= per_level_.size() || !contains(node)) {
        throw PreconditionError("no internal node " + index_string(node));
    }
    const int before = branching(node);
    if (n == per_level_[node.size()]) {
        overrides_.erase(node);
    } else {
        overrides_[node] = n;
    }
    if (n < before) {
        // drop overrides that no longer name a node
        std::erase_if(overrides_, [this](const auto& kv) { return !contains(kv.first); });
    }
}

long long BranchTree::count_below(TreeIndex& node) const {
    if (node.size() == per_level_.size()) {
        return 1;
    }
    const int n = branching(node);
    const bool plain = std::none_of(overrides_.begin(), overrides_.end(), [&](const auto& kv) {
        return kv.first.size() > node.size() &&
               std::equal(node.begin(), node.end(), kv.first.begin());
    });
    if (plain) {
        long long count = n;
        for (std::size_t lvl = node.size() + 1; lvl < per_level_.size(); ++lvl) {
            count *= per_level_[lvl];
        }
        return count;
    }
    long long total = 0;
    for (int i = 0; i < n; ++i) {
        node.push_back(i);
        total += count_below(node);
        node.pop_back();
    }
    return total;
}

long long BranchTree::leaf_count() const {
    TreeIndex root;
    return count_below(root);
}

double BlindSet::total_length() const noexcept {
    double total = 0.0;
    for (const Segment& s : segments) {
        total += s.length();
    }
    return total;
}

std::vector<Segment> divide(const Segment& seg, int n) {
    if (n < 1) {
        throw PreconditionError("divide needs N >= 1");
    }
    std::vector<Segment> out;
    out.reserve(static_cast<std::size_t>(n));
    const Point a = seg.a();
    const Point b = seg.b();
    const auto node = [&](int i) {
        if (i == 0) {
            return a;
        }
        if (i == n) {
            return b;
        }
        const double s = static_cast<double>(i) / n;
        return (1.0 - s) * a + s * b;
    };
    for (int i = 0; i < n; ++i) {
        out.emplace_back(node(i), node(i + 1));
    }
    return out;
}

Segment rotate(const Segment& seg, Direction theta_small, Direction theta_cover) {
    check_angles(seg.direction(), theta_small, theta_cover);
    // a + u e_small = b + v e_cover
    const Point es = unit(theta_small);
    const Point ec = unit(theta_cover);
    const Point d = seg.b() - seg.a();
    const double det = ec.x1 * es.x2 - es.x1 * ec.x2;
    const double u = (ec.x1 * d.x2 - d.x1 * ec.x2) / det;
    return Segment(seg.a(), seg.a() + u * es);
}

Chirality blind_chirality(const Segment& seg, Direction theta_small, Direction theta_cover) {
    const Direction theta_seg = seg.direction();
    check_angles(theta_seg, theta_small, theta_cover);
    const Arc ccw(theta_cover, theta_small, Chirality::counterclockwise);
    return arc_interior_contains(ccw, theta_seg) ? Chirality::counterclockwise
                                                 : Chirality::clockwise;
}

BlindSet vb(const Segment& seg, Direction theta_small, Direction theta_cover, int n,
            std::optional<Chirality> expected) {
    const Chirality c = blind_chirality(seg, theta_small, theta_cover);
    if (expected && *expected != c) {
        throw PreconditionError(std::string("segment direction is not inside the ") +
                                to_string(*expected) + " arc from the cover to the small direction");
    }
    BlindSet out;
    const std::vector<Segment> pieces = divide(seg, n);
    out.segments.reserve(pieces.size());
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        out.segments.push_back(rotate(pieces[i], theta_small, theta_cover));
        out.provenance.push_back({static_cast<int>(i)});
    }
    out.meta.theta_small = theta_small;
    out.meta.theta_cover = theta_cover;
    out.meta.chirality = c;
    out.meta.tree = BranchTree::constant(1, n);
    out.meta.level_lengths = {seg.length(), out.total_length()};
    out.scaffold.push_back({seg, 0});
    return out;
}

namespace {

struct Node {
    Segment seg;
    TreeIndex index;
    double radius;
};

BlindSet assemble(const Segment& root, Direction theta_small, Direction theta_cover,
                  Chirality chirality, const std::vector<std::vector<Node>>& levels,
                  const std::vector<std::pair<TreeIndex, int>>& branching) {
    const int m = static_cast<int>(levels.size()) - 1;
    std::vector<int> per_level(static_cast<std::size_t>(m), 0);
    for (const auto& [idx, n] : branching) {
        int& slot = per_level[idx.size()];
        if (slot == 0) {
            slot = n;
        }
    }
    BranchTree tree = BranchTree::uniform(per_level);
    for (const auto& [idx, n] : branching) {
        if (n != per_level[idx.size()]) {
            tree.set_branching(idx, n);
        }
    }
    BlindSet out;
    out.meta.theta_small = theta_small;
    out.meta.theta_cover = theta_cover;
    out.meta.chirality = chirality;
    out.meta.tree = std::move(tree);
    out.meta.level_lengths.push_back(root.length());
    for (int k = 0; k < m; ++k) {
        double sum = 0.0;
        for (const Node& nd : levels[k + 1]) {
            sum += nd.seg.length();
        }
        out.meta.level_lengths.push_back(sum);
        for (const Node& nd : levels[k]) {
            out.scaffold.push_back({nd.seg, k});
        }
    }
    for (const Node& nd : levels.back()) {
        out.segments.push_back(nd.seg);
        out.provenance.push_back(nd.index);
    }
    return out;
}

}  // namespace

BlindSet iter_vb(const Segment& seg, Direction theta_small, Direction theta_cover,
                 const BranchTree& tree, Chirality chirality) {
    const int m = tree.depth();
    const std::vector<Direction> schedule =
        angle_schedule(seg.direction(), theta_small, m, chirality);
    std::vector<std::vector<Node>> levels{{Node{seg, {}, 0.0}}};
    std::vector<std::pair<TreeIndex, int>> branching;
    for (int k = 0; k < m; ++k) {
        std::vector<Node> next;
        for (const Node& nd : levels.back()) {
            const int n = tree.branching(nd.index);
            BlindSet stage;
            try {
                stage = vb(nd.seg, schedule[k + 1], theta_cover, n, chirality);
            } catch (const PreconditionError& e) {
                throw PreconditionError("iterated blinds, node " + index_string(nd.index) +
                                        ": " + e.what());
            }
            branching.emplace_back(nd.index, n);
            for (std::size_t i = 0; i < stage.segments.size(); ++i) {
                TreeIndex child = nd.index;
                child.push_back(static_cast<int>(i));
                next.push_back(Node{stage.segments[i], std::move(child), 0.0});
            }
        }
        levels.push_back(std::move(next));
    }
    return assemble(seg, theta_small, theta_cover, chirality, levels, branching);
}

CoverSearchResult auto_vb_cover(const CurveProfile& curve, const Segment& seg,
                                Direction theta_small, Direction theta_cover,
                                const AlphaSet& a_cover, const CoverSearchOptions& options) {
    if (options.n0 < 1 || options.n_max < options.n0) {
        throw PreconditionError("cover search needs 1 <= n0 <= n_max");
    }
    const Chirality c = blind_chirality(seg, theta_small, theta_cover);
    const Arc allowed(theta_cover, seg.direction(), c);
    double bad_alpha = 0.0;
    long bad_piece = -1;
    for (long long n = options.n0; n <= options.n_max; n *= 2) {
        BlindSet blinds = vb(seg, theta_small, theta_cover, static_cast<int>(n), c);
        const std::vector<Segment> pieces = divide(seg, static_cast<int>(n));
        bool ok = true;
        for (std::size_t i = 0; i < pieces.size() && ok; ++i) {
            const Segment& blade = blinds.segments[i];
            if ((options.neighborhood && max_distance(blade, seg) > *options.neighborhood) ||
                (options.max_blind_length && !(blade.length() < *options.max_blind_length))) {
                ok = false;
                bad_piece = static_cast<long>(i);
                break;
            }
            if (!hull_covers(curve, a_cover, pieces[i].a(), pieces[i].b(), blade.b(), allowed,
                             &bad_alpha)) {
                ok = false;
                bad_piece = static_cast<long>(i);
            }
        }
        if (ok) {
            return {static_cast<int>(n), std::move(blinds)};
        }
    }
    throw SearchError("blinds covering search",
                      "N_max = " + std::to_string(options.n_max) + " reached", bad_alpha,
                      bad_piece, 0);
}

BlindSet auto_iter_vb(const CurveProfile& curve, const Segment& seg, Direction theta_small,
                      Direction theta_cover, double eps, const AlphaSet& a_small,
                      const std::optional<AlphaSet>& a_cover, Chirality chirality,
                      const IterSearchOptions& options) {
    if (!(eps > 0.0)) {
        throw PreconditionError("eps must be positive");
    }
    if (!(seg.length() < eps)) {
        throw PreconditionError("iterated blinds need |L| < eps");
    }
    const Direction theta0 = seg.direction();
    if (blind_chirality(seg, theta_small, theta_cover) != chirality) {
        throw PreconditionError(std::string("segment direction is not inside the ") +
                                to_string(chirality) + " arc from the cover to the small direction");
    }
    const Arc small_arc(theta0, theta_small, chirality);
    const Point root = seg.a();
    for (const Interval& comp : a_small.components()) {
        // alphas at which the root point is in the strip
        const Interval live{std::max(comp.lo, root.x1 + curve.a()),
                            std::min(comp.hi, root.x1 + curve.b())};
        if (live.lo > live.hi) {
            continue;
        }
        const auto span = direction_span(curve, live, {root.x1, root.x1});
        if (!span || !span_within(*span, small_arc, 1e-12)) {
            throw PreconditionError("tangent directions at the root point leave the arc from the "
                                    "segment direction to the small direction");
        }
    }
    const double arc = small_arc.length();
    const int m = static_cast<int>(std::floor(arc / eps)) + 1;
    if (m > options.m_max) {
        throw SearchError("iterated blinds depth", "m = " + std::to_string(m) + " exceeds m_max",
                          0.0, -1, -1);
    }
    const std::vector<Direction> schedule = angle_schedule(theta0, theta_small, m, chirality);
    const double kappa = options.kappa;
    double r0 = kappa * eps * seg.length();
    if (options.neighborhood) {
        r0 = std::min(r0, *options.neighborhood);
    }

    std::vector<std::vector<Node>> levels{{Node{seg, {}, r0}}};
    std::vector<std::pair<TreeIndex, int>> branching;
    for (int k = 0; k < m; ++k) {
        const Arc allowed(theta_cover, schedule[k], chirality);
        std::vector<Node> next;
        for (const Node& nd : levels.back()) {
            bool placed = false;
            double bad_alpha = 0.0;
            for (long long n = options.n0; n <= options.n_max && !placed; n *= 2) {
                const std::vector<Segment> pieces = divide(nd.seg, static_cast<int>(n));
                std::vector<Node> children;
                children.reserve(pieces.size());
                bool ok = true;
                for (std::size_t i = 0; i < pieces.size() && ok; ++i) {
                    const Segment child = rotate(pieces[i], schedule[k + 1], theta_cover);
                    const double r = std::min(kappa * eps * child.length(), nd.radius / 2.0);
                    ok = max_distance(child, nd.seg) + r <= nd.radius;
                    if (ok && a_cover) {
                        ok = hull_covers(curve, *a_cover, pieces[i].a(), pieces[i].b(), child.b(),
                                         allowed, &bad_alpha);
                    }
                    TreeIndex idx = nd.index;
                    idx.push_back(static_cast<int>(i));
                    children.push_back(Node{child, std::move(idx), r});
                }
                if (ok) {
                    branching.emplace_back(nd.index, static_cast<int>(n));
                    std::move(children.begin(), children.end(), std::back_inserter(next));
                    placed = true;
                }
            }
            if (!placed) {
                throw SearchError("iterated blinds stage " + std::to_string(k + 1),
                                  "N_max reached at node " + index_string(nd.index), bad_alpha,
                                  -1, k);
            }
            if (static_cast<long long>(next.size()) > options.max_leaves) {
                throw SearchError("iterated blinds stage " + std::to_string(k + 1),
                                  "segment count exceeds " + std::to_string(options.max_leaves),
                                  0.0, -1, k);
            }
        }
        levels.push_back(std::move(next));
    }
    return assemble(seg, theta_small, theta_cover, chirality, levels, branching);
}

}  // namespace vblind

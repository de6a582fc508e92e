#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "vblind/alpha_set.hpp"
#include "vblind/blinds.hpp"
#include "vblind/curve.hpp"
#include "vblind/measure.hpp"

namespace vblind {

struct AlphaRecord {
    double alpha = 0.0;
    bool covered = true;
    double deficit = 0.0;
    double projected_measure = 0.0;

    friend bool operator==(const AlphaRecord&, const AlphaRecord&) = default;
};

enum class ReportKind { cover, small };

struct WorstCase {
    double alpha = 0.0;
    Point witness;

    friend bool operator==(const WorstCase&, const WorstCase&) = default;
};

struct VerificationReport {
    std::string scene_id;
    ReportKind kind = ReportKind::cover;
    std::vector<AlphaRecord> per_alpha;
    bool pass = true;
    // Half the grid step: the alpha-slack around every grid point that the
    // Lipschitz bound extends the grid result to.
    double padding = 0.0;
    // Whether the padded statement holds on every window, so the result
    // covers the whole alpha set and not only the grid.
    bool padding_certified = false;
    double bound = 0.0;  // smallness bound, or the containment margin
    WorstCase worst_case;
    double max_measure = 0.0;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct FiberArc {
    Point y;
    Interval subrange;
};

using CoverTarget = std::variant<Segment, FiberArc>;

IntervalUnion project_target(const CurveProfile& curve, const CoverTarget& target, double alpha);

VerificationReport check_cover(const CurveProfile& curve, std::span<const Segment> blinds,
                               const CoverTarget& target, const AlphaSet& alphas, double margin,
                               std::string scene_id = {});

VerificationReport check_small(const CurveProfile& curve, std::span<const Segment> blinds,
                               const AlphaSet& alphas, double bound, std::string scene_id = {});

// Largest relative error between grad_phi and central differences of eval_phi
// with step h, over random points strictly inside the strip.
double gradient_check(const CurveProfile& curve, int samples, double h, std::uint64_t seed = 1);

// Largest relative gap between |rotate(seg)| and the law-of-sines ratio over
// random configurations whose blinds turn in the given sense.
double law_of_sines_check(int trials, std::uint64_t seed,
                          Chirality chirality = Chirality::counterclockwise);

// Largest gap between iter_vb level sums and the telescoping formula over
// random configurations with depth up to max_depth.
double telescoping_check(int configurations, int max_depth, std::uint64_t seed);

struct DiskTrialResult {
    Interval image;
    double lo_gap = 0.0;   // closest sampled value to image.lo
    double hi_gap = 0.0;   // closest sampled value to image.hi
    double overshoot = 0.0;  // how far samples went beyond the image (0 if never)
};

// Samples the open disk (points at radius below r) clipped to the strip and
// compares with project_disk.
DiskTrialResult disk_image_trial(const CurveProfile& curve, double alpha, const Disk& disk,
                                 int samples, std::uint64_t seed);

struct DiffSweepResult {
    double worst_width_excess = 0.0;  // max of |I_s| - df_bound |s|
    double special_width = 0.0;       // largest |I_s| at the three special shifts
    double min_regular_width = 0.0;   // smallest |I_s| away from the special shifts
};

DiffSweepResult diff_interval_sweep(const CurveProfile& curve, Interval subrange, int points);

}  // namespace vblind

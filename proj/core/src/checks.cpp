#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "json_detail.hpp"
#include "vblind/cli.hpp"
#include "vblind/duality.hpp"
#include "vblind/errors.hpp"

namespace vblind {

namespace {

const std::vector<std::string> kCurves{"parabola", "quarter_circle", "exp"};

void below(std::vector<CheckLine>& out, const std::string& suite, const std::string& name,
           double value, double threshold) {
    out.push_back({suite, name, value, threshold, value < threshold});
}

void vb_battery(std::vector<CheckLine>& out, std::uint64_t seed) {
    const std::string s = "lemma2";
    below(out, s, "law_of_sines_counterclockwise",
          law_of_sines_check(1000, seed, Chirality::counterclockwise), 1e-10);
    below(out, s, "law_of_sines_clockwise", law_of_sines_check(1000, seed, Chirality::clockwise),
          1e-10);

    const Segment unit_seg({0.0, 0.0}, {std::sqrt(3.0) / 2.0, 0.5});
    double worst = 0.0;
    for (int n : {1, 3, 10, 100}) {
        const BlindSet b = vb(unit_seg, normalize(kPi / 2.0), normalize(0.0), n);
        worst = std::max(worst, std::fabs(b.total_length() - 0.5));
    }
    below(out, s, "blind_total_length", worst, 1e-10);
    below(out, s, "telescoping_level_sums", telescoping_check(20, 6, seed), 1e-10);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double excess = -1.0;
    for (int c = 0; c < 20; ++c) {
        const Chirality chir = c % 2 ? Chirality::clockwise : Chirality::counterclockwise;
        const Direction cover = normalize(kPi * unit(rng));
        const double span = 0.3 + (kPi - 0.6) * unit(rng);
        const Direction small = advance(cover, span, chir);
        const Direction line = advance(cover, span * (0.1 + 0.8 * unit(rng)), chir);
        const Segment seg({0.0, 0.0}, {std::cos(line.radians()), std::sin(line.radians())});
        const BlindSet b = iter_vb(seg, small, cover, BranchTree::constant(1 + c % 5, 2), chir);
        const double cap =
            std::max(1.0, std::sin(dist(line, cover)) / std::sin(dist(small, cover))) * seg.length();
        for (double level : b.meta.level_lengths) {
            excess = std::max(excess, level - cap);
        }
    }
    out.push_back({s, "level_sum_cap_excess", excess, 1e-10, excess <= 1e-10});

    for (const std::string& name : kCurves) {
        below(out, s, "gradient_" + name,
              gradient_check(CurveProfile::builtin(name), 1000, 1e-6, seed), 1e-5);
    }
}

void polygon_battery(std::vector<CheckLine>& out) {
    const std::string s = "lemma3";
    const CurveProfile curve = CurveProfile::quarter_circle();
    const Point y{0.0, 0.0};
    const Interval sub{-0.05, 0.05};
    const double eps = 0.01;
    const double delta = 0.002;
    const PolyChain chain = polygon_approx(curve, y, sub, eps, delta);
    below(out, s, "polygon_tangency_residual", tangency_residual(curve, chain), 1e-9);
    below(out, s, "polygon_fiber_distance", chain_fiber_distance(curve, chain), delta);
    double longest = 0.0;
    for (const Segment& seg : chain.segments()) {
        longest = std::max(longest, seg.length());
    }
    below(out, s, "polygon_segment_length", longest, eps);

    const Interval reach = alpha_reach(curve, y, sub, delta);
    const double n_box = std::max(std::fabs(reach.lo), std::fabs(reach.hi));
    int uncovered = 0;
    for (double alpha : AlphaSet::with_points({{-n_box, n_box}}, 100).grid()) {
        const bool ok = project_blinds(curve, alpha, chain.segments())
                            .contains(fiber_projection(curve, y, sub, alpha), 1e-9);
        uncovered += ok ? 0 : 1;
    }
    out.push_back({s, "polygon_uncovered_alphas", static_cast<double>(uncovered), 0.0,
                   uncovered == 0});

    const CurveProfile par = CurveProfile::parabola();
    const Region k{{{0.5, 0.0}}, 0.01};
    const AngleBands bands =
        compute_bands(par, k, AlphaSet::with_points({{0.45, 0.55}}, 50),
                      AlphaSet::with_points({{1.3, 1.4}}, 50));
    out.push_back({s, "band_separation", bands.eps0, 0.0, bands.eps0 > 0.0});
}

void structure_battery(std::vector<CheckLine>& out, std::uint64_t seed) {
    const std::string s = "lemma4";
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double gap = 0.0;
    double overshoot = 0.0;
    for (int i = 0; i < 200; ++i) {
        const CurveProfile curve = CurveProfile::builtin(kCurves[static_cast<std::size_t>(i) % 3]);
        const double alpha = 2.0 * unit(rng) - 1.0;
        const Interval strip = domain_strip(curve, alpha);
        const Point c{strip.lo + strip.length() * unit(rng), 2.0 * unit(rng) - 1.0};
        const Disk disk(c, 0.01 + 0.49 * strip.length() * unit(rng));
        const DiskTrialResult r = disk_image_trial(curve, alpha, disk, 10000, seed + i);
        gap = std::max({gap, r.lo_gap, r.hi_gap});
        overshoot = std::max(overshoot, r.overshoot);
    }
    below(out, s, "disk_endpoint_gap", gap, 1e-6);
    out.push_back({s, "disk_overshoot", overshoot, 1e-12, overshoot <= 1e-12});

    double special = 0.0;
    double excess = -1.0;
    double regular = 1.0;
    for (const std::string& name : kCurves) {
        const CurveProfile curve = CurveProfile::builtin(name);
        const double w = curve.b() - curve.a();
        const Interval sub{curve.a() + 0.2 * w, curve.a() + 0.7 * w};
        const DiffSweepResult r = diff_interval_sweep(curve, sub, 500);
        special = std::max(special, r.special_width);
        excess = std::max(excess, r.worst_width_excess);
        regular = std::min(regular, r.min_regular_width);
    }
    below(out, s, "difference_set_special_width", special, 1e-10);
    out.push_back({s, "difference_set_width_excess", excess, 1e-12, excess <= 1e-12});
    out.push_back({s, "difference_set_regular_width", regular, 1e-10, regular > 1e-10});
}

void duality_battery(std::vector<CheckLine>& out, std::uint64_t seed) {
    const DualitySweep d = duality_sweep(1000, seed);
    below(out, "duality", "similarity_residual", d.max_similarity_residual, 1e-12);
    below(out, "duality", "slice_difference", d.max_slice_difference_error, 1e-12);
}

}  // namespace

std::string CheckSummary::text() const {
    std::ostringstream os;
    for (const CheckLine& l : lines) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3e (limit %.1e)", l.value, l.threshold);
        os << (l.pass ? "PASS " : "FAIL ") << l.suite << '/' << l.name << ' ' << buf << '\n';
    }
    os << (pass ? "all checks passed" : "some checks FAILED") << '\n';
    return os.str();
}

std::string CheckSummary::json() const {
    detail::json rows = detail::json::array();
    for (const CheckLine& l : lines) {
        rows.push_back(detail::json{{"suite", l.suite},
                                    {"name", l.name},
                                    {"value", l.value},
                                    {"threshold", l.threshold},
                                    {"pass", l.pass}});
    }
    return detail::emit(detail::json{{"pass", pass}, {"checks", rows}});
}

CheckSummary run_checks(std::string_view suite, std::uint64_t seed) {
    const bool all = suite == "all";
    if (!all && suite != "lemma2" && suite != "lemma3" && suite != "lemma4" && suite != "duality") {
        throw PreconditionError("unknown check suite '" + std::string(suite) +
                                "' (expected lemma2, lemma3, lemma4, duality or all)");
    }
    CheckSummary out;
    if (all || suite == "lemma2") {
        vb_battery(out.lines, seed);
    }
    if (all || suite == "lemma3") {
        polygon_battery(out.lines);
    }
    if (all || suite == "lemma4") {
        structure_battery(out.lines, seed);
    }
    if (all || suite == "duality") {
        duality_battery(out.lines, seed);
    }
    out.pass = std::all_of(out.lines.begin(), out.lines.end(),
                           [](const CheckLine& l) { return l.pass; });
    return out;
}

std::string duality_table(int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    detail::json rows = detail::json::array();
    for (int i = 0; i < samples; ++i) {
        const double a = coef(rng);
        const double b = coef(rng);
        const double c = coef(rng);
        const Point slice = line_slice({a, b}, c);
        rows.push_back(detail::json{{"a", a},
                                    {"b", b},
                                    {"c", c},
                                    {"slice", detail::point_json(slice)},
                                    {"residual", similarity_residual({a, b}, c)}});
    }
    const DualitySweep sweep = duality_sweep(samples, seed);
    return detail::emit(detail::json{{"samples", samples},
                                     {"seed", seed},
                                     {"max_similarity_residual", sweep.max_similarity_residual},
                                     {"max_slice_difference_error", sweep.max_slice_difference_error},
                                     {"rows", rows}});
}

}  // namespace vblind

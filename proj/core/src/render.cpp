#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>
#include <sstream>

#include "vblind/cli.hpp"
#include "vblind/errors.hpp"
#include "vblind/json_io.hpp"

namespace vblind {

namespace {

constexpr std::array<const char*, 6> kStageColors{"#555555", "#1f77b4", "#2ca02c",
                                                  "#9467bd", "#8c564b", "#17becf"};

class Canvas {
public:
    Canvas(double x0, double x1, double y0, double y1) : x0_(x0), y1_(y1) {
        const double w = std::max(x1 - x0, 1e-12);
        const double h = std::max(y1 - y0, 1e-12);
        scale_ = kSize / std::max(w, h);
        width_ = w * scale_ + 2 * kMargin;
        height_ = h * scale_ + 2 * kMargin;
    }

    std::string x(double v) const { return num(kMargin + (v - x0_) * scale_); }
    std::string y(double v) const { return num(kMargin + (y1_ - v) * scale_); }
    std::string width() const { return num(width_); }
    std::string height() const { return num(height_); }

    std::string line(Point p, Point q, const char* color, double stroke) const {
        return "<line x1=\"" + x(p.x1) + "\" y1=\"" + y(p.x2) + "\" x2=\"" + x(q.x1) +
               "\" y2=\"" + y(q.x2) + "\" stroke=\"" + color + "\" stroke-width=\"" +
               num(stroke) + "\"/>\n";
    }

    static std::string num(double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", v);
        return buf;
    }

private:
    static constexpr double kSize = 800.0;
    static constexpr double kMargin = 20.0;
    double x0_;
    double y1_;
    double scale_ = 1.0;
    double width_ = 0.0;
    double height_ = 0.0;
};

}  // namespace

std::string render_svg(const BlindSet& blinds, const SceneSpec& spec) {
    if (blinds.segments.empty()) {
        throw PreconditionError("cannot render an empty blind set");
    }
    const CurveProfile curve = spec.curve();
    std::vector<Point> fiber;
    constexpr int kFiberPoints = 200;
    for (int i = 0; i < kFiberPoints; ++i) {
        const double t = i == kFiberPoints - 1
                             ? spec.subrange.hi
                             : spec.subrange.lo + spec.subrange.length() * i / (kFiberPoints - 1);
        fiber.push_back(fiber_point(curve, spec.y, t));
    }

    double x0 = std::numeric_limits<double>::infinity();
    double x1 = -x0;
    double y0 = x0;
    double y1 = -x0;
    const auto grow = [&](Point p) {
        x0 = std::min(x0, p.x1);
        x1 = std::max(x1, p.x1);
        y0 = std::min(y0, p.x2);
        y1 = std::max(y1, p.x2);
    };
    for (const Segment& s : blinds.segments) {
        grow(s.a());
        grow(s.b());
    }
    for (const StagedSegment& s : blinds.scaffold) {
        grow(s.segment.a());
        grow(s.segment.b());
    }
    for (const Point& p : fiber) {
        grow(p);
    }
    const double pad = 0.05 * std::max(x1 - x0, y1 - y0);
    x0 -= pad;
    x1 += pad;
    y0 -= pad;
    y1 += pad;
    const Canvas c(x0, x1, y0, y1);

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << c.width() << "\" height=\""
       << c.height() << "\" viewBox=\"0 0 " << c.width() << ' ' << c.height() << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    os << "<g id=\"strips\" stroke-dasharray=\"6 4\">\n";
    for (double alpha : {spec.y.x1, spec.a_cover.lo, spec.a_cover.hi}) {
        const Interval strip = domain_strip(curve, alpha);
        for (double edge : {strip.lo, strip.hi}) {
            if (edge >= x0 && edge <= x1) {
                os << c.line({edge, y0}, {edge, y1}, alpha == spec.y.x1 ? "#d62728" : "#ff7f0e", 0.8);
            }
        }
    }
    os << "</g>\n";

    os << "<g id=\"fiber\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\">\n<polyline points=\"";
    for (std::size_t i = 0; i < fiber.size(); ++i) {
        os << (i ? " " : "") << c.x(fiber[i].x1) << ',' << c.y(fiber[i].x2);
    }
    os << "\"/>\n</g>\n";

    int max_stage = 0;
    for (const StagedSegment& s : blinds.scaffold) {
        max_stage = std::max(max_stage, s.stage);
    }
    for (int stage = 0; stage <= max_stage; ++stage) {
        os << "<g id=\"stage-" << stage << "\">\n";
        const char* color = kStageColors[static_cast<std::size_t>(stage) % kStageColors.size()];
        for (const StagedSegment& s : blinds.scaffold) {
            if (s.stage == stage) {
                os << c.line(s.segment.a(), s.segment.b(), color, stage == 0 ? 1.5 : 0.6);
            }
        }
        os << "</g>\n";
    }

    os << "<g id=\"blinds\">\n";
    for (const Segment& s : blinds.segments) {
        os << c.line(s.a(), s.b(), "#e31a1c", 0.8);
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

std::string run_render(std::string_view blindset_json, const SceneSpec& spec) {
    validate(spec);
    return render_svg(blindset_from_json(blindset_json), spec);
}

}  // namespace vblind

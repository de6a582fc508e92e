#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vblind/keylemma.hpp"
#include "vblind/scene.hpp"
#include "vblind/verify.hpp"

namespace vblind {

struct ConstructOptions {
    std::optional<int> grid_alpha;       // overrides the scene's alpha_points
    std::optional<std::uint64_t> seed;   // overrides the scene's seed
    bool rigorous = false;               // include Lipschitz padding in the report
};

struct ConstructOutput {
    KeyConstruction construction;
    VerificationReport cover;
    VerificationReport small;
    bool pass = false;
    std::string blindset_json;
    std::string report_json;
};

ConstructOutput run_construct(const SceneSpec& spec, const ConstructOptions& options = {});

// SVG with layers for the fiber arc, strip boundaries, construction stages and blinds.
std::string run_render(std::string_view blindset_json, const SceneSpec& spec);
std::string render_svg(const BlindSet& blinds, const SceneSpec& spec);

struct CheckLine {
    std::string suite;
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

struct CheckSummary {
    std::vector<CheckLine> lines;
    bool pass = true;

    std::string text() const;
    std::string json() const;
};

// suite is one of lemma2, lemma3, lemma4, duality, all.
CheckSummary run_checks(std::string_view suite, std::uint64_t seed = 1);

// Residual table for the slice identities.
std::string duality_table(int samples, std::uint64_t seed);

}  // namespace vblind

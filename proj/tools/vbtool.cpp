#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "vblind/cli.hpp"
#include "vblind/errors.hpp"

namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw vblind::Error("cannot write " + path.string());
    }
    out << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw vblind::Error("cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Venetian-blind constructions for curve-translate projections"};
    app.require_subcommand(1);

    std::string scene_path;
    std::string out_dir = ".";
    int grid_alpha = 0;
    std::uint64_t seed = 0;
    bool rigorous = false;

    auto* construct = app.add_subcommand("construct", "build blinds for a scene and verify them");
    construct->add_option("--scene", scene_path, "scene JSON")->required()->check(CLI::ExistingFile);
    construct->add_option("--out", out_dir, "output directory");
    construct->add_option("--grid-alpha", grid_alpha, "alpha grid points per interval")
        ->check(CLI::Range(2, 1 << 20));
    construct->add_option("--seed", seed, "override the scene seed");
    construct->add_flag("--rigorous", rigorous, "report Lipschitz padding certificates");

    std::string blinds_path;
    auto* render = app.add_subcommand("render", "draw a blind set as SVG");
    render->add_option("--scene", scene_path, "scene JSON")->required()->check(CLI::ExistingFile);
    render->add_option("--blinds", blinds_path, "blindset.json (default: <out>/blindset.json)");
    render->add_option("--out", out_dir, "output directory");

    std::string suite = "all";
    auto* checks = app.add_subcommand("checks", "run invariant batteries");
    checks->add_option("suite", suite, "lemma2, lemma3, lemma4, duality or all")
        ->check(CLI::IsMember({"lemma2", "lemma3", "lemma4", "duality", "all"}));
    checks->add_option("--seed", seed, "random seed");
    checks->add_option("--out", out_dir, "write checks.json here");

    int samples = 1000;
    auto* duality = app.add_subcommand("duality", "slice identity residual table");
    duality->add_option("--samples", samples, "number of random samples")->check(CLI::PositiveNumber);
    duality->add_option("--seed", seed, "random seed");
    duality->add_option("--out", out_dir, "write duality.json here");

    CLI11_PARSE(app, argc, argv);

    try {
        fs::create_directories(out_dir);
        if (construct->parsed()) {
            vblind::ConstructOptions opts;
            if (grid_alpha > 0) {
                opts.grid_alpha = grid_alpha;
            }
            if (construct->count("--seed") > 0) {
                opts.seed = seed;
            }
            opts.rigorous = rigorous;
            const vblind::SceneSpec spec = vblind::load_scene(scene_path);
            const vblind::ConstructOutput out = vblind::run_construct(spec, opts);
            write_file(fs::path(out_dir) / "blindset.json", out.blindset_json);
            write_file(fs::path(out_dir) / "report.json", out.report_json);
            std::cout << spec.id << ": " << out.construction.blinds.segments.size()
                      << " segments, cover " << (out.cover.pass ? "PASS" : "FAIL")
                      << ", small " << (out.small.pass ? "PASS" : "FAIL") << " (max measure "
                      << out.small.max_measure << " < " << spec.epsilon << ")";
            if (rigorous) {
                std::cout << ", padding certified: cover "
                          << (out.cover.padding_certified ? "yes" : "no") << ", small "
                          << (out.small.padding_certified ? "yes" : "no");
            }
            std::cout << '\n';
            return out.pass ? 0 : 1;
        }
        if (render->parsed()) {
            const vblind::SceneSpec spec = vblind::load_scene(scene_path);
            const std::string src =
                blinds_path.empty() ? (fs::path(out_dir) / "blindset.json").string() : blinds_path;
            write_file(fs::path(out_dir) / "figure.svg", vblind::run_render(read_file(src), spec));
            std::cout << "wrote " << (fs::path(out_dir) / "figure.svg").string() << '\n';
            return 0;
        }
        if (checks->parsed()) {
            const vblind::CheckSummary summary =
                vblind::run_checks(suite, checks->count("--seed") > 0 ? seed : 1);
            std::cout << summary.text();
            if (checks->count("--out") > 0) {
                write_file(fs::path(out_dir) / "checks.json", summary.json());
            }
            return summary.pass ? 0 : 1;
        }
        if (duality->parsed()) {
            const std::string table =
                vblind::duality_table(samples, duality->count("--seed") > 0 ? seed : 1);
            if (duality->count("--out") > 0) {
                write_file(fs::path(out_dir) / "duality.json", table);
            } else {
                std::cout << table;
            }
            return 0;
        }
    } catch (const vblind::SceneError& e) {
        std::cerr << "scene error at " << e.path() << ": " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

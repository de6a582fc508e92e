#include <vblind/blinds.hpp>
#include <vblind/keylemma.hpp>
#include <vblind/measure.hpp>
#include <vblind/scene.hpp>

#include <benchmark/benchmark.h>

#include <cmath>
#include <string>

using namespace vblind;

namespace {

const Segment kUnit({0.0, 0.0}, {std::cos(2.9), std::sin(2.9)});

void BM_IterVB(benchmark::State& state) {
    const BranchTree tree = BranchTree::constant(static_cast<int>(state.range(0)), 4);
    for (auto _ : state) {
        BlindSet b = iter_vb(kUnit, normalize(0.3), normalize(2.6), tree, Chirality::counterclockwise);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_IterVB)->DenseRange(1, 6);

void BM_ProjectBlinds(benchmark::State& state) {
    const BlindSet b = iter_vb(kUnit, normalize(0.3), normalize(2.6),
                               BranchTree::constant(static_cast<int>(state.range(0)), 4),
                               Chirality::counterclockwise);
    const CurveProfile curve = CurveProfile::quarter_circle();
    for (auto _ : state) {
        IntervalUnion u = project_blinds(curve, 0.35, b.segments);
        benchmark::DoNotOptimize(u);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(b.segments.size()));
}
BENCHMARK(BM_ProjectBlinds)->DenseRange(2, 6, 2);

void BM_KeyConstruction(benchmark::State& state) {
    static const char* const ids[] = {"Q1", "P1", "E1"};
    const SceneSpec s =
        load_scene(std::string(VBLIND_SCENE_DIR) + "/" + ids[state.range(0)] + ".json");
    KeyOptions ko;
    ko.n_max = s.n_max;
    ko.m_max = s.m_max;
    ko.region_samples = s.segment_points;
    for (auto _ : state) {
        KeyConstruction kc = key_construction(s.curve(), s.y, s.subrange, s.small_set(),
                                              s.cover_set(), s.epsilon, s.delta, ko);
        benchmark::DoNotOptimize(kc);
    }
    state.SetLabel(ids[state.range(0)]);
}
BENCHMARK(BM_KeyConstruction)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

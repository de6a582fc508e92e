#include <vblind/cli.hpp>
#include <vblind/errors.hpp>
#include <vblind/json_io.hpp>
#include <vblind/scene.hpp>

#include <gtest/gtest.h>
#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

using namespace vblind;

namespace {

const std::string kScene = R"({
  "schema_version": 1,
  "id": "T",
  "curve": {"name": "quarter_circle"},
  "y": [0.0, 0.0],
  "subrange": [-0.05, 0.05],
  "A_small": [[-0.1, 0.1]],
  "A_cover": [0.3, 0.4],
  "epsilon": 0.05,
  "delta": 0.05,
  "grids": {"alpha_points": 60, "segment_points": 32},
  "caps": {"N_max": 1048576, "m_max": 64},
  "seed": 3
})";

std::string replace(std::string s, const std::string& from, const std::string& to) {
    s.replace(s.find(from), from.size(), to);
    return s;
}

std::string error_path(const std::string& text) {
    try {
        parse_scene(text);
    } catch (const SceneError& e) {
        return e.path();
    }
    return "";
}

}  // namespace

TEST(Scene, ParsesAndRoundTrips) {
    const SceneSpec s = parse_scene(kScene);
    EXPECT_EQ(s.id, "T");
    EXPECT_EQ(s.curve_name, "quarter_circle");
    EXPECT_EQ(s.a_small.size(), 1u);
    EXPECT_EQ(s.alpha_points, 60);
    EXPECT_EQ(s.seed, 3u);
    EXPECT_EQ(parse_scene(serialize_scene(s)), s);
}

TEST(Scene, BundledScenesLoad) {
    for (const char* id : {"Q1", "P1", "E1"}) {
        const SceneSpec s = load_scene(std::string(VBLIND_SCENE_DIR) + "/" + id + ".json");
        EXPECT_EQ(s.id, id);
    }
    EXPECT_THROW(load_scene("/nonexistent/scene.json"), SceneError);
}

TEST(Scene, ValidationNamesTheField) {
    EXPECT_EQ(error_path(replace(kScene, "[[-0.1, 0.1]]", "[[-0.1, 0.35]]")), "A_small[0]");
    EXPECT_EQ(error_path(replace(kScene, "\"epsilon\": 0.05", "\"epsilon\": -1")), "epsilon");
    EXPECT_EQ(error_path(replace(kScene, "\"y\": [0.0, 0.0]", "\"y\": [0.2, 0.0]")), "y");
    EXPECT_EQ(error_path(replace(kScene, "[-0.05, 0.05]", "[0.05, -0.05]")), "subrange");
    EXPECT_EQ(error_path(replace(kScene, "quarter_circle", "cubic")), "curve");
    EXPECT_EQ(error_path(replace(kScene, "\"id\": \"T\",", "")), "id");
    EXPECT_EQ(error_path("{not json"), "scene");
}

TEST(Construct, PassesAndIsDeterministic) {
    const SceneSpec s = parse_scene(kScene);
    const ConstructOutput a = run_construct(s);
    EXPECT_TRUE(a.pass);
    EXPECT_TRUE(a.cover.pass);
    EXPECT_TRUE(a.small.pass);
    const ConstructOutput b = run_construct(s);
    EXPECT_EQ(a.blindset_json, b.blindset_json);
    EXPECT_EQ(a.report_json, b.report_json);
}

TEST(Construct, MatchesShippedReports) {
    for (const char* id : {"Q1", "P1", "E1"}) {
        SCOPED_TRACE(id);
        const std::string dir = VBLIND_SCENE_DIR;
        std::ifstream in(dir + "/expected/" + id + ".report.json");
        ASSERT_TRUE(in);
        std::ostringstream text;
        text << in.rdbuf();
        const auto shipped = nlohmann::json::parse(text.str());
        const auto fresh =
            nlohmann::json::parse(run_construct(load_scene(dir + "/" + id + ".json")).report_json);
        EXPECT_EQ(fresh["pass"], shipped["pass"]);
        EXPECT_EQ(fresh["construction"]["segments"], shipped["construction"]["segments"]);
        for (const char* part : {"cover", "small"}) {
            EXPECT_EQ(fresh[part]["pass"], shipped[part]["pass"]);
            EXPECT_NEAR(fresh[part]["max_measure"].get<double>(),
                        shipped[part]["max_measure"].get<double>(), 1e-9);
        }
    }
}

TEST(Construct, RigorousAddsPadding) {
    const SceneSpec s = parse_scene(kScene);
    const ConstructOutput plain = run_construct(s);
    const ConstructOutput rigorous = run_construct(s, {.rigorous = true});
    EXPECT_EQ(plain.report_json.find("padding"), std::string::npos);
    EXPECT_NE(rigorous.report_json.find("padding_certified"), std::string::npos);
}

TEST(Json, BlindSetRoundTrip) {
    const ConstructOutput out = run_construct(parse_scene(kScene));
    const BlindSet& b = out.construction.blinds;
    EXPECT_EQ(blindset_from_json(to_json(b)), b);
    EXPECT_EQ(blindset_from_json(out.blindset_json).segments, b.segments);
}

TEST(Json, ReportAndUnionRoundTrip) {
    const ConstructOutput out = run_construct(parse_scene(kScene));
    EXPECT_EQ(report_from_json(to_json(out.cover)), out.cover);
    EXPECT_EQ(report_from_json(to_json(out.small)), out.small);
    const IntervalUnion u = union_of({{0.1, 0.30000000000000004}, {1.0 / 3, 2}});
    EXPECT_EQ(interval_union_from_json(to_json(u)), u);
}

TEST(Render, DeterministicAndRejectsEmpty) {
    const SceneSpec s = parse_scene(kScene);
    const ConstructOutput out = run_construct(s);
    const std::string svg = run_render(out.blindset_json, s);
    EXPECT_NE(svg.find("<svg"), std::string::npos);
    EXPECT_NE(svg.find("blinds"), std::string::npos);
    EXPECT_EQ(run_render(out.blindset_json, s), svg);
    EXPECT_THROW(render_svg(BlindSet{}, s), PreconditionError);
}

TEST(RunChecks, SuitesAggregate) {
    const CheckSummary duality = run_checks("duality");
    EXPECT_TRUE(duality.pass);
    for (const CheckLine& l : duality.lines) EXPECT_LT(l.value, 1e-12) << l.name;

    const CheckSummary lemma2 = run_checks("lemma2");
    EXPECT_TRUE(lemma2.pass);

    const CheckSummary all = run_checks("all");
    EXPECT_TRUE(all.pass);
    std::size_t parts = 0;
    for (const char* suite : {"lemma2", "lemma3", "lemma4", "duality"}) {
        parts += run_checks(suite).lines.size();
    }
    EXPECT_EQ(all.lines.size(), parts);
    EXPECT_THROW(run_checks("lemma9"), PreconditionError);
}

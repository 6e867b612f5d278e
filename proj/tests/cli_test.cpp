#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "cli/json_io.hpp"
#include "rot4/compose.hpp"

namespace rot4::cli {
namespace {

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args, const std::string& input = "") {
    args.insert(args.begin(), "rot4");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

std::vector<Json> parse_lines(const std::string& text) {
    std::istringstream in(text);
    return read_json_values(in);
}

constexpr const char* kF = R"({"a":[0.7071067811865476,0.7071067811865476,0,0],"b":[0.7071067811865476,0,0.7071067811865476,0]})";
constexpr const char* kG = R"({"a":[0.7071067811865476,0,0.7071067811865476,0],"b":[0.7071067811865476,0,0,0.7071067811865476]})";

TEST(JsonIo, ParseDocValidation) {
    EXPECT_NO_THROW((void)parse_doc(Json::parse(kF)));
    for (const char* bad : {R"({"a":[1,0,0,0]})", R"({"a":[1,0,0],"b":[1,0,0,0]})", R"({"a":[1,0,0,"x"],"b":[1,0,0,0]})",
                            R"([1,2,3])"}) {
        try {
            (void)parse_doc(Json::parse(bad));
            ADD_FAILURE() << bad;
        } catch (const CliError& e) {
            EXPECT_EQ(e.exit_code(), kExitMalformed) << bad;
        }
    }
}

TEST(JsonIo, NonUnitAndNormalize) {
    const RotationDoc doc = parse_doc(Json::parse(R"({"a":[2,0,0,0],"b":[0,0,3,0]})"));
    try {
        (void)to_rotation(doc, false);
        FAIL();
    } catch (const CliError& e) {
        EXPECT_EQ(e.exit_code(), kExitNonUnit);
    }
    const Rotation4 r = to_rotation(doc, true);
    EXPECT_EQ(r.a(), kOne);
    EXPECT_EQ(r.b(), kJ);
}

TEST(JsonIo, SeventeenDigitRoundTrip) {
    Sampler s(61);
    for (int n = 0; n < 200; ++n) {
        const RotationDoc doc = to_doc(s.any_rotation());
        const RotationDoc back = parse_doc(Json::parse(dump_json(to_json(doc))));
        EXPECT_EQ(back, doc);
    }
}

TEST(JsonIo, ReadsJsonLinesAndArrays) {
    const auto values = parse_lines(std::string(kF) + "\n" + kG + "\n");
    ASSERT_EQ(values.size(), 2u);
    const auto docs = collect_docs(parse_lines(std::string("[") + kF + "," + kG + "]"));
    EXPECT_EQ(docs.size(), 2u);
}

TEST(JsonIo, TextFormatting) {
    EXPECT_EQ(quaternion_text(Quaternion(0.5, 0.5, 0.5, -0.5)), "0.5 + 0.5i + 0.5j - 0.5k");
    EXPECT_EQ(quaternion_text(Quaternion(0.0)), "0");
}

TEST(Cli, MalformedInputExitsTwo) {
    EXPECT_EQ(run_cli({"classify"}, "{not json").code, kExitMalformed);
    EXPECT_EQ(run_cli({"classify"}, R"({"a":[1,0,0,0]})").code, kExitMalformed);
    EXPECT_EQ(run_cli({"classify"}, "").code, kExitMalformed);
    EXPECT_EQ(run_cli({"nonsense"}).code, kExitMalformed);
    EXPECT_EQ(run_cli({"random", "--kind", "sideways"}).code, kExitMalformed);
    EXPECT_EQ(run_cli({"classify", "/nonexistent/file.json"}).code, kExitMalformed);
}

TEST(Cli, NonUnitExitsThree) {
    const std::string doc = R"({"a":[1,1,0,0],"b":[1,0,0,0]})";
    const RunResult r = run_cli({"classify"}, doc);
    EXPECT_EQ(r.code, kExitNonUnit);
    EXPECT_NE(r.err.find("unit"), std::string::npos);
    EXPECT_EQ(run_cli({"classify", "--normalize"}, doc).code, kExitOk);
}

TEST(Cli, ClassifyWorkedExample) {
    const RunResult text = run_cli({"classify"}, kF);
    EXPECT_EQ(text.code, kExitOk);
    EXPECT_NE(text.out.find("kind: Simple"), std::string::npos);
    EXPECT_NE(text.out.find("fixed plane"), std::string::npos);

    const RunResult js = run_cli({"classify", "--json"}, kF);
    ASSERT_EQ(js.code, kExitOk);
    const Json j = Json::parse(js.out);
    EXPECT_EQ(j["kind"], "Simple");
    EXPECT_NEAR(j["angles"][0].get<double>(), 1.5707963267948966, 1e-15);
}

TEST(Cli, ComposeWorkedExample) {
    const RunResult r = run_cli({"compose", "--json", "--gibbs", "--check-simple"}, std::string(kF) + "\n" + kG);
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const Json j = Json::parse(r.out);
    const Rotation4 h = to_rotation(parse_doc(j), false);
    EXPECT_LE(factor_distance(h, Rotation4{Quaternion(0.5, 0.5, 0.5, -0.5), Quaternion(0.5, 0.5, 0.5, 0.5)}), 1e-15);
    EXPECT_NEAR(j["gibbs"]["cos_alpha"].get<double>(), 0.5, 1e-15);
    EXPECT_NEAR(j["gibbs"]["p_tilde"][2].get<double>(), -1.0, 1e-15);
    EXPECT_EQ(j["simplicity"]["is_simple"], true);
    EXPECT_EQ(j["simplicity"]["tests_agree"], true);
    EXPECT_EQ(j["simplicity"]["composed_kind"], "Simple");

    // Same pair as an object and as an array.
    const Json obj = Json::parse(run_cli({"compose", "--json"}, std::string(R"({"f":)") + kF + R"(,"g":)" + kG + "}").out);
    const Json arr = Json::parse(run_cli({"compose", "--json"}, std::string("[") + kF + "," + kG + "]").out);
    EXPECT_EQ(obj, Json::parse(run_cli({"compose", "--json"}, std::string(kF) + kG).out));
    EXPECT_EQ(obj, arr);
}

TEST(Cli, ComposeNeedsTwoDocuments) { EXPECT_EQ(run_cli({"compose"}, kF).code, kExitMalformed); }

TEST(Cli, ComposeGibbsSingularIsAWarning) {
    const std::string f = R"({"a":[0.7071067811865476,0.7071067811865476,0,0],"b":[1,0,0,0]})";
    const RunResult r = run_cli({"compose", "--json", "--gibbs"}, f + f);
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(Json::parse(r.out)["gibbs"]["singular"], true);
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, RandomIsDeterministic) {
    const RunResult a = run_cli({"random", "--seed", "7", "--count", "5"});
    const RunResult b = run_cli({"random", "--seed", "7", "--count", "5"});
    EXPECT_EQ(a.code, kExitOk);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out, run_cli({"random", "--seed", "8", "--count", "5"}).out);
    EXPECT_EQ(parse_lines(a.out).size(), 5u);

    for (const Json& j : parse_lines(run_cli({"random", "--kind", "left-isoclinic", "--count", "20"}).out)) {
        EXPECT_EQ(j["b"], Json::parse("[1.0,0.0,0.0,0.0]"));
    }
    for (const Json& j : parse_lines(run_cli({"random", "--kind", "simple", "--count", "20"}).out)) {
        const RotationDoc d = parse_doc(j);
        EXPECT_NEAR(d.a[0], d.b[0], 1e-15);
    }
}

TEST(Cli, VerifyBatch) {
    const std::string docs = run_cli({"random", "--seed", "3", "--count", "1000"}).out;
    const RunResult r = run_cli({"verify"}, docs);
    EXPECT_EQ(r.code, kExitOk) << r.out;
    EXPECT_NE(r.out.find("1000/1000 consistent"), std::string::npos);

    const RunResult simple = run_cli({"verify", "--json"}, run_cli({"random", "--kind", "simple", "--count", "200"}).out);
    EXPECT_EQ(simple.code, kExitOk);
    for (const Json& j : parse_lines(simple.out)) EXPECT_EQ(j["consistent"], true);
}

TEST(Cli, Reflections) {
    const RunResult r = run_cli({"reflections", "--json"}, kF);
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const Json j = Json::parse(r.out);
    const auto q = [](const Json& v) { return Quaternion(v[0], v[1], v[2], v[3]); };
    const Rotation4 back = from_reflections(ReflectionNormal{q(j["y"])}, ReflectionNormal{q(j["z"])});
    EXPECT_LE(factor_distance(back, to_rotation(parse_doc(Json::parse(kF)), false)), 1e-12);

    EXPECT_EQ(run_cli({"reflections"}, R"({"a":[0,1,0,0],"b":[0,0,0,1]})").code, kExitOk);
    EXPECT_EQ(run_cli({"reflections"}, R"({"a":[1,0,0,0],"b":[0,0,0,1]})").code, kExitMalformed);
}

}  // namespace
}  // namespace rot4::cli

#include "commands.hpp"

#include "hopfkit/system.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace hopfkit;
using namespace hopfkit::cli;

namespace {

std::string data(const std::string &name) { return std::string(HOPFKIT_DATA_DIR) + "/" + name; }
std::string test_data(const std::string &name) { return std::string(HOPFKIT_TEST_DATA_DIR) + "/" + name; }

Options average_opts(const std::string &backend, const std::string &mode)
{
    Options o;
    o.command = "average";
    o.input = data("ode5.json");
    o.backend = backend;
    o.mode = mode;
    o.order = 3;
    return o;
}

std::map<std::string, std::string> table(const nlohmann::json &recs)
{
    std::map<std::string, std::string> out;
    for (const auto &r : recs)
        out[r["index"].get<std::string>()] = r["coefficient"].get<std::string>();
    return out;
}

} // namespace

TEST(Cli, Fnv1aReferenceValues)
{
    EXPECT_EQ(fnv1a(""), "cbf29ce484222325");
    EXPECT_EQ(fnv1a("a"), "af63dc4c8601ec8c");
    EXPECT_EQ(fnv1a("foobar"), "85944171f73967e8");
}

TEST(Cli, AverageWordsGolden)
{
    auto rep = run(average_opts("words", "zeromean"));
    EXPECT_EQ(rep.exit_code, ok);
    auto t = table(rep.payload["beta_bar"]);
    EXPECT_EQ(t.size(), 19u);
    EXPECT_EQ(t["bab"], "-1/2*w^-2");
    EXPECT_EQ(t["add"], "1/36*w^-2");
    EXPECT_TRUE(rep.payload["predicates"]["holds"].get<bool>());
    auto strobo = run(average_opts("words", "strobo"));
    EXPECT_EQ(strobo.payload["beta_bar"].size(), 40u);
}

TEST(Cli, AverageTreesReportsSurvivorsAndCompression)
{
    auto rep = run(average_opts("trees", "zeromean"));
    EXPECT_EQ(rep.payload["compressed"].get<std::string>(), "a + w^-2*(1/4*[[a,b],b] + 1/16*[[a,c],c])");
    auto surv = rep.payload["survivors"].get<std::vector<std::string>>();
    EXPECT_EQ(surv, (std::vector<std::string>{"a", "a[b[b]]", "a[bb]", "b[a[b]]", "b[ab]", "c[a[c]]"}));
    EXPECT_EQ(rep.payload["independent"].size(), 5u);
}

TEST(Cli, AverageBackendsAgreeOnTheField)
{
    auto w = run(average_opts("words", "zeromean"));
    auto t = run(average_opts("trees", "zeromean"));
    auto m = run(average_opts("monomial", "zeromean"));
    EXPECT_EQ(w.payload["field"], t.payload["field"]);
    EXPECT_EQ(w.payload["field"], m.payload["field"]);
    EXPECT_EQ(m.payload["predicates"]["scope"], "Lie coordinates");
}

TEST(Cli, ConstantFieldIsItsOwnAverage)
{
    for (const char *backend : {"words", "trees", "monomial"})
        for (const char *mode : {"strobo", "zeromean"}) {
            Options o;
            o.command = "average";
            o.input = data("constant.json");
            o.backend = backend;
            o.mode = mode;
            auto rep = run(o);
            auto bb = table(rep.payload["beta_bar"]);
            nlohmann::json field = {{{"w_power", 0}, {"components", {{"x", "1"}, {"y", "2"}}}}};
            EXPECT_EQ(rep.payload["field"], field) << backend << " " << mode;
            if (std::string(backend) != "monomial") {
                EXPECT_EQ(bb.size(), 1u);
                EXPECT_EQ(bb["a"], "1");
                EXPECT_EQ(table(rep.payload["kappa"]), (std::map<std::string, std::string>{{"1", "1"}}));
            } else {
                // one coordinate per monomial piece: 1*dx and 2*dy
                EXPECT_EQ(bb, (std::map<std::string, std::string>{{"B0", "1"}, {"B1", "2"}}));
                EXPECT_TRUE(rep.payload["kappa"].empty());
            }
        }
}

TEST(Cli, ReportsAreDeterministic)
{
    auto a = run(average_opts("trees", "strobo"));
    auto b = run(average_opts("trees", "strobo"));
    EXPECT_EQ(a.payload.dump(), b.payload.dump());
    EXPECT_EQ(a.text, b.text);
    EXPECT_EQ(a.digest, b.digest);
    auto c = run(average_opts("trees", "zeromean"));
    EXPECT_NE(a.digest, c.digest);
}

TEST(Cli, ReportSchema)
{
    auto j = run(average_opts("words", "zeromean")).to_json();
    EXPECT_EQ(j["schema"], "hopfkit-report/1");
    EXPECT_EQ(j["command"], "average");
    EXPECT_EQ(j["inputs"]["digest"].get<std::string>().rfind("fnv1a64:", 0), 0u);
    EXPECT_EQ(j["inputs"]["options"]["backend"], "words");
    EXPECT_TRUE(j["timing"]["seconds"].is_number());
    EXPECT_EQ(j["exit_code"], 0);
    EXPECT_TRUE(j["payload"].contains("beta_bar"));
}

TEST(Cli, SeedSelectsSampledPredicates)
{
    auto o = average_opts("words", "strobo");
    o.seed = 5;
    auto rep = run(o);
    EXPECT_EQ(rep.payload["predicates"]["scope"], "2000 pairs, seed 5");
    EXPECT_TRUE(rep.payload["predicates"]["holds"].get<bool>());
}

TEST(Cli, CapsAreEnforcedAndOverridable)
{
    auto o = average_opts("trees", "zeromean");
    o.order = 7;
    EXPECT_THROW(run(o), std::length_error);
    o.backend = "words";
    o.order = 2;
    o.cap = 1;
    EXPECT_THROW(run(o), std::length_error);
    o.cap = 2;
    EXPECT_NO_THROW(run(o));
}

TEST(Cli, ChenIsACharacterWithLinearFirstTerm)
{
    for (const char *backend : {"words", "trees"}) {
        Options o;
        o.command = "chen";
        o.input = data("ode5.json");
        o.backend = backend;
        o.order = 2;
        auto rep = run(o);
        auto t = table(rep.payload["chen"]);
        EXPECT_EQ(t["1"], "1");
        EXPECT_EQ(t["a"], "t");
        EXPECT_EQ(t["b"], "w^-1*sin(w*t)");
        EXPECT_TRUE(rep.payload["predicates"]["holds"].get<bool>());
    }
    Options o;
    o.command = "chen";
    o.input = data("ode5.json");
    o.backend = "monomial";
    EXPECT_THROW(run(o), std::invalid_argument);
}

TEST(Cli, HopfBuiltinsPassTheAudit)
{
    for (const char *b : {"abelian", "witt", "free-lie", "grossman-larson"}) {
        Options o;
        o.command = "hopf";
        o.builtin = b;
        o.order = 4;
        auto rep = run(o);
        EXPECT_TRUE(rep.payload["audit"]["all"].get<bool>()) << b;
    }
}

TEST(Cli, HopfFileMatchesBuiltinWitt)
{
    Options file;
    file.command = "hopf";
    file.input = data("witt4.json");
    file.order = 4;
    Options builtin;
    builtin.command = "hopf";
    builtin.builtin = "witt";
    builtin.order = 4;
    auto a = run(file), b = run(builtin);
    EXPECT_EQ(a.payload["mu"], b.payload["mu"]);
    EXPECT_EQ(a.payload["generators"], b.payload["generators"]);
}

TEST(Cli, HopfRejectsBadStructureConstants)
{
    Options o;
    o.command = "hopf";
    o.order = 3;
    o.input = test_data("bad_jacobi.json");
    EXPECT_THROW(run(o), std::invalid_argument);
    o.input = test_data("bad_grading.json");
    EXPECT_THROW(run(o), std::invalid_argument);
}

TEST(Cli, SplitWithTrivialActionEchoesTheGenerator)
{
    Options o;
    o.command = "split";
    o.input = data("split_commuting.json");
    auto rep = run(o);
    EXPECT_EQ(table(rep.payload["beta_tau"]), (std::map<std::string, std::string>{{"a", "1"}, {"b", "1"}}));
    EXPECT_TRUE(rep.payload["resonance_set"].empty());
    EXPECT_EQ(rep.payload["modified_field"].size(), 2u);
}

TEST(Cli, SplitDegreeOneClosedForm)
{
    Options o;
    o.command = "split";
    o.input = data("split_single.json");
    auto rep = run(o);
    EXPECT_EQ(rep.payload["degree_one"][0]["closed_form"], "(1*w*tau/2)/sin(1*w*tau/2)");
    EXPECT_EQ(rep.exit_code, ok);
}

TEST(Cli, SplitResonanceExit)
{
    Options o;
    o.command = "split";
    o.input = data("split_single.json");
    o.omega_tau_over_2pi = "1";
    auto rep = run(o);
    EXPECT_EQ(rep.exit_code, resonance);
    ASSERT_EQ(rep.payload["resonant"].size(), 1u);
    EXPECT_EQ(rep.payload["resonant"][0]["k"], 1);
    o.omega_tau_over_2pi = "1/3";
    EXPECT_EQ(run(o).exit_code, ok);
    o.input = data("split_rotation.json");
    o.omega_tau_over_2pi = "1/4";
    EXPECT_EQ(run(o).exit_code, ok);
    o.omega_tau_over_2pi = "1/2";
    EXPECT_EQ(run(o).exit_code, resonance);
}

TEST(Cli, ValidateOrderOneAndSlopeExit)
{
    Options o;
    o.command = "validate";
    o.input = data("ode5.json");
    o.order = 1;
    o.omegas = {50, 100, 200};
    auto rep = run(o);
    EXPECT_EQ(rep.exit_code, ok);
    EXPECT_NEAR(rep.payload["slope"].get<double>(), -2.0, 0.35);
    o.slope_tolerance = 1e-6;
    EXPECT_EQ(run(o).exit_code, slope_out_of_tolerance);
}

TEST(Cli, MissingFieldMeansZeroField)
{
    auto spec = load_system(data("split_single.json"));
    EXPECT_TRUE(spec.generators[0].field.is_zero());
    EXPECT_EQ(spec.generators[0].frequency, 1);
}

TEST(Cli, BinaryExitCodes)
{
    std::string bin = HOPFKIT_CLI;
    auto status = [&](const std::string &args) {
        int s = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
        return WEXITSTATUS(s);
    };
    EXPECT_EQ(status("average " + data("constant.json")), 0);
    EXPECT_EQ(status("split " + data("split_single.json") + " --omega-tau-over-2pi 1"), 2);
    EXPECT_EQ(status("average " + data("ode5.json") + " --order 9"), 1);
    EXPECT_EQ(status("average /nonexistent.json"), 1);
    EXPECT_EQ(status("validate " + data("ode5.json") + " --order 1 --omegas 50,100 --tolerance 0.000001"), 3);
    EXPECT_EQ(status("average " + data("constant.json") + " --output json"), 0);
}

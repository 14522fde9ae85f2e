#include "doctest.h"

#include "common.hpp"
#include "tworay/commands.hpp"
#include "tworay/error.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace tworay;
using namespace tworay::cli;
using testing_util::paper_x;
using testing_util::paper_xprime;

namespace {

int parse_error_line(std::string_view text) {
    try {
        parse_scenario(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(TWORAY_CLI) + " " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

const char* kMinimal = R"([variety]
vars = a b c
row1 = 1 1 0
row2 = 0 0 1
chamber = (1,0) (0,1)
)";

} // namespace

TEST_CASE("bundled scenarios parse and round-trip") {
    for (const auto& name : builtin_names()) {
        const auto s = builtin(name);
        CHECK(parse_scenario(serialize(s)) == s);
        CHECK(serialize(parse_scenario(serialize(s))) == serialize(s));
    }
    CHECK(paper_x().variety.claims.size() == 1);
    CHECK_THROWS_AS(builtin("nope"), PreconditionError);
    const auto m = parse_scenario(kMinimal);
    CHECK(parse_scenario(serialize(m)) == m);
    CHECK_FALSE(m.hypersurface.has_value());
}

TEST_CASE("parse errors carry line numbers") {
    CHECK(parse_error_line("[variety]\nvars = a b c\nrow1 = 1 1\nrow2 = 0 0 1\nchamber = (1,0) (0,1)\n") == 3);
    CHECK(parse_error_line("[variety]\nvars = a b c\nrow1 = 1 1 0\nrow2 = 0 0 1\nchamber = (1,0) (1,1)\n") == 5);
    CHECK(parse_error_line("[variety]\nbogus = 1\n") == 2);
    CHECK(parse_error_line("vars = a\n") == 1);
    CHECK(parse_error_line("[nope]\n") == 1);
    CHECK(parse_error_line(std::string(kMinimal) + "\n[hypersurface]\ndegree = (0,2)\nmonomial = c*w u_min=1\n") == 9);
    CHECK(parse_error_line(std::string(kMinimal) + "\n[hypersurface]\ndegree = (0,2)\nmonomial = c^2 sometimes\n") == 9);
    CHECK(parse_error_line(std::string(kMinimal) + "\n[hypersurface]\ndegree = 0,2\n") == 8);
    CHECK(parse_error_line("[variety]\nvars = a b c\nrow1 = 1 1 x\nrow2 = 0 0 1\n") == 3);
    CHECK(parse_error_line("[variety]\nvars = a b c\n") == 1);
}

TEST_CASE("transform reproduces X' and its inverse restores X") {
    int cancelled = 0;
    const auto t = transform_scenario(paper_x(), &cancelled);
    CHECK(cancelled == 12);
    CHECK(t == paper_xprime());
    const auto back = transform_scenario(t, &cancelled);
    CHECK(cancelled == -12);
    CHECK(back.equivalent(paper_x()));
    CHECK(back.system() == paper_x().system());
}

TEST_CASE("command results") {
    const auto d = cmd_describe(paper_x());
    CHECK(d.json["hypersurface"]["anticanonical"] == Json::array({-2, 1}));
    CHECK(d.json["hypersurface"]["k_condition"] == "holds_boundary");
    CHECK(cmd_describe(paper_xprime()).json["hypersurface"]["k_condition"] == "fails_interior");
    CHECK(cmd_describe(parse_scenario(kMinimal)).json["hypersurface"].is_null());

    CommandOptions o;
    o.degree = cones::Vec2{1, -1};
    CHECK(cmd_monomials(paper_x(), o).json["dimension"] == 0);
    CHECK_THROWS_AS(cmd_game(parse_scenario(kMinimal)), PreconditionError);

    const auto g = cmd_game(paper_x());
    CHECK(g.json["verdict"] == "fails_mori_category");
    CHECK(g.exit_code == 0);
    CHECK(cmd_game(paper_xprime()).json["verdict"] == "sarkisov_link");

    const auto sec = cmd_sections(paper_x());
    bool noted = false;
    for (const auto& r : sec.json["rays"])
        if (r["ray"] == Json::array({-2, 1})) {
            CHECK(r["ambient"] == "P(1,1,1,1,2,3)");
            CHECK(r["claim"]["stated"] == "P(1,1,2,4,6)");
            CHECK(r["claim"]["agrees"] == false);
            noted = true;
        }
    CHECK(noted);

    const auto lc = cmd_localchart(paper_x());
    CHECK(lc.json["chart"] == Json::array({"v", "z"}));
}

TEST_CASE("strict mode flags inconclusive restrictions") {
    // Without x^3*z nothing eliminates a variable at the first wall.
    auto s = paper_x();
    s.hypersurface->absent.push_back(monomials::parse_monomial(s.grading(), "x^3*z"));
    CommandOptions o;
    CHECK(cmd_game(s, o).exit_code == 0);
    CHECK(cmd_game(s, o).json["inconclusive"] == true);
    o.strict = true;
    CHECK(cmd_game(s, o).exit_code == 4);
}

TEST_CASE("golden reports") {
    const std::filesystem::path dir = TWORAY_GOLDEN_DIR;
    const bool update = std::getenv("TWORAY_UPDATE_GOLDEN") != nullptr;
    struct Case {
        std::string scenario, command, tag;
        CommandOptions opts;
    };
    std::vector<Case> cases;
    for (const auto& name : builtin_names())
        for (const auto& cmd : {"describe", "monomials", "baselocus", "game", "sections", "transform"})
            cases.push_back({name, cmd, cmd, {}});
    CommandOptions full;
    full.full_trace = true;
    cases.push_back({"paper-X", "game", "game-full", full});
    cases.push_back({"paper-X", "localchart", "localchart", {}});

    for (const auto& c : cases) {
        const auto r = run_command(c.command, builtin(c.scenario), c.opts);
        const auto stem = dir / (c.scenario + "." + c.tag);
        const std::string json = r.json.dump(2) + "\n";
        if (update) {
            std::ofstream(stem.string() + ".txt") << r.text;
            std::ofstream(stem.string() + ".json") << json;
            continue;
        }
        CHECK_MESSAGE(r.text == read_file(stem.string() + ".txt"), stem.string() << ".txt");
        CHECK_MESSAGE(json == read_file(stem.string() + ".json"), stem.string() << ".json");
    }
}

TEST_CASE("CLI exit codes") {
    CHECK(run_cli("describe --builtin paper-X") == 0);
    CHECK(run_cli("game --builtin paper-X --json --full-trace") == 0);
    CHECK(run_cli("game --builtin nope") == 3);
    CHECK(run_cli("describe /nonexistent/file") == 3);
    CHECK(run_cli("describe") == 3);
    CHECK(run_cli("frobnicate") == 2);

    const auto tmp = std::filesystem::temp_directory_path() / "tworay_cli_test";
    std::filesystem::create_directories(tmp);
    std::ofstream(tmp / "bad.scn") << "[variety]\nvars = a b\n";
    CHECK(run_cli("describe " + (tmp / "bad.scn").string()) == 2);
    std::ofstream(tmp / "min.scn") << kMinimal;
    CHECK(run_cli("game " + (tmp / "min.scn").string()) == 3);

    CHECK(run_cli("transform --builtin paper-X --out " + (tmp / "xp.scn").string()) == 0);
    CHECK(parse_scenario(read_file(tmp / "xp.scn")) == paper_xprime());
}

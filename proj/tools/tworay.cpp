#include "tworay/commands.hpp"
#include "tworay/error.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace tworay;

namespace {

cones::Vec2 parse_pair(const std::string& s) {
    std::string t;
    for (char c : s)
        if (c != '(' && c != ')' && c != ' ') t += c;
    const auto comma = t.find(',');
    if (comma == std::string::npos) throw PreconditionError("expected (a,b), got '" + s + "'");
    try {
        return {std::stoll(t.substr(0, comma)), std::stoll(t.substr(comma + 1))};
    } catch (const std::exception&) {
        throw PreconditionError("expected (a,b), got '" + s + "'");
    }
}

std::pair<std::string, std::string> parse_chart(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw PreconditionError("--chart expects two variables, e.g. v,z");
    return {s.substr(0, comma), s.substr(comma + 1)};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rank-two toric hypersurfaces: chambers, linear systems, base loci and the 2-ray game"};
    app.require_subcommand(1, 1);

    std::string file, builtin_name, degree, ray, chart, out;
    bool json = false;
    cli::CommandOptions opts;
    int bound = 0;

    for (const auto& name : cli::command_names()) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("file", file, "scenario file");
        sub->add_option("--builtin", builtin_name, "bundled scenario (paper-X, paper-Xprime)");
        sub->add_flag("--json", json, "emit one JSON document");
        sub->add_flag("--full-trace", opts.full_trace, "keep walking after the first failure");
        sub->add_flag("--strict", opts.strict, "exit 4 when a restriction is inconclusive");
        sub->add_option("--bound", bound, "section ring / local support degree bound");
        sub->add_option("--seed", opts.seed, "seed for coefficient instantiation");
        sub->add_option("--degree", degree, "bidegree, e.g. (-4,4)");
        sub->add_option("--ray", ray, "ray, e.g. (0,1)");
        sub->add_option("--chart", chart, "chart variables, e.g. v,z");
        sub->add_option("--out", out, "write the transformed scenario here");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (file.empty() == builtin_name.empty()) throw PreconditionError("give exactly one of a scenario file or --builtin");
        cli::ScenarioFile scenario;
        if (!builtin_name.empty()) {
            scenario = cli::builtin(builtin_name);
        } else {
            std::ifstream in(file);
            if (!in) throw PreconditionError("cannot open " + file);
            std::stringstream buf;
            buf << in.rdbuf();
            scenario = cli::parse_scenario(buf.str());
        }
        if (bound > 0) opts.bound = bound;
        if (!degree.empty()) opts.degree = parse_pair(degree);
        if (!ray.empty()) opts.ray = parse_pair(ray);
        if (!chart.empty()) opts.chart = parse_chart(chart);

        const std::string command = app.get_subcommands().front()->get_name();
        const auto result = cli::run_command(command, scenario, opts);
        if (!out.empty()) {
            if (command != "transform") throw PreconditionError("--out only applies to transform");
            std::ofstream f(out);
            f << result.json["scenario_text"].get<std::string>();
            if (!f) throw PreconditionError("cannot write " + out);
        }
        if (json) std::cout << result.json.dump(2) << '\n';
        else std::cout << result.text;
        return result.exit_code;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}

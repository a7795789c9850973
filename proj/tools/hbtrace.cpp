#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hbtrace/cli.hpp"
#include "hbtrace/version.hpp"

int main(int argc, char** argv) {
    hbtrace::RunConfig config;
    std::string format = "text";
    std::string input;

    CLI::App app{"Canonical traces of height-two Cohen-Macaulay monomial quotients"};
    app.set_version_flag("--version", std::string(hbtrace::kVersion));
    app.add_option("command", config.command, "Command to run")
        ->required()
        ->check(CLI::IsMember(hbtrace::command_names()));
    app.add_option("input", input, "Ideal such as \"x^3, x^2*y, y^2\", or graph data for `graph`; stdin when omitted");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--bound", config.bound, "Degree bound for kernel enumeration, E1,...,En");
    app.add_option("--seed", config.seed, "Seed for randomized sweeps");
    app.add_option("--max-exp", config.max_exp, "Largest exponent or parameter in sweeps");
    app.add_option("--vars", config.vars, "Declared variables, e.g. x,y,z; unknown names become errors");
    app.add_option("--cap", config.cap, "Maximum lattice points scanned by kernel enumeration");
    app.add_option("--family", config.family, "Sweep family")
        ->check(CLI::IsMember({"xy", "patterns", "generic", "frontier"}));
    app.add_option("--at", config.at, "Variables kept by `localize`");
    app.add_option("--count", config.count, "Number of random instances in sweeps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : hbtrace::kExitParse;
    }
    if (app.count("input")) config.input = input;
    config.format = format == "json" ? hbtrace::OutputFormat::Json : hbtrace::OutputFormat::Text;
    return hbtrace::dispatch(config, std::cin, std::cout, std::cerr);
}

#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace hhbv::cli;

namespace {

void add_common(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--max-degree", cfg.max_degree, "bar degree for the exhaustive sweeps")->check(CLI::Range(0, 19));
    sub->add_option("--d", cfg.d, "value of d: symbolic or a GF(2) bit string, little-endian");
    sub->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "markdown"}));
    sub->add_option("--out", cfg.out, "write the report here instead of stdout");
    sub->add_option("--samples", cfg.samples, "random triples for the Poisson check")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", cfg.seed);
    sub->add_flag("--force", cfg.force, "skip the prerequisite suites");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hochschild cohomology and BV structure of R(2,0,d)"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string op;
    std::vector<std::string> args;

    auto* verify = app.add_subcommand("verify", "run every invariant suite");
    auto* table = app.add_subcommand("delta-table", "compute the delta table and diff it against the embedded one");
    auto* fixtures = app.add_subcommand("fixtures", "recompute the transcribed fixtures");
    auto* eval = app.add_subcommand("eval", "evaluate cup, bracket or delta on generator expressions");
    for (auto* s : {verify, table, fixtures, eval}) add_common(s, cfg);
    fixtures->add_option("--select", cfg.select, "fixture id or group prefixes");
    eval->add_option("op", op)->required()->check(CLI::IsMember({"cup", "bracket", "delta"}));
    eval->add_option("args", args)->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Report r;
    try {
        if (verify->parsed()) r = cmd_verify(cfg);
        else if (table->parsed()) r = cmd_delta_table(cfg);
        else if (fixtures->parsed()) r = cmd_fixtures(cfg);
        else r = cmd_eval(cfg, op, args);
    }
    catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    if (cfg.out.empty()) {
        std::cout << r.text;
    }
    else {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write " << cfg.out << "\n";
            return 2;
        }
        f << r.text;
    }
    return r.status;
}

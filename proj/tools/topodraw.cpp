// topodraw: isometric cycles, MacLane-functional bases, plane configurations,
// rotation systems and Hamiltonian extraction from the command line.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "topodraw/pipeline.hpp"

namespace {

topo::Graph load(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return topo::parse_graph(ss.str());
    }
    return topo::read_graph_file(path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"topological drawings from isometric cycle bases"};
    app.require_subcommand(1);

    topo::PipelineOptions opt;
    std::string input, dot_path;
    bool json = false;

    app.add_flag("--json", json, "emit the JSON report");
    app.add_option("--seed", opt.seed, "Monte Carlo seed")->capture_default_str();
    app.add_option("--threads", opt.threads, "worker threads (0 = hardware)")->check(CLI::Range(0, 1024));
    app.add_flag("--timings", opt.timings, "include wall-clock timings in JSON");

    auto add_input = [&](CLI::App* sub) { sub->add_option("file", input, "edge list ('-' for stdin)")->required(); };
    auto add_basis_flags = [&](CLI::App* sub) {
        sub->add_option("--method", opt.method, "basis method")->check(CLI::IsMember({"sd", "mc"}))->capture_default_str();
        sub->add_option("--trials", opt.trials, "Monte Carlo trials")->check(CLI::Range(int64_t{1}, int64_t{100000000}));
        sub->add_option("--pre-exclude-longest", opt.pre_exclude_longest, "drop the k longest cycles before descent")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--seed", opt.seed, "Monte Carlo seed");
    };
    auto add_plane_flags = [&](CLI::App* sub) {
        sub->add_flag("--stage3", opt.stage3, "re-insert rim chords");
        sub->add_flag("--exact-chords", opt.exact_chords, "maximum non-crossing chord set instead of greedy");
        sub->add_flag("--count-rim-as-cycle", opt.count_rim_as_cycle, "allow removals that delete a rim path");
    };

    auto* cycles = app.add_subcommand("cycles", "list isometric cycles");
    add_input(cycles);
    auto* basis = app.add_subcommand("basis", "select an isometric-cycle basis");
    add_input(basis);
    add_basis_flags(basis);
    auto* planarize = app.add_subcommand("planarize", "reduce a basis to a plane configuration");
    add_input(planarize);
    add_basis_flags(planarize);
    add_plane_flags(planarize);
    auto* embed = app.add_subcommand("embed", "rotation system of the plane configuration");
    add_input(embed);
    add_basis_flags(embed);
    add_plane_flags(embed);
    embed->add_option("--dot", dot_path, "write DOT to this file");
    auto* hamilton = app.add_subcommand("hamilton", "extract a Hamiltonian cycle");
    add_input(hamilton);
    add_basis_flags(hamilton);
    add_plane_flags(hamilton);
    hamilton->add_option("--budget", opt.budget, "alternative branches before giving up")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : topo::kExitUsage;
    }

    if (*cycles) opt.command = topo::Command::cycles;
    else if (*basis) opt.command = topo::Command::basis;
    else if (*planarize) opt.command = topo::Command::planarize;
    else if (*embed) opt.command = topo::Command::embed;
    else opt.command = topo::Command::hamilton;

    topo::Graph g;
    try {
        g = load(input);
    } catch (const std::ios_base::failure& e) {
        std::cerr << "topodraw: " << e.what() << "\n";
        return topo::kExitIo;
    } catch (const topo::Error& e) {
        std::cerr << "topodraw: " << input << ": " << e.what() << "\n";
        return topo::kExitData;
    }

    topo::PipelineReport rep;
    try {
        rep = topo::run_pipeline(g, opt);
    } catch (const topo::Error& e) {
        std::cerr << "topodraw: " << e.what() << "\n";
        return topo::kExitData;
    }

    if (json)
        std::cout << rep.json.dump(2) << "\n";
    else
        std::cout << rep.text;

    if (!dot_path.empty()) {
        std::ofstream out(dot_path, std::ios::binary);
        if (!out || !(out << rep.dot)) {
            std::cerr << "topodraw: cannot write " << dot_path << "\n";
            return topo::kExitIo;
        }
    }
    return rep.exit_code;
}

#pragma once
// End-to-end orchestration behind the command-line tool.

#include <cstdint>
#include <string>

#include <json.hpp>

#include "topodraw/basis.hpp"
#include "topodraw/embed.hpp"
#include "topodraw/graph.hpp"
#include "topodraw/hamilton.hpp"
#include "topodraw/isometric.hpp"
#include "topodraw/planarize.hpp"

namespace topo {

enum class Command { cycles, basis, planarize, embed, hamilton };

struct PipelineOptions {
    Command command = Command::cycles;
    std::string method = "sd";  // "sd" | "mc"
    int64_t trials = 1000;
    uint64_t seed = 1;
    int threads = 1;
    int pre_exclude_longest = 0;
    bool stage3 = false;
    bool exact_chords = false;
    bool count_rim_as_cycle = false;
    int budget = 32;
    bool timings = false;
};

struct PipelineReport {
    nlohmann::ordered_json json;
    std::string text;
    std::string dot;  // filled by embed
    int exit_code = 0;
};

PipelineReport run_pipeline(const Graph& g, const PipelineOptions& opt);

// exit codes
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotFound = 2;
inline constexpr int kExitEvidence = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitData = 65;
inline constexpr int kExitIo = 66;

}  // namespace topo

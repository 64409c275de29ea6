#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "kostka/verify.hpp"

namespace kostka::cli {

enum class Command { Compute, Matrix, Covers, Chain, Classes, Verify, Bench };
enum class Format { Text, Csv, Json };

/// Raw command-line state; every text field is parsed into domain objects
/// before any work starts.
struct CliConfig {
    Command command = Command::Compute;
    std::string shape;
    std::string skew_inner;
    std::string content;
    std::string mu;
    std::string nu;
    int index = 1;
    int n = 0;
    Format format = Format::Text;
    int max_n = 6;
    unsigned parallelism = 1;
    std::uint64_t seed = 1;
    int samples = 200;
    int max_cells = 8;
    bool show_tableaux = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitBadInput = 2;

/// kExitOk when every report is clean, kExitViolation otherwise.
int exit_code_for(const std::vector<Report>& reports);

/// Parses `args` (without the program name) and runs the command.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs an already parsed configuration.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

} // namespace kostka::cli

#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace spinlab::cli {

enum ExitCode : int {
    ok = 0,
    usage = 2,
    validation = 3,
    non_orientable = 4,
    infeasible = 5,
    internal = 6,
};

struct CommandResult {
    int status = ok;
    /// Machine-readable output; empty for --help and usage errors.
    nlohmann::json payload;
    /// Written to stdout instead of the payload when set (--export, --help).
    std::string text;
    /// One line for stderr.
    std::string summary;
};

/// Runs one command line; args excludes the program name.
CommandResult run(const std::vector<std::string>& args);

/// Prints the payload (or text) to stdout and the summary to stderr.
int main(int argc, char** argv);

} // namespace spinlab::cli

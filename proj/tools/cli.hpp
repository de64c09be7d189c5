// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace sus::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kIo = 2,
    kOutOfRange = 3,
};

enum class Command { build, query, every, bench };

struct RunConfig {
    Command command = Command::every;
    std::string input = "-";
    std::optional<long long> position;
    bool all = false;
    bool show_text = false;
    bool header = false;
    bool oracle = false;
    bool strip_trailing_newline = false;
    std::optional<std::string> index_out;
    std::optional<std::string> index_in;
};

/// Parses `argv` and runs the selected command. `in` backs the `-` input
/// path. Returns one of ExitCode.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

/// Runs an already parsed configuration.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace sus::cli

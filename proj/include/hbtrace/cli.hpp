#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hbtrace {

enum class OutputFormat { Text, Json };

enum ExitCode : int {
    kExitOk = 0,
    kExitDomain = 1,
    kExitParse = 2,
    kExitResource = 3,
    kExitRefuted = 4,
    kExitInternal = 5,
};

struct RunConfig {
    std::string command;
    std::optional<std::string> input;  ///< read from the input stream when absent
    OutputFormat format = OutputFormat::Text;
    std::optional<std::string> bound;  ///< "E1,...,En"
    std::uint64_t seed = 1;
    std::optional<std::uint32_t> max_exp;
    std::optional<std::string> vars;
    std::optional<std::size_t> cap;  ///< lattice-point cap for kernel enumeration
    std::string family = "xy";
    std::optional<std::string> at;
    std::size_t count = 50;
};

const std::vector<std::string>& command_names();

/// Runs one command and writes the report to `out`, diagnostics to `err`.
int dispatch(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hbtrace

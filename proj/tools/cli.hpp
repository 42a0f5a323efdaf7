#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "binom/errors.hpp"

namespace binom::cli {

/// Malformed problem file; line and column are 1-based.
class InputError : public Error {
public:
    InputError(const std::string& what, std::size_t line, std::size_t column);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_, column_;
};

struct GeneratorText {
    std::string text;
    std::size_t line, column;
};

/// Line-oriented problem description:
///   ring: x, y, z
///   ideal: (x-z)^2, 3*x - y - 2*z
///   option seed = 7
/// `#` starts a comment. Several ideal lines accumulate.
struct ProblemFile {
    std::vector<std::string> ring;
    std::vector<GeneratorText> generators;
    std::map<std::string, std::string> options;
};

ProblemFile parse_problem(std::string_view text);

struct Flags {
    std::optional<std::uint64_t> seed;
    std::optional<int> degree;
    std::optional<int> fallback_bound;
    std::optional<long> precision_bits;
    bool json = false;
    bool no_timing = false;
};

enum ExitCode { kOk = 0, kInputError = 1, kIncomplete = 2 };

/// Runs one command on a parsed problem, writing the report to `out`.
int run_command(const std::string& command, const ProblemFile& problem, const Flags& flags,
                std::ostream& out, std::ostream& err);

/// Entry point: `binom <command> <file> [flags]`, arguments without the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace binom::cli

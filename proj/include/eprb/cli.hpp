#pragma once

// Command-line front end.  `run_cli` is the whole program minus process
// setup so it can be driven in-process by tests.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eprb/bell.hpp"
#include "eprb/estimators.hpp"
#include "eprb/models.hpp"

namespace eprb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { Csv, Json };

struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    std::size_t count = 0;

    std::vector<double> points() const;
};

/// Every parameter that influences a command's output.  Echoed into each
/// JSON report.  Thread count is an execution detail and is not part of it.
struct RunConfig {
    std::string command;
    models::SourceModel model;
    std::string estimator = "closed-form";
    models::ContractionMode contraction = models::ContractionMode::Eq6Literal;
    estimators::CoincidenceForm form = estimators::CoincidenceForm::Auto;
    std::size_t nodes = 64;
    std::size_t samples = 100000;
    std::uint64_t seed = 0;
    std::size_t seeds = 20;
    GridSpec grid;
    bell::ChshSettings settings;
    double a = 0.0;
    double b = 0.0;
    double phi = 0.0;
    double tolerance = 1e-9;
    bool degrees = false;
    OutputFormat format = OutputFormat::Csv;
    std::string output = "-";
};

/// Parses an angle such as "0.3", "pi", "-pi/2", "3pi/4" or "2*pi".  The
/// result is in the same unit as the literal; `--degrees` scaling is applied
/// by the caller.  Throws UsageError on malformed input.
double parse_angle(std::string_view text);

/// "start:stop:count", endpoints inclusive.
GridSpec parse_grid(std::string_view text, double unit_scale = 1.0);

/// Four comma-separated angles a, a', b, b'.
bell::ChshSettings parse_settings(std::string_view text, double unit_scale = 1.0);

/// Shortest round-trip decimal representation, independent of locale.
std::string format_number(double value);

/// Runs one invocation.  `args` excludes the program name.  Reports go to
/// `out` unless --output names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eprb::cli

#pragma once

// Command-line front end. Every command emits one JSON report; errors emit a
// JSON error object instead. Exit status: 0 success, 1 a verified statement
// failed, 2 usage or input error.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hermicurv/analysis.hpp"

namespace hermicurv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

inline const std::vector<std::string> kCommands = {"classify", "curvature",  "sectional",      "identities",
                                                   "extremal", "lu",         "probe-corollary"};

struct RunRequest {
    std::string command;
    std::string metric;  // catalog name or path to a DSL file
    std::vector<ChartPoint> points;
    std::optional<Plane> plane;
    std::uint64_t seed = kDefaultSeed;
    std::size_t restarts = 64;
    std::size_t samples = 0;  // 0 means the per-command default
    std::optional<double> tol;
    std::string mode = "max";        // extremal: max | min
    std::string kind = "sectional";  // extremal: sectional | bisectional
    std::string sign = "auto";       // lu: nonneg | nonpos | auto
};

struct RunResult {
    int exit_code = kExitOk;
    nlohmann::json report;
};

// Parses "[[re, im], ...]".
ChartPoint parse_point(const std::string& text);
// Parses {"u": [2n reals], "v": [2n reals]}.
Plane parse_plane(const std::string& text, std::size_t n);

// Loads a catalog metric of dimension n, or parses a DSL file and checks its
// dimension against n.
MetricDefinition load_metric(const std::string& source, std::size_t n);

// Dispatches the request; errors are turned into an error report with exit 2.
RunResult run(const RunRequest& request);

// Full command line (without the program name), as the executable sees it.
// The report is written to out (and to the --json file when given);
// diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// The report with its timing field removed, for byte-level comparisons.
nlohmann::json without_timing(nlohmann::json report);

}  // namespace hermicurv::cli

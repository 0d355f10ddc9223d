#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "reeb/analysis.hpp"

namespace reeb::cli {

enum class Format { Text, Json, Csv };

struct RunConfig {
    std::string command;  // analyze | scan | extremal | sample | verify-paper
    JoinParams params{2, Rational(1), 1, 29, 3, 2};
    std::vector<RayId> rays;
    Rational tolerance = Rational(1, BigInt("1000000000000"));
    long l2_from = 29;
    long l2_to = 199;
    Format format = Format::Text;
    std::string output;  // empty: standard output
    Rational b_min = Rational(1, 10);
    Rational b_max = Rational(10);
    int count = 100;
    bool extremal = false;  // analyze: include the admissibility window
    Rational b_lo = Rational(1, 20);
    Rational b_hi = Rational(5);
    int probes = 64;
};

/// Thrown for unusable command lines and configs (exit code 2).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses `args` (without the program name). Flags override values from a
/// `--config` file, a flat JSON object using the same key names.
RunConfig parse_config(const std::vector<std::string>& args);

/// Runs the configured subcommand, writing the artifact to `out` (or the
/// configured output file). Returns the process exit code: 0 success,
/// 2 input error, 3 internal identity failure.
int run_subcommand(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_config + run_subcommand with exit-code mapping.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Emission, exposed for tests.
nlohmann::json report_to_json(const AnalysisReport& rep);
std::string report_to_text(const AnalysisReport& rep);
std::string report_to_csv(const AnalysisReport& rep);
nlohmann::json scan_to_json(const JoinParams& base, const std::vector<ScanRow>& rows);
std::string scan_to_csv(const std::vector<ScanRow>& rows);
std::string sample_csv(const FunctionalBundle& fb, const Rational& b_min, const Rational& b_max, int count);
nlohmann::json extremal_to_json(const ExtremalSolution& sol);
nlohmann::json extremal_report_json(const ExtremalReport& ex);
std::string csv_field(const std::string& s);

/// One line of the golden reference suite.
struct GoldenItem {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct GoldenResult {
    std::vector<GoldenItem> items;
    std::vector<std::string> notes;
    bool all_passed() const;
};

GoldenResult run_golden_suite();

}  // namespace reeb::cli

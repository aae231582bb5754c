#ifndef SFCPLAN_CSV_HPP
#define SFCPLAN_CSV_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sfcplan {

/// One output record. Analytic columns are always populated; the simulated
/// columns stay empty when no simulation ran for the row. Column order is a
/// stable interface.
struct CsvRow {
    std::string scenario;
    std::string config_label;
    int l_or_b = 1; // the config's own parameter: l, b, or the sweep position for flat series
    double reliability_analytic = 0.0;
    std::optional<double> reliability_simulated;
    std::optional<double> ci_rel;
    double response_analytic = 0.0;
    std::optional<double> response_simulated;
    std::optional<double> ci_resp;
    double resources = 0.0;
    std::optional<std::uint64_t> seed;
};

inline constexpr std::array<const char*, 11> kCsvColumns = {
    "scenario",       "config_label",         "l_or_b",
    "reliability_analytic", "reliability_simulated", "ci_rel",
    "response_analytic",    "response_simulated",    "ci_resp",
    "resources",      "seed",
};

/// RFC-4180-style serialization: header row, quoted fields where needed,
/// LF line endings, UTF-8 passthrough.
void write_csv(std::ostream& out, const std::vector<CsvRow>& rows);
void write_csv_file(const std::string& path, const std::vector<CsvRow>& rows);

std::string format_double(double value);

/// Minimal reader for the files this tool writes (used by the test suites):
/// returns all records including the header row.
std::vector<std::vector<std::string>> read_csv(std::istream& in);
std::vector<std::vector<std::string>> read_csv_file(const std::string& path);

} // namespace sfcplan

#endif

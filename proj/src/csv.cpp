#include "sfcplan/csv.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "sfcplan/errors.hpp"

namespace sfcplan {

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

namespace {

bool needs_quoting(const std::string& field) {
    return field.find_first_of(",\"\n\r") != std::string::npos;
}

std::string quote(const std::string& field) {
    if (!needs_quoting(field)) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_record(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out << ',';
        out << quote(fields[i]);
    }
    out << '\n';
}

std::vector<std::string> row_fields(const CsvRow& row) {
    auto opt = [](const std::optional<double>& value) {
        return value ? format_double(*value) : std::string{};
    };
    std::vector<std::string> fields;
    fields.reserve(kCsvColumns.size());
    fields.push_back(row.scenario);
    fields.push_back(row.config_label);
    fields.push_back(std::to_string(row.l_or_b));
    fields.push_back(format_double(row.reliability_analytic));
    fields.push_back(opt(row.reliability_simulated));
    fields.push_back(opt(row.ci_rel));
    fields.push_back(format_double(row.response_analytic));
    fields.push_back(opt(row.response_simulated));
    fields.push_back(opt(row.ci_resp));
    fields.push_back(format_double(row.resources));
    fields.push_back(row.seed ? std::to_string(*row.seed) : std::string{});
    return fields;
}

} // namespace

void write_csv(std::ostream& out, const std::vector<CsvRow>& rows) {
    std::vector<std::string> header(kCsvColumns.begin(), kCsvColumns.end());
    write_record(out, header);
    for (const auto& row : rows) write_record(out, row_fields(row));
}

void write_csv_file(const std::string& path, const std::vector<CsvRow>& rows) {
    std::ofstream out(path, std::ios::binary); // keeps LF endings everywhere
    if (!out) throw ValidationError(path + ": cannot open for writing");
    write_csv(out, rows);
}

std::vector<std::vector<std::string>> read_csv(std::istream& in) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false;
    bool any = false;
    char c;
    while (in.get(c)) {
        any = true;
        if (quoted) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get(c);
                    field += '"';
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            record.push_back(std::move(field));
            field.clear();
        } else if (c == '\n') {
            record.push_back(std::move(field));
            field.clear();
            records.push_back(std::move(record));
            record.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    if (any && (!field.empty() || !record.empty())) {
        record.push_back(std::move(field));
        records.push_back(std::move(record));
    }
    return records;
}

std::vector<std::vector<std::string>> read_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError(path + ": cannot open CSV file");
    return read_csv(in);
}

} // namespace sfcplan

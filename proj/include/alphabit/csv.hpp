#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace alphabit::csv {

struct Row {
    std::size_t line = 0; // 1-based line number in the source file
    std::vector<std::string> fields;
};

// Reads the whole file; the first row is the header. Fields may be quoted
// with '"' (embedded quotes doubled). Throws ParseError on malformed input
// or when the header does not match `expected_header` (order-sensitive).
struct Table {
    std::vector<std::string> header;
    std::vector<Row> rows;
};

Table read_file(const std::filesystem::path& path,
                const std::vector<std::string>& expected_header);

std::vector<std::string> split_line(const std::string& line, std::size_t line_no);

// Field parsers that name the offending line in errors.
double parse_double(const std::string& field, std::size_t line_no, const std::string& what);
int parse_int(const std::string& field, std::size_t line_no, const std::string& what);
std::optional<double> parse_optional_double(const std::string& field, std::size_t line_no,
                                            const std::string& what);

std::string quote(const std::string& field);

// Shortest round-trip-safe formatting for data files.
std::string fmt_double(double v);

// Writes content to `<path>.tmp` then renames, so readers never observe a
// partial file.
void write_atomic(const std::filesystem::path& path, const std::string& content);

} // namespace alphabit::csv

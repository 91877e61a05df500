#include "alphabit/csv.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>

#include "alphabit/errors.hpp"

namespace alphabit::csv {

std::vector<std::string> split_line(const std::string& line, std::size_t line_no) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"' && cur.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted)
        throw ParseError("line " + std::to_string(line_no) + ": unterminated quote");
    fields.push_back(std::move(cur));
    return fields;
}

Table read_file(const std::filesystem::path& path,
                const std::vector<std::string>& expected_header) {
    std::ifstream in(path);
    if (!in)
        throw DataError("cannot open " + path.string());
    Table t;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        auto fields = split_line(line, line_no);
        if (line_no == 1) {
            if (fields != expected_header) {
                std::string want;
                for (const auto& h : expected_header)
                    want += (want.empty() ? "" : ",") + h;
                throw ParseError(path.string() + ": unexpected header, want '" + want + "'");
            }
            t.header = std::move(fields);
            continue;
        }
        if (fields.size() != expected_header.size())
            throw ParseError(path.string() + ": line " + std::to_string(line_no) + ": expected " +
                             std::to_string(expected_header.size()) + " fields, got " +
                             std::to_string(fields.size()));
        t.rows.push_back({line_no, std::move(fields)});
    }
    if (t.header.empty())
        throw ParseError(path.string() + ": missing header");
    return t;
}

double parse_double(const std::string& field, std::size_t line_no, const std::string& what) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (field.empty() || end != field.c_str() + field.size() || errno == ERANGE)
        throw ParseError("line " + std::to_string(line_no) + ": bad " + what + " '" + field + "'");
    return v;
}

int parse_int(const std::string& field, std::size_t line_no, const std::string& what) {
    errno = 0;
    char* end = nullptr;
    const long v = std::strtol(field.c_str(), &end, 10);
    if (field.empty() || end != field.c_str() + field.size() || errno == ERANGE)
        throw ParseError("line " + std::to_string(line_no) + ": bad " + what + " '" + field + "'");
    return static_cast<int>(v);
}

std::optional<double> parse_optional_double(const std::string& field, std::size_t line_no,
                                            const std::string& what) {
    if (field.empty())
        return std::nullopt;
    return parse_double(field, line_no, what);
}

std::string quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    // Trim to the shortest representation that round-trips.
    for (int prec = 1; prec < 17; ++prec) {
        char probe[32];
        std::snprintf(probe, sizeof(probe), "%.*g", prec, v);
        if (std::strtod(probe, nullptr) == v)
            return probe;
    }
    return buf;
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw DataError("cannot write " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out)
            throw DataError("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

} // namespace alphabit::csv

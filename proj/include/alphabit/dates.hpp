#pragma once

#include <compare>
#include <cstdio>
#include <string>

#include "alphabit/errors.hpp"

namespace alphabit {

// Calendar month, the resolution at which factors and returns live.
struct YearMonth {
    int year = 0;
    int month = 0; // 1..12

    auto operator<=>(const YearMonth&) const = default;

    // Months since year 0, for contiguity arithmetic.
    int index() const { return year * 12 + (month - 1); }

    static YearMonth from_index(int idx) {
        return {idx / 12, idx % 12 + 1};
    }

    YearMonth prev() const { return from_index(index() - 1); }

    std::string str() const {
        char buf[8];
        std::snprintf(buf, sizeof(buf), "%04d-%02d", year, month);
        return buf;
    }
};

struct Date {
    int year = 0;
    int month = 0;
    int day = 0;

    auto operator<=>(const Date&) const = default;

    YearMonth ym() const { return {year, month}; }

    std::string str() const {
        char buf[12];
        std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
        return buf;
    }
};

inline int days_in_month(int year, int month) {
    static const int d[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month == 2 && (year % 4 == 0 && (year % 100 != 0 || year % 400 == 0)))
        return 29;
    return d[month - 1];
}

// Strict ISO-8601 "YYYY-MM-DD".
inline Date parse_date(const std::string& s) {
    int y = 0, m = 0, d = 0;
    char tail = 0;
    if (std::sscanf(s.c_str(), "%4d-%2d-%2d%c", &y, &m, &d, &tail) != 3 ||
        s.size() != 10 || m < 1 || m > 12 || d < 1 || d > days_in_month(y, m))
        throw ParseError("invalid date '" + s + "'");
    return {y, m, d};
}

// "YYYY-MM".
inline YearMonth parse_year_month(const std::string& s) {
    int y = 0, m = 0;
    char tail = 0;
    if (std::sscanf(s.c_str(), "%4d-%2d%c", &y, &m, &tail) != 2 ||
        s.size() != 7 || m < 1 || m > 12)
        throw ParseError("invalid month '" + s + "'");
    return {y, m};
}

} // namespace alphabit

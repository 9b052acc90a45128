#include "fxnet/date.hpp"

#include <array>
#include <cstdio>
#include <ctime>
#include <iomanip>
#include <sstream>

#include "fxnet/error.hpp"

namespace fxnet {

namespace {

bool leap_year(int year) {
    return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int year, int month) {
    static constexpr std::array<int, 12> kDays = {31, 28, 31, 30, 31, 30,
                                                  31, 31, 30, 31, 30, 31};
    if (month == 2 && leap_year(year)) return 29;
    return kDays[month - 1];
}

} // namespace

bool is_valid_date(const Date& date) {
    if (date.year < 1 || date.month < 1 || date.month > 12) return false;
    return date.day >= 1 && date.day <= days_in_month(date.year, date.month);
}

Date parse_date(const std::string& text, const std::string& format) {
    std::tm tm = {};
    std::istringstream in(text);
    in >> std::get_time(&tm, format.c_str());
    if (in.fail()) {
        throw Error(ErrorCode::Parse,
                    "invalid date '" + text + "' for format '" + format + "'");
    }
    // get_time may stop early; trailing garbage is a malformed date too.
    in >> std::ws;
    if (in.peek() != std::char_traits<char>::eof()) {
        throw Error(ErrorCode::Parse,
                    "trailing characters in date '" + text + "'");
    }
    Date date{tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday};
    if (!is_valid_date(date)) {
        throw Error(ErrorCode::Parse, "impossible calendar date '" + text + "'");
    }
    return date;
}

std::string to_iso(const Date& date) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", date.year, date.month, date.day);
    return buf;
}

} // namespace fxnet

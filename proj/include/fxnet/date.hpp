#ifndef FXNET_DATE_HPP
#define FXNET_DATE_HPP

#include <compare>
#include <string>

namespace fxnet {

/// Calendar date. Intraday timestamps are deliberately not representable.
struct Date {
    int year = 0;
    int month = 0;
    int day = 0;

    auto operator<=>(const Date&) const = default;
};

/// Parse `text` against a strptime-style format (%Y, %m, %d and literal
/// separators). Rejects impossible dates such as month 13 or Feb 30.
/// Throws Error(Parse) on failure.
Date parse_date(const std::string& text, const std::string& format);

/// ISO-8601 rendering, zero padded: 1999-01-04.
std::string to_iso(const Date& date);

bool is_valid_date(const Date& date);

} // namespace fxnet

#endif

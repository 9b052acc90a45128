#include "fxnet/textfmt.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "fxnet/error.hpp"

namespace fxnet {

std::string format_shortest(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

std::string format_trimmed(double value, int max_decimals, int min_decimals) {
    char buf[512];
    auto res = std::to_chars(buf, buf + sizeof buf, value,
                             std::chars_format::fixed, max_decimals);
    std::string text(buf, res.ptr);
    auto dot = text.find('.');
    if (dot == std::string::npos) {
        if (min_decimals > 0) text += "." + std::string(min_decimals, '0');
        return text;
    }
    std::size_t keep = text.size();
    while (keep > dot + 1 + static_cast<std::size_t>(min_decimals) &&
           text[keep - 1] == '0') {
        --keep;
    }
    text.resize(keep);
    return text;
}

std::string format_rounded(double value, int decimals) {
    if (!std::isfinite(value)) {
        throw Error(ErrorCode::InvalidArgument, "cannot render non-finite value");
    }
    if (decimals < 0 || decimals > 30) {
        throw Error(ErrorCode::InvalidArgument, "unsupported precision");
    }
    // Ask to_chars for the full exact decimal expansion of the binary value
    // (a double below ~1e18 terminates well inside 800 fractional digits),
    // then round half-away-from-zero on the digit string.
    std::vector<char> buf(1200);
    double magnitude = std::abs(value);
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), magnitude,
                             std::chars_format::fixed, 800);
    std::string text(buf.data(), res.ptr);

    auto dot = text.find('.');
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t int_len = dot;

    std::size_t keep = int_len + static_cast<std::size_t>(decimals);
    bool round_up = keep < digits.size() && digits[keep] >= '5';
    digits.resize(keep, '0');
    if (round_up) {
        int i = static_cast<int>(digits.size()) - 1;
        for (; i >= 0; --i) {
            if (digits[i] != '9') {
                ++digits[i];
                break;
            }
            digits[i] = '0';
        }
        if (i < 0) {
            digits.insert(digits.begin(), '1');
            ++int_len;
        }
    }

    std::string out;
    if (std::signbit(value) && digits.find_first_not_of('0') != std::string::npos) {
        out += '-';
    }
    out += digits.substr(0, int_len);
    if (decimals > 0) {
        out += '.';
        out += digits.substr(int_len);
    }
    return out;
}

} // namespace fxnet

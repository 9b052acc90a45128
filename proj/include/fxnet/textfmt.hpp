#ifndef FXNET_TEXTFMT_HPP
#define FXNET_TEXTFMT_HPP

#include <string>

namespace fxnet {

/// Shortest decimal text that parses back to exactly the same double.
/// Locale independent.
std::string format_shortest(double value);

/// Fixed-point text with trailing zeros trimmed but at least `min_decimals`
/// kept: format_trimmed(4.0, 6, 1) == "4.0".
std::string format_trimmed(double value, int max_decimals, int min_decimals = 1);

/// Fixed-point rendering with round-half-away-from-zero applied to the
/// exact decimal expansion of the binary value (not to a rescaled double).
std::string format_rounded(double value, int decimals);

} // namespace fxnet

#endif

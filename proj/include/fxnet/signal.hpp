#ifndef FXNET_SIGNAL_HPP
#define FXNET_SIGNAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "fxnet/date.hpp"
#include "fxnet/matrix.hpp"
#include "fxnet/panel.hpp"

namespace fxnet {

enum class SignalKind { Return, Sign, Amplitude };

const char* kind_name(SignalKind kind);          // "return" / "sign" / "amplitude"
const char* kind_label(SignalKind kind);         // table row label: "return" / "sign" / "abs"
SignalKind parse_kind(const std::string& text);  // accepts names above, throws Usage

/// Daily log-returns of one base-currency representation,
/// g(i) = ln G(i+1) - ln G(i). Rows are stamped with the later date.
struct ReturnPanel {
    std::string base;
    std::vector<Date> dates; // T-1 entries
    std::vector<std::string> currencies;
    Matrix values; // dates x currencies
};

/// Returns split into direction and magnitude: g = s * a with
/// s in {-1, 0, +1} and a = |g|. Reconstruction is exact.
struct SignalBundle {
    std::string base;
    std::vector<Date> dates;
    std::vector<std::string> currencies;
    Matrix returns;
    Matrix signs;
    Matrix amplitudes;
};

struct ClipPolicy {
    double k = 10.0; // threshold multiple of the per-column sample sigma
};

struct ClipResult {
    ReturnPanel panel;
    std::vector<std::size_t> clipped_per_column;
    std::vector<double> sigmas; // the sigma actually used per column
};

/// One signal matrix in currencies x time orientation, ready for
/// correlation. Row order follows the bundle's currency order.
struct SignalMatrix {
    std::string base;
    SignalKind kind = SignalKind::Return;
    std::vector<std::string> labels;
    Matrix values; // labels x time
};

ReturnPanel log_returns(const CrossRatePanel& rates);

/// Winsorize each column at +-k*sigma, sigma estimated once on the input.
/// Zero-variance columns are left untouched.
ClipResult clip_outliers(const ReturnPanel& returns, const ClipPolicy& policy);

/// Same, but with sigmas frozen by the caller (makes clipping idempotent).
ClipResult clip_outliers(const ReturnPanel& returns, const ClipPolicy& policy,
                         const std::vector<double>& sigmas);

SignalBundle decompose(const ReturnPanel& returns);

SignalMatrix select_signal(const SignalBundle& bundle, SignalKind kind);

} // namespace fxnet

#endif

#ifndef FXNET_ROLLING_HPP
#define FXNET_ROLLING_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "fxnet/metrics.hpp"
#include "fxnet/signal.hpp"

namespace fxnet {

struct WindowSpec {
    std::size_t width = 120; // trading days
    std::size_t step = 1;

    void validate() const; // throws InvalidArgument
};

struct MetricPoint {
    Date date; // window-end date
    double value = 0.0;
};

/// One topology metric tracked through time by a sliding window.
struct MetricSeries {
    std::string base;
    SignalKind kind = SignalKind::Return;
    std::string metric; // "L" or "C"
    WindowSpec window;
    std::vector<MetricPoint> points;
};

struct MetricFlags {
    bool path_length = true; // L
    bool clustering = true;  // C
};

struct TrendFit {
    double slope = 0.0;     // metric units per trading day
    double intercept = 0.0; // value at the first point
    double residual_se = 0.0;
    std::size_t points = 0;
};

/// Recompute correlation -> distances/weights -> MST -> metrics on every
/// window position. Correlations are standardized with the window's own
/// mean and variance; sigma clipping is not redone per window.
std::vector<MetricSeries> rolling_metrics(const SignalBundle& bundle, SignalKind kind,
                                          const WindowSpec& spec, const MetricFlags& metrics,
                                          PathLengthMode mode);

/// Ordinary least squares of value on the trading-day offset of each
/// point (position * step).
TrendFit linear_trend(const MetricSeries& series);

} // namespace fxnet

#endif

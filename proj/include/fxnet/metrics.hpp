#ifndef FXNET_METRICS_HPP
#define FXNET_METRICS_HPP

#include <map>
#include <string>

#include "fxnet/network.hpp"

namespace fxnet {

/// Path length flavor: hop counts edges, weighted sums metric distances
/// along the unique tree path.
enum class PathLengthMode { Hop, Weighted };

PathLengthMode parse_path_mode(const std::string& text); // "hop" | "weighted"
const char* path_mode_name(PathLengthMode mode);

struct DegreeReport {
    std::map<std::string, int> degrees;
    std::string hub; // max-degree node; smallest code on ties
    int hub_degree = 0;
};

/// Static topology summary of one (base, kind) network.
struct TopologyReport {
    std::string base;
    SignalKind kind = SignalKind::Return;
    double path_length = 0.0;
    double clustering = 0.0;
    DegreeReport degrees;
    std::string sample = "full"; // row range the metrics were computed on
};

/// Mean tree path length over ordered node pairs,
/// L = (1/(n(n-1))) * sum_{X != Y} l(X, Y).
double characteristic_path_length(const SpanningTree& tree, PathLengthMode mode);

/// Weighted clustering coefficient of the complete network: weights are
/// normalized by the maximum off-diagonal entry and every node averages
/// the cube-rooted triangle intensities over ordered neighbor pairs.
double weighted_clustering(const WeightMatrix& weights);

DegreeReport node_degrees(const SpanningTree& tree);

TopologyReport analyze_topology(const SpanningTree& tree, const WeightMatrix& weights,
                                PathLengthMode mode);

} // namespace fxnet

#endif

#ifndef FXNET_NETWORK_HPP
#define FXNET_NETWORK_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fxnet/matrix.hpp"
#include "fxnet/signal.hpp"

namespace fxnet {

/// Pearson correlation matrix of one (base, kind) representation.
/// Symmetric, unit diagonal. Zero-variance rows correlate 0 with every
/// other node and are listed in `degenerate`.
struct CorrelationMatrix {
    std::string base;
    SignalKind kind = SignalKind::Return;
    std::vector<std::string> labels;
    Matrix values;
    std::vector<std::string> degenerate;
};

/// Metric distances d = sqrt(2(1 - R)), clamped to [0, 2], zero diagonal.
struct DistanceMatrix {
    std::vector<std::string> labels;
    Matrix values;
};

/// Connection weights |R|, zero diagonal.
struct WeightMatrix {
    std::vector<std::string> labels;
    Matrix values;
};

struct TreeEdge {
    std::string a;
    std::string b;
    double distance = 0.0;
    double weight = 0.0;
};

/// Minimal spanning tree over the representation's currencies.
/// Edges are stored in Kruskal insertion order; `adjacency` maps a node
/// index to (neighbor index, edge distance) pairs for traversal.
struct SpanningTree {
    std::string base;
    SignalKind kind = SignalKind::Return;
    std::vector<std::string> nodes;
    std::vector<TreeEdge> edges;
    std::vector<std::vector<std::pair<std::size_t, double>>> adjacency;

    std::size_t node_index(const std::string& code) const; // throws UnknownCurrency
};

CorrelationMatrix correlation_matrix(const SignalMatrix& data);

/// Correlation over the time slice [t_begin, t_end) of `data`.
CorrelationMatrix correlation_matrix(const SignalMatrix& data,
                                     std::size_t t_begin, std::size_t t_end);

DistanceMatrix distance_matrix(const CorrelationMatrix& corr);

WeightMatrix weight_matrix(const CorrelationMatrix& corr);

/// Kruskal with ascending-distance ordering; ties broken by the
/// lexicographic (min code, max code) pair so identical inputs always
/// produce an identical edge list.
SpanningTree build_mst(const DistanceMatrix& dist, const WeightMatrix& weights,
                       const std::string& base = {}, SignalKind kind = SignalKind::Return);

} // namespace fxnet

#endif

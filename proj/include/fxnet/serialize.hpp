#ifndef FXNET_SERIALIZE_HPP
#define FXNET_SERIALIZE_HPP

#include <string>
#include <vector>

#include "fxnet/metrics.hpp"
#include "fxnet/network.hpp"
#include "fxnet/rolling.hpp"

namespace fxnet {

enum class TreeFormat { Dot, GraphML };

TreeFormat parse_tree_format(const std::string& text); // "dot" | "graphml", throws Usage

/// Deterministic text form of a tree: nodes and edges in lexicographic
/// order, edges carry weight/distance attributes, DOT pen width = 1 + 6w.
std::string render_tree(const SpanningTree& tree, TreeFormat format);

/// Table-1 style summary: one column per base, row blocks L then C by
/// kind. L rendered with `l_decimals`, C with `c_decimals`
/// (round-half-away-from-zero).
std::string render_table(const std::vector<TopologyReport>& reports,
                         int l_decimals = 2, int c_decimals = 3);

std::string series_to_json(const MetricSeries& series);
std::string series_to_csv(const MetricSeries& series);

} // namespace fxnet

#endif

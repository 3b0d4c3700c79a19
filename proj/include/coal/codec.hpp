#pragma once

#include <string>
#include <string_view>

#include "coal/graph.hpp"

namespace coal {

enum class GraphFormat { EdgeList, Graph6 };

Graph parse_graph(std::string_view text, GraphFormat format,
                  int max_n = kDefaultMaxN);
std::string encode_graph(const Graph& g, GraphFormat format);

// Edge list text starts with '#', whitespace or a digit; graph6 bytes do not.
GraphFormat detect_format(std::string_view text);

}  // namespace coal

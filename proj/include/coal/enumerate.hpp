#pragma once

#include <functional>
#include <vector>

#include "coal/graph.hpp"

namespace coal {

enum class EnumMode { Labeled, UpToIsomorphism };

// Labeled mode streams all 2^(n(n-1)/2) edge masks in increasing mask order
// (bit k of the mask is the k-th triangle pair). Iso mode streams exactly one
// representative per isomorphism class, the canonical form, in certificate
// order. Streams are single-consumer; independent streams may run in parallel.
void enumerate_graphs(int n, EnumMode mode,
                      const std::function<void(const Graph&)>& yield,
                      int cap = kDefaultEnumCap);

std::vector<Graph> all_graphs(int n, EnumMode mode, int cap = kDefaultEnumCap);

}  // namespace coal

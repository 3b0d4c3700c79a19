#pragma once

#include <utility>

#include "coal/graph.hpp"
#include "coal/partition.hpp"

namespace coal {

// Union of closed neighborhoods of s covers V. The empty set dominates only
// the empty graph.
bool is_dominating(const Graph& g, const VertexSet& s);

// Repeatedly drops the highest-index vertex whose removal keeps the set
// dominating; the result is minimal (no proper dominating subset).
VertexSet shrink_to_minimal(const Graph& g, VertexSet d);

// Splits a minimal dominating set of size >= 2 into ({lowest vertex}, rest);
// minimality guarantees both halves are non-dominating.
std::pair<VertexSet, VertexSet> split_dominating(const Graph& g,
                                                 const VertexSet& d);

int independence_number(const Graph& g, int cap = kDefaultAlphaCap);

struct DomaticResult {
  int d = 0;
  Partition witness;  // d parts, all dominating
};

// Exact domatic number by backtracking vertex assignment into k classes,
// trying k = delta+1 downward; the first feasible k is the answer.
DomaticResult domatic_number(const Graph& g, int cap = kDefaultDomaticCap);

struct InvariantBundle {
  int n = 0;
  int m = 0;
  int f = 0;
  int delta = 0;
  int alpha = 0;
  int domatic_d = 0;
};
InvariantBundle invariant_bundle(const Graph& g,
                                 int alpha_cap = kDefaultAlphaCap,
                                 int domatic_cap = kDefaultDomaticCap);

}  // namespace coal

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coal/coalition.hpp"
#include "coal/graph.hpp"
#include "coal/partition.hpp"

namespace coal {

// Target split into its non-isolated part (relabeled 0..n-1, order preserved)
// and its isolates.
struct TargetDecomposition {
  Graph g_prime;
  int isolate_count = 0;
  std::vector<int> base_to_target;     // g_prime vertex -> target vertex
  std::vector<int> isolate_to_target;  // isolate index -> target vertex
  std::vector<std::pair<int, int>> complement_edges;  // of g_prime
};
TargetDecomposition decompose_target(const Graph& g);

enum class HStarCase { Case1Even, Case1Odd, Case2, AllIsolates };
const char* to_string(HStarCase c);

struct PredictedMetrics {
  int order = 0;
  // The size column as printed, and the figure it should be: the t(n(H*)-1)
  // term counts every edge between two universal vertices twice, so the
  // verbatim value exceeds the built host by C(t,2).
  int size_verbatim = 0;
  int size_corrected = 0;
};
PredictedMetrics predicted_metrics(const TargetDecomposition& d);

struct GadgetPlacement {
  int j = 0, k = 0;     // complement edge of g_prime blocked by this gadget
  int host_vertex = 0;  // the gadget vertex in the host
  int host_part = 0;    // part index it was placed into
};

struct HStarResult {
  Graph host;
  Partition pi_star;  // base parts 0..n-1, then one singleton per isolate
  HStarCase case_tag = HStarCase::AllIsolates;
  std::vector<std::pair<int, int>> matching;  // base pairs with deleted edge
  int u_vertex = -1;  // Case1Odd helper vertex, -1 otherwise
  int u_part = -1;    // part index holding it
  std::vector<GadgetPlacement> gadgets;  // Case2 only
  std::vector<int> w_vertices;           // host indices of the universal w's
  std::vector<int> part_to_target;       // part index -> target vertex
  PredictedMetrics predicted;
  int actual_order = 0;
  int actual_size = 0;
};

// Builds the host graph and partition whose coalition graph should equal the
// target, following the case split on the non-isolated part. Never repairs:
// Case1Odd is built exactly as specified even though its audit fails.
HStarResult build_hstar(const Graph& target, int max_host_n = kDefaultMaxN);

struct AuditReport {
  bool partition_valid = false;
  bool cg_matches = false;   // labeled equality under part <-> vertex map
  bool iso_matches = false;  // unlabeled isomorphism
  bool order_size_match_table = false;  // vs verbatim size
  bool corrected_size_match = false;    // vs corrected size
  std::vector<std::string> violations;
};
AuditReport validate_hstar(const Graph& target, const HStarResult& r);

}  // namespace coal

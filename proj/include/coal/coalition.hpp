#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coal/domination.hpp"
#include "coal/graph.hpp"
#include "coal/partition.hpp"

namespace coal {

enum class PartClass {
  SingletonDominating,
  CoalitionMember,
  OrphanNonDominating,
  InvalidDominatingNonSingleton,
};
const char* to_string(PartClass c);

struct PartitionAssessment {
  bool valid = false;
  std::vector<PartClass> part_class;
  std::vector<std::pair<int, int>> coalition_pairs;  // part indices, i < j
  int pair_count = 0;
};

// Neither side dominates but the union does; symmetric.
bool forms_coalition(const Graph& g, const VertexSet& a, const VertexSet& b);

PartitionAssessment assess_partition(const Graph& g, const Partition& p);

struct SearchOutcome {
  std::optional<int> value;       // empty: no valid c-partition exists
  std::optional<Partition> witness;
  long long partitions_examined = 0;
};

// Maximum part count over all valid c-partitions; witness is the
// lexicographically least restricted-growth string among maximizers.
SearchOutcome coalition_number(const Graph& g, int cap = kDefaultPartitionCap);
// Maximum number of distinct coalition pairs within one valid c-partition.
SearchOutcome coalition_count(const Graph& g, int cap = kDefaultPartitionCap);

void for_each_valid_partition(
    const Graph& g,
    const std::function<void(const Partition&, const PartitionAssessment&)>& fn,
    int cap = kDefaultPartitionCap);

struct CoalitionGraphResult {
  Graph cg;
  std::vector<std::string> part_labels;
};
// Vertex i of cg is part i of p; edges are exactly the coalition pairs.
CoalitionGraphResult coalition_graph(const Graph& g, const Partition& p);

// True iff the all-singletons partition is a valid c-partition.
bool is_sp_graph(const Graph& g);

struct DomaticDerivedPartition {
  Partition partition;
  int lower_bound = 0;  // d(G) - f, guaranteed <= coalition pair count
};
// Builds a c-partition from a maximum domatic partition: full vertices stay
// singleton, every other part is shrunk to a minimal dominating set and split
// into two non-dominating halves; leftover vertices ride along with the last
// part. Requires a graph without isolated vertices.
DomaticDerivedPartition cpartition_from_domatic(
    const Graph& g, int domatic_cap = kDefaultDomaticCap);

}  // namespace coal

#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "coal/error.hpp"

namespace coal {

using Mask = std::uint64_t;

// Hard limit of the bitmask representation (also the graph6 short-form limit).
inline constexpr int kHardVertexLimit = 62;
// Default construction cap; search operations enforce stricter caps below.
inline constexpr int kDefaultMaxN = 24;
inline constexpr int kDefaultIsoCap = 10;
inline constexpr int kDefaultEnumCap = 7;
inline constexpr int kDefaultAlphaCap = 20;
inline constexpr int kDefaultDomaticCap = 12;
inline constexpr int kDefaultPartitionCap = 12;

constexpr Mask all_vertices_mask(int n) { return n <= 0 ? 0 : (Mask{1} << n) - 1; }

// Upper-triangle pairs (u,v), u<v, in column order (0,1),(0,2),(1,2),(0,3),...
// This is the bit order shared by graph6, certificates and labeled enumeration.
std::vector<std::pair<int, int>> triangle_pairs(int n);

// Labeled simple undirected graph on vertices 0..n-1 with bitmask rows.
// Values are treated as immutable once shared; add_edge is for construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int n() const { return n_; }
  int m() const { return m_; }
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  Mask neighbors(int v) const;
  Mask closed_neighbors(int v) const;
  int degree(int v) const;
  Mask vertices() const { return all_vertices_mask(n_); }
  std::vector<std::pair<int, int>> edges() const;  // sorted, u < v

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<Mask> adj_;
};

// Subset of a host graph's vertices as a bit mask.
struct VertexSet {
  Mask bits = 0;
  int host_n = 0;

  bool empty() const { return bits == 0; }
  int size() const;
  bool contains(int v) const;
  std::vector<int> members() const;
  std::string to_text() const;  // comma-separated ascending members

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

VertexSet vset(int host_n, std::initializer_list<int> vs);
VertexSet vset(int host_n, const std::vector<int>& vs);
void check_host(const Graph& g, const VertexSet& s, const char* who);

struct VertexRoles {
  VertexSet full;      // degree n-1
  VertexSet isolated;  // degree 0
  VertexSet pendant;   // degree 1
  std::vector<int> degrees;
  int min_degree = 0;
  int full_count = 0;
};
VertexRoles vertex_roles(const Graph& g);

Graph complement(const Graph& g);

enum class CombineMode { Union, Join };
Graph combine(const Graph& a, const Graph& b, CombineMode mode,
              int max_n = kDefaultMaxN);

enum class Family { Path, Cycle, Complete, Star, Empty, FullPlusIndependents };
struct FamilySpec {
  Family family;
  std::vector<int> params;
};
Graph make_family(const FamilySpec& spec, int max_n = kDefaultMaxN);
// Text form "name:arg[,arg...]", e.g. "cycle:4", "star:5", "fpq:2,2,1".
FamilySpec parse_family_spec(const std::string& text);

// new_label_of[old] = new; must be a permutation of 0..n-1.
Graph relabeled(const Graph& g, const std::vector<int>& new_label_of);
// keep[i] becomes vertex i of the result.
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);
// Appends vertex n adjacent to the vertices in new_vertex_neighbors.
Graph with_added_vertex(const Graph& g, Mask new_vertex_neighbors);

}  // namespace coal

#include "coal/enumerate.hpp"

#include <map>
#include <string>

#include "coal/codec.hpp"
#include "coal/iso.hpp"

namespace coal {

namespace {

void enumerate_labeled(int n, const std::function<void(const Graph&)>& yield) {
  auto pairs = triangle_pairs(n);
  const int nbits = (int)pairs.size();
  for (Mask mask = 0; mask < (Mask{1} << nbits); ++mask) {
    Graph g(n);
    for (int k = 0; k < nbits; ++k)
      if ((mask >> k) & 1) g.add_edge(pairs[k].first, pairs[k].second);
    yield(g);
  }
}

// Representatives of order m from representatives of order m-1 by attaching a
// new last vertex with every neighbor mask; dedup by certificate. Every
// m-graph arises this way from the canonical form of some (m-1)-graph.
void enumerate_classes(int n, const std::function<void(const Graph&)>& yield) {
  std::vector<Graph> reps{Graph(0)};
  for (int m = 1; m <= n; ++m) {
    std::map<std::string, Graph> next;  // certificate order
    for (const Graph& r : reps) {
      for (Mask nb = 0; nb < (Mask{1} << (m - 1)); ++nb) {
        Graph h = with_added_vertex(r, nb);
        std::string cert = canonical_certificate(h);
        if (!next.count(cert))
          next.emplace(cert,
                       parse_graph(cert, GraphFormat::Graph6, kHardVertexLimit));
      }
    }
    reps.clear();
    for (auto& [cert, g] : next) reps.push_back(g);
  }
  for (const Graph& g : reps) yield(g);
}

}  // namespace

void enumerate_graphs(int n, EnumMode mode,
                      const std::function<void(const Graph&)>& yield, int cap) {
  if (n < 0 || n > cap)
    throw CapError("enumerate_graphs: n=" + std::to_string(n) +
                   " exceeds cap " + std::to_string(cap));
  if (mode == EnumMode::Labeled)
    enumerate_labeled(n, yield);
  else
    enumerate_classes(n, yield);
}

std::vector<Graph> all_graphs(int n, EnumMode mode, int cap) {
  std::vector<Graph> out;
  enumerate_graphs(n, mode, [&out](const Graph& g) { out.push_back(g); }, cap);
  return out;
}

}  // namespace coal

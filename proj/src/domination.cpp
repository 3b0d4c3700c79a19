#include "coal/domination.hpp"

#include <bit>
#include <vector>

namespace coal {

bool is_dominating(const Graph& g, const VertexSet& s) {
  check_host(g, s, "is_dominating");
  Mask cover = s.bits;
  for (Mask t = s.bits; t; t &= t - 1) cover |= g.neighbors(std::countr_zero(t));
  return cover == g.vertices();
}

VertexSet shrink_to_minimal(const Graph& g, VertexSet d) {
  if (!is_dominating(g, d))
    throw Error("shrink_to_minimal: input is not a dominating set");
  bool changed = true;
  while (changed) {
    changed = false;
    Mask t = d.bits;
    while (t) {
      int v = std::bit_width(t) - 1;  // highest remaining index
      VertexSet without{d.bits & ~(Mask{1} << v), d.host_n};
      if (is_dominating(g, without)) {
        d = without;
        changed = true;
        break;
      }
      t &= ~(Mask{1} << v);
    }
  }
  return d;
}

std::pair<VertexSet, VertexSet> split_dominating(const Graph& g,
                                                 const VertexSet& d) {
  if (!is_dominating(g, d))
    throw Error("split_dominating: input is not a dominating set");
  if (d.size() < 2)
    throw Error("split_dominating: set has fewer than 2 vertices");
  int lowest = std::countr_zero(d.bits);
  VertexSet a{Mask{1} << lowest, d.host_n};
  VertexSet b{d.bits & ~a.bits, d.host_n};
  if (is_dominating(g, a) || is_dominating(g, b))
    throw Error("split_dominating: a half dominates; input was not minimal");
  return {a, b};
}

namespace {

struct MisSearch {
  std::vector<Mask> adj, closed;
  int best = 0;

  void run(Mask candidates, int current) {
    if (current + std::popcount(candidates) <= best) return;
    if (!candidates) {
      if (current > best) best = current;
      return;
    }
    int pivot = -1, pivot_deg = -1;
    for (Mask t = candidates; t; t &= t - 1) {
      int v = std::countr_zero(t);
      int deg = std::popcount(adj[v] & candidates);
      if (deg > pivot_deg) {
        pivot_deg = deg;
        pivot = v;
      }
    }
    run(candidates & ~closed[pivot], current + 1);
    run(candidates & ~(Mask{1} << pivot), current);
  }
};

struct DomaticSearch {
  int n = 0;
  int k = 0;
  Mask full = 0;
  std::vector<Mask> closed, suffix, covers;
  std::vector<int> assign;

  // New class first, then used classes ascending; first success is kept.
  bool run(int v, int opened) {
    if (k - opened > n - v) return false;
    for (int j = 0; j < opened; ++j)
      if ((covers[j] | suffix[v]) != full) return false;
    if (v == n) return opened == k;
    if (opened < k) {
      covers[opened] = closed[v];
      assign[v] = opened;
      if (run(v + 1, opened + 1)) return true;
      covers[opened] = 0;
    }
    for (int j = 0; j < opened; ++j) {
      Mask saved = covers[j];
      covers[j] |= closed[v];
      assign[v] = j;
      if (run(v + 1, opened)) return true;
      covers[j] = saved;
    }
    return false;
  }
};

}  // namespace

int independence_number(const Graph& g, int cap) {
  if (g.n() > cap)
    throw CapError("independence_number: n=" + std::to_string(g.n()) +
                   " exceeds cap " + std::to_string(cap));
  MisSearch s;
  s.adj.resize(g.n());
  s.closed.resize(g.n());
  for (int v = 0; v < g.n(); ++v) {
    s.adj[v] = g.neighbors(v);
    s.closed[v] = g.closed_neighbors(v);
  }
  s.run(g.vertices(), 0);
  return s.best;
}

DomaticResult domatic_number(const Graph& g, int cap) {
  const int n = g.n();
  if (n > cap)
    throw CapError("domatic_number: n=" + std::to_string(n) + " exceeds cap " +
                   std::to_string(cap));
  if (n == 0) return {0, Partition(0, {})};

  DomaticSearch s;
  s.n = n;
  s.full = g.vertices();
  s.closed.resize(n);
  for (int v = 0; v < n; ++v) s.closed[v] = g.closed_neighbors(v);
  s.suffix.assign(n + 1, 0);
  for (int v = n - 1; v >= 0; --v) s.suffix[v] = s.suffix[v + 1] | s.closed[v];

  int delta = vertex_roles(g).min_degree;
  for (int k = delta + 1; k >= 1; --k) {
    s.k = k;
    s.covers.assign(k, 0);
    s.assign.assign(n, -1);
    if (s.run(0, 0)) {
      std::vector<VertexSet> parts(k, VertexSet{0, n});
      for (int v = 0; v < n; ++v) parts[s.assign[v]].bits |= Mask{1} << v;
      return {k, Partition(n, std::move(parts))};
    }
  }
  throw Error("domatic_number: internal: no partition found");
}

InvariantBundle invariant_bundle(const Graph& g, int alpha_cap,
                                 int domatic_cap) {
  InvariantBundle b;
  VertexRoles roles = vertex_roles(g);
  b.n = g.n();
  b.m = g.m();
  b.f = roles.full_count;
  b.delta = roles.min_degree;
  b.alpha = independence_number(g, alpha_cap);
  b.domatic_d = domatic_number(g, domatic_cap).d;
  return b;
}

}  // namespace coal

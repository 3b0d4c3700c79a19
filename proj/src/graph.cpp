#include "coal/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

namespace coal {

std::vector<std::pair<int, int>> triangle_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  out.reserve(n > 1 ? n * (n - 1) / 2 : 0);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) out.emplace_back(u, v);
  return out;
}

Graph::Graph(int n) : n_(n), adj_(n > 0 ? n : 0, 0) {
  if (n < 0) throw Error("graph: negative vertex count");
  if (n > kHardVertexLimit)
    throw CapError("graph: n=" + std::to_string(n) + " exceeds hard limit " +
                   std::to_string(kHardVertexLimit));
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw Error("graph: vertex " + std::to_string(v) + " out of range (n=" +
                std::to_string(n_) + ")");
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error("graph: self-loop at vertex " + std::to_string(u));
  if ((adj_[u] >> v) & 1)
    throw Error("graph: duplicate edge " + std::to_string(u) + " " +
                std::to_string(v));
  adj_[u] |= Mask{1} << v;
  adj_[v] |= Mask{1} << u;
  ++m_;
}

Mask Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

Mask Graph::closed_neighbors(int v) const {
  check_vertex(v);
  return adj_[v] | (Mask{1} << v);
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(adj_[v]);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if ((adj_[u] >> v) & 1) out.emplace_back(u, v);
  return out;
}

int VertexSet::size() const { return std::popcount(bits); }

bool VertexSet::contains(int v) const {
  return v >= 0 && v < host_n && ((bits >> v) & 1);
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (Mask t = bits; t; t &= t - 1) out.push_back(std::countr_zero(t));
  return out;
}

std::string VertexSet::to_text() const {
  std::string s;
  for (Mask t = bits; t; t &= t - 1) {
    if (!s.empty()) s.push_back(',');
    s += std::to_string(std::countr_zero(t));
  }
  return s;
}

VertexSet vset(int host_n, std::initializer_list<int> vs) {
  return vset(host_n, std::vector<int>(vs));
}

VertexSet vset(int host_n, const std::vector<int>& vs) {
  VertexSet s{0, host_n};
  for (int v : vs) {
    if (v < 0 || v >= host_n)
      throw Error("vertex set: vertex " + std::to_string(v) +
                  " out of range (host n=" + std::to_string(host_n) + ")");
    if ((s.bits >> v) & 1)
      throw Error("vertex set: duplicate vertex " + std::to_string(v));
    s.bits |= Mask{1} << v;
  }
  return s;
}

void check_host(const Graph& g, const VertexSet& s, const char* who) {
  if (s.host_n != g.n() || (s.bits & ~all_vertices_mask(g.n())))
    throw Error(std::string(who) + ": vertex set does not match host graph");
}

VertexRoles vertex_roles(const Graph& g) {
  VertexRoles r;
  const int n = g.n();
  r.full = {0, n};
  r.isolated = {0, n};
  r.pendant = {0, n};
  r.degrees.resize(n);
  r.min_degree = 0;
  for (int v = 0; v < n; ++v) {
    int d = g.degree(v);
    r.degrees[v] = d;
    if (d == n - 1) r.full.bits |= Mask{1} << v;
    if (d == 0) r.isolated.bits |= Mask{1} << v;
    if (d == 1) r.pendant.bits |= Mask{1} << v;
    if (v == 0 || d < r.min_degree) r.min_degree = d;
  }
  r.full_count = r.full.size();
  return r;
}

Graph complement(const Graph& g) {
  Graph c(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

Graph combine(const Graph& a, const Graph& b, CombineMode mode, int max_n) {
  int n = a.n() + b.n();
  if (n > max_n)
    throw CapError("combine: result n=" + std::to_string(n) + " exceeds cap " +
                   std::to_string(max_n));
  Graph c(n);
  for (auto [u, v] : a.edges()) c.add_edge(u, v);
  for (auto [u, v] : b.edges()) c.add_edge(a.n() + u, a.n() + v);
  if (mode == CombineMode::Join)
    for (int u = 0; u < a.n(); ++u)
      for (int v = 0; v < b.n(); ++v) c.add_edge(u, a.n() + v);
  return c;
}

namespace {

void need_params(const FamilySpec& spec, size_t count, const char* name) {
  if (spec.params.size() != count)
    throw Error(std::string("family ") + name + " expects " +
                std::to_string(count) + " parameter(s)");
  for (int p : spec.params)
    if (p < 0)
      throw Error(std::string("family ") + name + ": negative parameter");
}

}  // namespace

Graph make_family(const FamilySpec& spec, int max_n) {
  auto cap = [max_n](int n, const char* name) {
    if (n > max_n)
      throw CapError(std::string("family ") + name + ": n=" +
                     std::to_string(n) + " exceeds cap " + std::to_string(max_n));
  };
  switch (spec.family) {
    case Family::Path: {
      need_params(spec, 1, "path");
      int n = spec.params[0];
      if (n < 1) throw Error("family path: n must be >= 1");
      cap(n, "path");
      Graph g(n);
      for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
      return g;
    }
    case Family::Cycle: {
      need_params(spec, 1, "cycle");
      int n = spec.params[0];
      if (n < 3) throw Error("family cycle: n must be >= 3");
      cap(n, "cycle");
      Graph g(n);
      for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
      g.add_edge(n - 1, 0);
      return g;
    }
    case Family::Complete: {
      need_params(spec, 1, "complete");
      int n = spec.params[0];
      cap(n, "complete");
      Graph g(n);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
      return g;
    }
    case Family::Star: {
      // star:m is K_{1,m}: center 0, leaves 1..m.
      need_params(spec, 1, "star");
      int m = spec.params[0];
      cap(m + 1, "star");
      Graph g(m + 1);
      for (int v = 1; v <= m; ++v) g.add_edge(0, v);
      return g;
    }
    case Family::Empty: {
      need_params(spec, 1, "empty");
      cap(spec.params[0], "empty");
      return Graph(spec.params[0]);
    }
    case Family::FullPlusIndependents: {
      // (K_f + p*K_1) union q*K_1: clique 0..f-1, joined independents
      // f..f+p-1, isolates last.
      need_params(spec, 3, "fpq");
      int f = spec.params[0], p = spec.params[1], q = spec.params[2];
      int n = f + p + q;
      cap(n, "fpq");
      Graph g(n);
      for (int u = 0; u < f; ++u)
        for (int v = u + 1; v < f; ++v) g.add_edge(u, v);
      for (int u = 0; u < f; ++u)
        for (int v = f; v < f + p; ++v) g.add_edge(u, v);
      return g;
    }
  }
  throw Error("family: unknown family");
}

FamilySpec parse_family_spec(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 >= text.size())
    throw Error("family: expected name:arg[,arg...], got '" + text + "'");
  std::string name = text.substr(0, colon);
  FamilySpec spec;
  if (name == "path")
    spec.family = Family::Path;
  else if (name == "cycle")
    spec.family = Family::Cycle;
  else if (name == "complete")
    spec.family = Family::Complete;
  else if (name == "star")
    spec.family = Family::Star;
  else if (name == "empty")
    spec.family = Family::Empty;
  else if (name == "fpq" || name == "full_plus_independents")
    spec.family = Family::FullPlusIndependents;
  else
    throw Error("family: unknown family '" + name + "'");

  size_t pos = colon + 1;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos
                                           ? std::string::npos
                                           : comma - pos);
    int value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || p != tok.data() + tok.size())
      throw Error("family: bad integer parameter '" + tok + "'");
    spec.params.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return spec;
}

Graph relabeled(const Graph& g, const std::vector<int>& new_label_of) {
  const int n = g.n();
  if ((int)new_label_of.size() != n)
    throw Error("relabel: permutation size mismatch");
  Mask seen = 0;
  for (int v : new_label_of) {
    if (v < 0 || v >= n || ((seen >> v) & 1))
      throw Error("relabel: not a permutation");
    seen |= Mask{1} << v;
  }
  Graph h(n);
  for (auto [u, v] : g.edges()) h.add_edge(new_label_of[u], new_label_of[v]);
  return h;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  Graph h((int)keep.size());
  Mask seen = 0;
  for (int v : keep) {
    if (v < 0 || v >= g.n() || ((seen >> v) & 1))
      throw Error("induced_subgraph: bad vertex list");
    seen |= Mask{1} << v;
  }
  for (size_t i = 0; i < keep.size(); ++i)
    for (size_t j = i + 1; j < keep.size(); ++j)
      if (g.has_edge(keep[i], keep[j])) h.add_edge((int)i, (int)j);
  return h;
}

Graph with_added_vertex(const Graph& g, Mask new_vertex_neighbors) {
  if (new_vertex_neighbors & ~all_vertices_mask(g.n()))
    throw Error("with_added_vertex: neighbor mask out of range");
  Graph h(g.n() + 1);
  for (auto [u, v] : g.edges()) h.add_edge(u, v);
  for (Mask t = new_vertex_neighbors; t; t &= t - 1)
    h.add_edge(std::countr_zero(t), g.n());
  return h;
}

}  // namespace coal

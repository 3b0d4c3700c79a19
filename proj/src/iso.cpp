#include "coal/iso.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <mutex>
#include <unordered_map>

#include "coal/codec.hpp"

namespace coal {

namespace {

std::string memo_key(const Graph& g) {
  std::string k;
  k.reserve(1 + 8 * (size_t)g.n());
  k.push_back((char)g.n());
  for (int v = 0; v < g.n(); ++v) {
    Mask m = g.neighbors(v);
    for (int b = 0; b < 8; ++b) k.push_back((char)(m >> (8 * b)));
  }
  return k;
}

// DFS over vertex orderings restricted to the ascending degree sequence,
// keeping the lexicographically least adjacency bit string seen so far.
// best is seeded with 2 (greater than any bit) so the first completed leaf
// always replaces it.
struct CanonSearch {
  int n;
  std::vector<Mask> adj;
  std::vector<int> deg;
  std::vector<int> target_deg;
  std::vector<std::uint8_t> best, cur;
  std::vector<int> perm;
  std::vector<bool> used;

  explicit CanonSearch(const Graph& g) : n(g.n()) {
    adj.resize(n);
    deg.resize(n);
    for (int v = 0; v < n; ++v) {
      adj[v] = g.neighbors(v);
      deg[v] = std::popcount(adj[v]);
    }
    target_deg = deg;
    std::sort(target_deg.begin(), target_deg.end());
    best.assign((size_t)n * (n - 1) / 2, 2);
    cur.assign(best.size(), 0);
    perm.assign(n, -1);
    used.assign(n, false);
  }

  void dfs(int pos, bool tight) {
    if (pos == n) {
      // Full compare: the carried flag may be stale once best has shrunk
      // below the value it was compared against.
      if (cur < best) best = cur;
      return;
    }
    const int base = pos * (pos - 1) / 2;
    for (int v = 0; v < n; ++v) {
      if (used[v] || deg[v] != target_deg[pos]) continue;
      bool t2 = tight;
      bool greater = false;
      for (int u = 0; u < pos; ++u) {
        std::uint8_t b = (std::uint8_t)((adj[v] >> perm[u]) & 1);
        cur[base + u] = b;
        if (t2) {
          if (b > best[base + u]) {
            greater = true;
            break;
          }
          if (b < best[base + u]) t2 = false;
        }
      }
      if (greater) continue;
      used[v] = true;
      perm[pos] = v;
      dfs(pos + 1, t2);
      used[v] = false;
    }
  }
};

std::mutex g_memo_mutex;
std::unordered_map<std::string, std::string> g_memo;

}  // namespace

std::string canonical_certificate(const Graph& g, int cap) {
  if (g.n() > cap)
    throw CapError("canonical_certificate: n=" + std::to_string(g.n()) +
                   " exceeds cap " + std::to_string(cap));
  std::string key = memo_key(g);
  {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = g_memo.find(key);
    if (it != g_memo.end()) return it->second;
  }
  std::string cert;
  if (g.n() <= 1) {
    cert = encode_graph(g, GraphFormat::Graph6);
  } else {
    CanonSearch cs(g);
    cs.dfs(0, true);
    Graph canon(g.n());
    auto pairs = triangle_pairs(g.n());
    for (size_t k = 0; k < pairs.size(); ++k)
      if (cs.best[k] == 1) canon.add_edge(pairs[k].first, pairs[k].second);
    cert = encode_graph(canon, GraphFormat::Graph6);
  }
  {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    g_memo.emplace(std::move(key), cert);
  }
  return cert;
}

Graph canonical_form(const Graph& g, int cap) {
  return parse_graph(canonical_certificate(g, cap), GraphFormat::Graph6,
                     kHardVertexLimit);
}

bool are_isomorphic(const Graph& a, const Graph& b, int cap) {
  if (a.n() > cap || b.n() > cap)
    throw CapError("are_isomorphic: size exceeds cap " + std::to_string(cap));
  if (a.n() != b.n() || a.m() != b.m()) return false;
  auto degs = [](const Graph& g) {
    std::vector<int> d(g.n());
    for (int v = 0; v < g.n(); ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degs(a) != degs(b)) return false;
  return canonical_certificate(a, cap) == canonical_certificate(b, cap);
}

}  // namespace coal

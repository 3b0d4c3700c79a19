#include "coal/coalition.hpp"

#include <algorithm>
#include <bit>

namespace coal {

const char* to_string(PartClass c) {
  switch (c) {
    case PartClass::SingletonDominating: return "singleton_dominating";
    case PartClass::CoalitionMember: return "coalition_member";
    case PartClass::OrphanNonDominating: return "orphan_non_dominating";
    case PartClass::InvalidDominatingNonSingleton:
      return "invalid_dominating_non_singleton";
  }
  return "?";
}

bool forms_coalition(const Graph& g, const VertexSet& a, const VertexSet& b) {
  check_host(g, a, "forms_coalition");
  check_host(g, b, "forms_coalition");
  if (a.empty() || b.empty())
    throw Error("forms_coalition: sets must be nonempty");
  if (a.bits & b.bits) throw Error("forms_coalition: sets overlap");
  if (is_dominating(g, a) || is_dominating(g, b)) return false;
  return is_dominating(g, VertexSet{a.bits | b.bits, a.host_n});
}

PartitionAssessment assess_partition(const Graph& g, const Partition& p) {
  if (p.host_n() != g.n())
    throw Error("assess_partition: partition host mismatch");
  const int k = p.size();
  const Mask full = g.vertices();

  std::vector<Mask> cover(k, 0);
  std::vector<bool> dominating(k, false);
  for (int i = 0; i < k; ++i) {
    cover[i] = p.part(i).bits;
    for (Mask t = p.part(i).bits; t; t &= t - 1)
      cover[i] |= g.neighbors(std::countr_zero(t));
    dominating[i] = cover[i] == full;
  }

  PartitionAssessment a;
  a.part_class.resize(k);
  std::vector<bool> partnered(k, false);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (!dominating[i] && !dominating[j] && (cover[i] | cover[j]) == full) {
        a.coalition_pairs.emplace_back(i, j);
        partnered[i] = partnered[j] = true;
      }
  a.pair_count = (int)a.coalition_pairs.size();

  a.valid = true;
  for (int i = 0; i < k; ++i) {
    if (dominating[i])
      a.part_class[i] = p.part(i).size() == 1
                            ? PartClass::SingletonDominating
                            : PartClass::InvalidDominatingNonSingleton;
    else
      a.part_class[i] = partnered[i] ? PartClass::CoalitionMember
                                     : PartClass::OrphanNonDominating;
    if (a.part_class[i] == PartClass::InvalidDominatingNonSingleton ||
        a.part_class[i] == PartClass::OrphanNonDominating)
      a.valid = false;
  }
  return a;
}

namespace {

// Exhaustive search over set partitions as restricted-growth strings in
// lexicographic order. A part that is dominating and has two or more members
// can never recover (domination is monotone), so that branch is pruned.
struct PartitionSearch {
  int n = 0;
  Mask full = 0;
  std::vector<Mask> closed;
  std::vector<int> rgs;
  std::vector<Mask> covers;
  std::vector<int> sizes;

  std::optional<int> max_parts;
  std::vector<int> parts_rgs;
  std::optional<int> max_pairs;
  std::vector<int> pairs_rgs;
  long long examined = 0;

  const std::function<void(const std::vector<int>&, int)>* leaf_hook = nullptr;

  explicit PartitionSearch(const Graph& g) : n(g.n()), full(g.vertices()) {
    closed.resize(n);
    for (int v = 0; v < n; ++v) closed[v] = g.closed_neighbors(v);
    rgs.assign(n, 0);
    covers.assign(n + 1, 0);
    sizes.assign(n + 1, 0);
  }

  void run() { dfs(0, 0); }

  void dfs(int v, int used) {
    if (v == n) {
      leaf(used);
      return;
    }
    for (int j = 0; j <= used && j < n; ++j) {
      if (j < used) {
        Mask next_cover = covers[j] | closed[v];
        if (next_cover == full && sizes[j] >= 1) continue;  // prune
        Mask saved = covers[j];
        covers[j] = next_cover;
        ++sizes[j];
        rgs[v] = j;
        dfs(v + 1, used);
        --sizes[j];
        covers[j] = saved;
      } else {
        covers[j] = closed[v];
        sizes[j] = 1;
        rgs[v] = j;
        dfs(v + 1, used + 1);
        sizes[j] = 0;
        covers[j] = 0;
      }
    }
  }

  void leaf(int k) {
    ++examined;
    Mask dom = 0;
    for (int i = 0; i < k; ++i)
      if (covers[i] == full) dom |= Mask{1} << i;
    Mask partnered = 0;
    int pairs = 0;
    for (int i = 0; i < k; ++i) {
      if ((dom >> i) & 1) continue;
      for (int j = i + 1; j < k; ++j) {
        if ((dom >> j) & 1) continue;
        if ((covers[i] | covers[j]) == full) {
          ++pairs;
          partnered |= (Mask{1} << i) | (Mask{1} << j);
        }
      }
    }
    Mask all_parts = k == 0 ? 0 : (Mask{1} << k) - 1;
    if ((dom | partnered) != all_parts) return;  // some part is an orphan

    if (!max_parts || k > *max_parts) {
      max_parts = k;
      parts_rgs = rgs;
    }
    if (!max_pairs || pairs > *max_pairs) {
      max_pairs = pairs;
      pairs_rgs = rgs;
    }
    if (leaf_hook) (*leaf_hook)(rgs, k);
  }
};

Partition partition_from_rgs(const Graph& g, const std::vector<int>& rgs) {
  int k = 0;
  for (int j : rgs) k = std::max(k, j + 1);
  std::vector<VertexSet> parts(k, VertexSet{0, g.n()});
  for (int v = 0; v < g.n(); ++v) parts[rgs[v]].bits |= Mask{1} << v;
  return Partition(g.n(), std::move(parts));
}

void check_partition_cap(const Graph& g, int cap, const char* who) {
  if (g.n() > cap)
    throw CapError(std::string(who) + ": n=" + std::to_string(g.n()) +
                   " exceeds cap " + std::to_string(cap));
}

}  // namespace

SearchOutcome coalition_number(const Graph& g, int cap) {
  check_partition_cap(g, cap, "coalition_number");
  PartitionSearch s(g);
  s.run();
  SearchOutcome out;
  out.partitions_examined = s.examined;
  if (s.max_parts) {
    out.value = s.max_parts;
    out.witness = partition_from_rgs(g, s.parts_rgs);
  }
  return out;
}

SearchOutcome coalition_count(const Graph& g, int cap) {
  check_partition_cap(g, cap, "coalition_count");
  PartitionSearch s(g);
  s.run();
  SearchOutcome out;
  out.partitions_examined = s.examined;
  if (s.max_pairs) {
    out.value = s.max_pairs;
    out.witness = partition_from_rgs(g, s.pairs_rgs);
  }
  return out;
}

void for_each_valid_partition(
    const Graph& g,
    const std::function<void(const Partition&, const PartitionAssessment&)>& fn,
    int cap) {
  check_partition_cap(g, cap, "for_each_valid_partition");
  PartitionSearch s(g);
  std::function<void(const std::vector<int>&, int)> hook =
      [&](const std::vector<int>& rgs, int) {
        Partition p = partition_from_rgs(g, rgs);
        fn(p, assess_partition(g, p));
      };
  s.leaf_hook = &hook;
  s.run();
}

CoalitionGraphResult coalition_graph(const Graph& g, const Partition& p) {
  PartitionAssessment a = assess_partition(g, p);
  if (!a.valid) throw Error("coalition_graph: not a valid c-partition");
  CoalitionGraphResult r;
  r.cg = Graph(p.size());
  for (auto [i, j] : a.coalition_pairs) r.cg.add_edge(i, j);
  for (int i = 0; i < p.size(); ++i) r.part_labels.push_back(p.part(i).to_text());
  return r;
}

bool is_sp_graph(const Graph& g) {
  const int n = g.n();
  const Mask full = g.vertices();
  for (int v = 0; v < n; ++v) {
    if (g.closed_neighbors(v) == full) continue;  // singleton dominating
    bool partnered = false;
    for (int u = 0; u < n && !partnered; ++u) {
      if (u == v || g.closed_neighbors(u) == full) continue;
      if ((g.closed_neighbors(u) | g.closed_neighbors(v)) == full)
        partnered = true;
    }
    if (!partnered) return false;
  }
  return true;
}

DomaticDerivedPartition cpartition_from_domatic(const Graph& g,
                                                int domatic_cap) {
  VertexRoles roles = vertex_roles(g);
  if (!roles.isolated.empty())
    throw Error("cpartition_from_domatic: graph has isolated vertices");
  const int n = g.n();
  if (n == 0) return {Partition(0, {}), 0};

  DomaticResult dom = domatic_number(g, domatic_cap);
  const int k = dom.d;
  const int f = roles.full_count;
  const Mask fulls = roles.full.bits;

  // Normalize the witness so every full vertex is its own singleton part.
  // A maximum witness holds at most one full vertex per part, and whenever a
  // non-full vertex exists some part carries no full vertex at all.
  std::vector<Mask> parts;
  for (const VertexSet& p : dom.witness.parts()) parts.push_back(p.bits);
  while (true) {
    int idx = -1;
    for (size_t i = 0; i < parts.size(); ++i)
      if ((parts[i] & fulls) && std::popcount(parts[i]) >= 2) {
        idx = (int)i;
        break;
      }
    if (idx < 0) break;
    int u = std::countr_zero(parts[idx] & fulls);
    Mask rest = parts[idx] & ~(Mask{1} << u);
    int target = -1;
    for (int i = (int)parts.size() - 1; i >= 0; --i)
      if (i != idx && (parts[i] & fulls) == 0) {
        target = i;
        break;
      }
    if (target < 0)
      throw Error("cpartition_from_domatic: internal: no merge target");
    parts[target] |= rest;
    parts[idx] = Mask{1} << u;
  }

  std::vector<Mask> full_singles, rest;
  for (Mask p : parts)
    (p & fulls) ? full_singles.push_back(p) : rest.push_back(p);
  std::sort(full_singles.begin(), full_singles.end());
  if ((int)full_singles.size() != f || (int)rest.size() != k - f)
    throw Error("cpartition_from_domatic: internal: normalization miscount");

  std::vector<VertexSet> out;
  for (Mask p : full_singles) out.push_back(VertexSet{p, n});

  if (!rest.empty()) {
    // Shrink every part but the last to a minimal dominating set, folding the
    // removed vertices into the last part, then split each minimal set.
    Mask last = rest.back();
    for (size_t i = 0; i + 1 < rest.size(); ++i) {
      VertexSet minimal = shrink_to_minimal(g, VertexSet{rest[i], n});
      last |= rest[i] & ~minimal.bits;
      auto [a, b] = split_dominating(g, minimal);
      out.push_back(a);
      out.push_back(b);
    }

    VertexSet core = shrink_to_minimal(g, VertexSet{last, n});
    Mask leftover = last & ~core.bits;
    auto [a, b] = split_dominating(g, core);
    if (leftover == 0) {
      out.push_back(a);
      out.push_back(b);
    } else {
      VertexSet w{leftover, n};
      if (is_dominating(g, w))
        throw Error(
            "cpartition_from_domatic: internal: leftover dominates, "
            "contradicting domatic maximality");
      bool partnered = forms_coalition(g, w, a) || forms_coalition(g, w, b);
      for (const VertexSet& p : out) {
        if (partnered) break;
        partnered = forms_coalition(g, w, p);
      }
      if (partnered) {
        out.push_back(a);
        out.push_back(b);
        out.push_back(w);
      } else {
        // w pairs with nothing; ride along with the second half, which then
        // still forms a coalition with the first.
        out.push_back(a);
        out.push_back(VertexSet{b.bits | w.bits, n});
      }
    }
  }

  Partition result(n, std::move(out));
  if (!assess_partition(g, result).valid)
    throw Error("cpartition_from_domatic: internal: result is not a valid "
                "c-partition");
  return {result, k - f};
}

}  // namespace coal

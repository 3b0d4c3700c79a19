#include "coal/hstar.hpp"

#include <algorithm>
#include <bit>

#include "coal/iso.hpp"

namespace coal {

const char* to_string(HStarCase c) {
  switch (c) {
    case HStarCase::Case1Even: return "CASE1_EVEN";
    case HStarCase::Case1Odd: return "CASE1_ODD";
    case HStarCase::Case2: return "CASE2";
    case HStarCase::AllIsolates: return "ALL_ISOLATES";
  }
  return "?";
}

TargetDecomposition decompose_target(const Graph& g) {
  TargetDecomposition d;
  std::vector<int> base;
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) == 0)
      d.isolate_to_target.push_back(v);
    else
      base.push_back(v);
  }
  d.isolate_count = (int)d.isolate_to_target.size();
  d.base_to_target = base;
  d.g_prime = induced_subgraph(g, base);
  d.complement_edges = complement(d.g_prime).edges();
  return d;
}

PredictedMetrics predicted_metrics(const TargetDecomposition& d) {
  const int n = d.g_prime.n();
  const int t = d.isolate_count;
  const int mbar = (int)d.complement_edges.size();
  auto choose2 = [](int x) { return x * (x - 1) / 2; };
  PredictedMetrics p;
  if (mbar == 0) {
    if (n % 2 == 0) {
      p.order = n + t;
      p.size_verbatim = choose2(n) - n / 2 + t * (p.order - 1);
    } else {
      if (n == 1)
        throw Error("predicted_metrics: order-1 non-isolated part is impossible");
      p.order = n + t + 1;
      p.size_verbatim = choose2(n) - (n - 1) / 2 + (n - 2) + t * (p.order - 1);
    }
  } else {
    if (n < 3)
      throw Error("predicted_metrics: row inapplicable: n < 3 with complement "
                  "edges");
    p.order = n + mbar + t;
    p.size_verbatim = choose2(n) - n / 2 + mbar * (n - 3) + t * (p.order - 1);
  }
  p.size_corrected = p.size_verbatim - choose2(t);
  return p;
}

namespace {

// Pairing of the base vertices whose internal edge is deleted. For odd n the
// last vertex stays unpaired. When the complement of g_prime is a single edge
// that coincides with a default pair, no gadget host would exist; a swapped
// pairing avoids that.
std::vector<std::pair<int, int>> choose_matching(
    int n, const std::vector<std::pair<int, int>>& comp) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  if (comp.size() == 1 && n % 2 == 0) {
    auto [j, k] = comp[0];
    if (j / 2 == k / 2) {  // consecutive default pair
      int x = 0;
      while (x == j || x == k) ++x;
      std::swap(order[k], order[x]);
    }
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; i += 2) {
    int a = order[i], b = order[i + 1];
    pairs.emplace_back(std::min(a, b), std::max(a, b));
  }
  return pairs;
}

}  // namespace

HStarResult build_hstar(const Graph& target, int max_host_n) {
  TargetDecomposition dec = decompose_target(target);
  HStarResult r;
  r.predicted = predicted_metrics(dec);
  if (r.predicted.order > max_host_n)
    throw CapError("build_hstar: host order " + std::to_string(r.predicted.order) +
                   " exceeds cap " + std::to_string(max_host_n));

  Graph gp = dec.g_prime;
  std::vector<int> base_to_target = dec.base_to_target;
  const int n = gp.n();
  const int t = dec.isolate_count;

  if (n == 0)
    r.case_tag = HStarCase::AllIsolates;
  else if (dec.complement_edges.empty())
    r.case_tag = n % 2 == 0 ? HStarCase::Case1Even : HStarCase::Case1Odd;
  else
    r.case_tag = HStarCase::Case2;

  std::vector<std::pair<int, int>> comp = dec.complement_edges;
  if (r.case_tag == HStarCase::Case2 && gp.degree(n - 1) == n - 1) {
    // The designated v_n must not be full in g_prime; swap it with the
    // highest-index non-full vertex.
    int w = n - 2;
    while (gp.degree(w) == n - 1) --w;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::swap(perm[w], perm[n - 1]);
    gp = relabeled(gp, perm);
    std::swap(base_to_target[w], base_to_target[n - 1]);
    comp = complement(gp).edges();
  }

  const int mbar = (int)comp.size();
  const bool odd_helper = r.case_tag == HStarCase::Case1Odd;
  const int host_n = n + (odd_helper ? 1 : 0) + mbar + t;
  Graph host(host_n);

  r.matching = choose_matching(n, comp);
  std::vector<int> pair_of(n, -1);
  for (auto [a, b] : r.matching) {
    pair_of[a] = b;
    pair_of[b] = a;
  }

  // Base: complete graph minus the matching; an unpaired last vertex keeps
  // all of its edges.
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (pair_of[u] != v) host.add_edge(u, v);

  std::vector<Mask> part_bits(n, 0);
  for (int i = 0; i < n; ++i) part_bits[i] = Mask{1} << i;

  if (odd_helper) {
    int u = n;
    r.u_vertex = u;
    r.u_part = 0;  // lowest base index other than v_n
    for (int b = 0; b < n - 1; ++b)
      if (b != r.u_part) host.add_edge(u, b);  // edge u-v_k removed
    part_bits[r.u_part] |= Mask{1} << u;
  }

  if (r.case_tag == HStarCase::Case2) {
    std::vector<bool> comp_at(n, false);
    for (auto [j, k] : comp) comp_at[j] = comp_at[k] = true;
    for (int idx = 0; idx < mbar; ++idx) {
      auto [j, k] = comp[idx];
      int gv = n + idx;
      // Host part: prefer a part whose base has a complement edge (its own
      // gadget can never be covered by that part); otherwise a part whose
      // deleted matching partner is j or k, so the partner stays uncovered.
      int part = -1;
      for (int i = 0; i < n && part < 0; ++i)
        if (i != j && i != k && comp_at[i]) part = i;
      for (int i = 0; i < n && part < 0; ++i)
        if (i != j && i != k && pair_of[i] != -1 &&
            (pair_of[i] == j || pair_of[i] == k))
          part = i;
      if (part < 0)
        throw Error("build_hstar: no eligible host part for gadget (" +
                    std::to_string(j) + "," + std::to_string(k) + ")");
      for (int b = 0; b < n; ++b)
        if (b != j && b != k && b != part) host.add_edge(gv, b);
      part_bits[part] |= Mask{1} << gv;
      r.gadgets.push_back({j, k, gv, part});
    }
  }

  const int w_base = n + (odd_helper ? 1 : 0) + mbar;
  for (int i = 0; i < t; ++i) {
    int wv = w_base + i;
    for (int x = 0; x < wv; ++x) host.add_edge(wv, x);
    r.w_vertices.push_back(wv);
  }

  std::vector<VertexSet> parts;
  for (int i = 0; i < n; ++i) {
    parts.push_back(VertexSet{part_bits[i], host_n});
    r.part_to_target.push_back(base_to_target[i]);
  }
  for (int i = 0; i < t; ++i) {
    parts.push_back(VertexSet{Mask{1} << r.w_vertices[i], host_n});
    r.part_to_target.push_back(dec.isolate_to_target[i]);
  }
  r.pi_star = Partition(host_n, std::move(parts));
  r.host = host;
  r.actual_order = host.n();
  r.actual_size = host.m();

  if (r.case_tag == HStarCase::Case2) {
    for (int i = 0; i < n; ++i)
      if (is_dominating(host, r.pi_star.part(i)))
        throw Error("build_hstar: internal: base part " + std::to_string(i) +
                    " became dominating");
  }
  return r;
}

AuditReport validate_hstar(const Graph& target, const HStarResult& r) {
  AuditReport a;
  PartitionAssessment as = assess_partition(r.host, r.pi_star);
  a.partition_valid = as.valid;
  for (int i = 0; i < r.pi_star.size(); ++i) {
    if (as.part_class[i] == PartClass::InvalidDominatingNonSingleton)
      a.violations.push_back("part " + std::to_string(i) + " ({" +
                             r.pi_star.part(i).to_text() +
                             "}) is dominating and not a singleton");
    else if (as.part_class[i] == PartClass::OrphanNonDominating)
      a.violations.push_back("part " + std::to_string(i) + " ({" +
                             r.pi_star.part(i).to_text() +
                             "}) has no coalition partner");
  }

  Graph cg(r.pi_star.size());
  for (auto [i, j] : as.coalition_pairs) cg.add_edge(i, j);

  a.cg_matches = true;
  int mismatches = 0;
  for (int p = 0; p < cg.n(); ++p)
    for (int q = p + 1; q < cg.n(); ++q) {
      bool want = target.has_edge(r.part_to_target[p], r.part_to_target[q]);
      if (cg.has_edge(p, q) != want) {
        a.cg_matches = false;
        if (++mismatches <= 8)
          a.violations.push_back(
              "coalition graph differs from target at part pair (" +
              std::to_string(p) + "," + std::to_string(q) + ")");
      }
    }
  if (mismatches > 8)
    a.violations.push_back("... " + std::to_string(mismatches - 8) +
                           " further coalition graph mismatches");

  if (a.cg_matches) {
    a.iso_matches = true;
  } else {
    try {
      a.iso_matches = are_isomorphic(cg, target);
    } catch (const CapError&) {
      a.iso_matches = false;
      a.violations.push_back("isomorphism check skipped: size over cap");
    }
  }

  if (r.case_tag == HStarCase::Case2) {
    const int n = (int)r.part_to_target.size() - (int)r.w_vertices.size();
    for (int b = 0; b < n; ++b)
      if (r.host.degree(b) == r.host.n() - 1)
        a.violations.push_back("base vertex " + std::to_string(b) +
                               " is full in the host");
  }

  bool order_ok = r.actual_order == r.predicted.order;
  a.order_size_match_table =
      order_ok && r.actual_size == r.predicted.size_verbatim;
  a.corrected_size_match =
      order_ok && r.actual_size == r.predicted.size_corrected;
  if (!order_ok)
    a.violations.push_back("actual order " + std::to_string(r.actual_order) +
                           " != predicted " + std::to_string(r.predicted.order));
  if (r.actual_size != r.predicted.size_corrected)
    a.violations.push_back("actual size " + std::to_string(r.actual_size) +
                           " != corrected predicted " +
                           std::to_string(r.predicted.size_corrected));
  return a;
}

}  // namespace coal

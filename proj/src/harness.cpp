#include "coal/harness.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "coal/codec.hpp"
#include "coal/iso.hpp"

namespace coal {

const char* to_string(UniverseFilter f) {
  switch (f) {
    case UniverseFilter::All: return "all";
    case UniverseFilter::NoIsolates: return "no_isolates";
    case UniverseFilter::OneFullAndDelta1: return "one_full_and_delta1";
    case UniverseFilter::SpNoFull: return "sp_no_full";
    case UniverseFilter::FamilyMembership: return "family_membership";
  }
  return "?";
}

const char* to_string(CheckId id) {
  switch (id) {
    case CheckId::T31: return "T31";
    case CheckId::T32: return "T32";
    case CheckId::COR: return "COR";
    case CheckId::T34: return "T34";
    case CheckId::R35: return "R35";
    case CheckId::T36: return "T36";
    case CheckId::HSTAR: return "HSTAR";
    case CheckId::ORACLE: return "ORACLE";
  }
  return "?";
}

CheckId parse_check_id(const std::string& name) {
  for (CheckId id : {CheckId::T31, CheckId::T32, CheckId::COR, CheckId::T34,
                     CheckId::R35, CheckId::T36, CheckId::HSTAR,
                     CheckId::ORACLE})
    if (name == to_string(id)) return id;
  throw Error("unknown check id '" + name + "'");
}

UniverseFilter natural_filter(CheckId id) {
  switch (id) {
    case CheckId::T31: return UniverseFilter::NoIsolates;
    case CheckId::T34: return UniverseFilter::OneFullAndDelta1;
    case CheckId::T36: return UniverseFilter::SpNoFull;
    default: return UniverseFilter::All;
  }
}

namespace {

bool passes_filter(const Graph& g, UniverseFilter f) {
  switch (f) {
    case UniverseFilter::All:
      return true;
    case UniverseFilter::NoIsolates:
      return vertex_roles(g).isolated.empty();
    case UniverseFilter::OneFullAndDelta1: {
      VertexRoles r = vertex_roles(g);
      return r.full_count == 1 && r.min_degree == 1;
    }
    case UniverseFilter::SpNoFull:
      return vertex_roles(g).full_count == 0 && is_sp_graph(g);
    case UniverseFilter::FamilyMembership:
      return is_full_plus_independents_member(g);
  }
  return false;
}

}  // namespace

std::vector<Graph> build_universe(const UniverseSpec& spec, int enum_cap) {
  std::vector<Graph> out;
  enumerate_graphs(
      spec.max_n, spec.mode,
      [&](const Graph& g) {
        if (passes_filter(g, spec.filter)) out.push_back(g);
      },
      enum_cap);
  return out;
}

NaiveSearchResult naive_coalition_search(const Graph& g) {
  const int n = g.n();
  std::vector<std::vector<int>> adj(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && g.has_edge(u, v)) adj[u].push_back(v);

  auto dominates = [&](const std::vector<int>& set) {
    std::vector<bool> covered(n, false);
    for (int v : set) {
      covered[v] = true;
      for (int w : adj[v]) covered[w] = true;
    }
    for (int v = 0; v < n; ++v)
      if (!covered[v]) return false;
    return true;
  };

  NaiveSearchResult result;
  std::vector<std::vector<int>> blocks;

  auto evaluate = [&]() {
    const int k = (int)blocks.size();
    std::vector<bool> dom(k);
    for (int i = 0; i < k; ++i) dom[i] = dominates(blocks[i]);
    std::vector<bool> partnered(k, false);
    int pairs = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        if (dom[i] || dom[j]) continue;
        std::vector<int> both = blocks[i];
        both.insert(both.end(), blocks[j].begin(), blocks[j].end());
        if (dominates(both)) {
          ++pairs;
          partnered[i] = partnered[j] = true;
        }
      }
    for (int i = 0; i < k; ++i) {
      bool ok = (dom[i] && blocks[i].size() == 1) || (!dom[i] && partnered[i]);
      if (!ok) return;
    }
    if (!result.max_parts || k > *result.max_parts) result.max_parts = k;
    if (!result.max_pairs || pairs > *result.max_pairs) result.max_pairs = pairs;
  };

  std::function<void(int)> place = [&](int v) {
    if (v == n) {
      evaluate();
      return;
    }
    for (size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(v);
      place(v + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({v});
    place(v + 1);
    blocks.pop_back();
  };
  place(0);
  return result;
}

bool is_full_plus_independents_member(const Graph& g, int* f_out, int* p_out,
                                      int* q_out, int iso_cap) {
  const int n = g.n();
  for (int f = 0; f <= n; ++f)
    for (int p = 0; p + f <= n; ++p) {
      int q = n - f - p;
      Graph member = make_family({Family::FullPlusIndependents, {f, p, q}});
      if (are_isomorphic(g, member, iso_cap)) {
        if (f_out) *f_out = f;
        if (p_out) *p_out = p;
        if (q_out) *q_out = q;
        return true;
      }
    }
  return false;
}

namespace {

struct GraphVerdict {
  bool no_cpartition = false;
  std::optional<Counterexample> cex;
};

std::string fmt_opt(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "none";
}

int ceil_div2(int a) { return a >= 0 ? (a + 1) / 2 : -((-a) / 2); }

GraphVerdict check_one(CheckId id, const Graph& g, const CheckOptions& o) {
  GraphVerdict verdict;
  auto cex = [&](const std::string& observed, const std::string& expected) {
    verdict.cex = Counterexample{encode_graph(g, GraphFormat::Graph6), observed,
                                 expected};
  };

  switch (id) {
    case CheckId::T31: {
      SearchOutcome c = coalition_count(g, o.partition_cap);
      if (!c.value) {
        verdict.no_cpartition = true;
        break;
      }
      int d = domatic_number(g, o.domatic_cap).d;
      int f = vertex_roles(g).full_count;
      if (*c.value < d - f)
        cex("c=" + std::to_string(*c.value) + ",d=" + std::to_string(d) +
                ",f=" + std::to_string(f),
            "c>=d-f");
      break;
    }
    case CheckId::T32: {
      SearchOutcome c = coalition_count(g, o.partition_cap);
      if (!c.value) {
        verdict.no_cpartition = true;
        break;
      }
      int alpha = independence_number(g, o.alpha_cap);
      int f = vertex_roles(g).full_count;
      bool lhs = *c.value == 1;
      bool rhs = alpha == g.n() - f;
      if (lhs != rhs)
        cex("c=" + std::to_string(*c.value) + ",alpha=" + std::to_string(alpha) +
                ",n=" + std::to_string(g.n()) + ",f=" + std::to_string(f),
            "(c==1)<=>(alpha==n-f)");
      break;
    }
    case CheckId::COR: {
      SearchOutcome c = coalition_count(g, o.partition_cap);
      if (!c.value) {
        verdict.no_cpartition = true;
        break;
      }
      int f = 0, p = 0, q = 0;
      bool member = is_full_plus_independents_member(g, &f, &p, &q, o.iso_cap);
      bool lhs = *c.value == 1;
      if (lhs != member) {
        std::string observed = "c=" + std::to_string(*c.value) +
                               ",member=" + (member ? "true" : "false");
        if (member) {
          observed += ",f_param=" + std::to_string(f) +
                      ",p=" + std::to_string(p) + ",q=" + std::to_string(q) +
                      ",full_count=" +
                      std::to_string(vertex_roles(g).full_count);
        }
        cex(observed, "(c==1)<=>member");
      }
      break;
    }
    case CheckId::T34: {
      SearchOutcome cn = coalition_number(g, o.partition_cap);
      if (!cn.value) {
        verdict.no_cpartition = true;
        break;
      }
      int s = *cn.value;
      if (s < 2) break;  // outside the hypothesis
      SearchOutcome cc = coalition_count(g, o.partition_cap);
      Graph expected_cg =
          combine(make_family({Family::Complete, {1}}),
                  make_family({Family::Star, {s - 2}}), CombineMode::Union);
      auto shape_ok = [&](const Partition& w) {
        return are_isomorphic(coalition_graph(g, w).cg, expected_cg, o.iso_cap);
      };
      bool count_ok = cc.value && *cc.value == s - 2;
      bool cg_ok = shape_ok(*cn.witness);
      if (count_ok && cg_ok && o.t34_all_witnesses) {
        for_each_valid_partition(
            g,
            [&](const Partition& p, const PartitionAssessment&) {
              if (p.size() == s && cg_ok && !shape_ok(p)) cg_ok = false;
            },
            o.partition_cap);
      }
      if (!count_ok || !cg_ok)
        cex("C=" + std::to_string(s) + ",c=" + fmt_opt(cc.value) +
                ",cg_shape_ok=" + (cg_ok ? "true" : "false"),
            "c==C-2&&CG~K_1uK_{1,s-2}");
      break;
    }
    case CheckId::R35: {
      SearchOutcome cn = coalition_number(g, o.partition_cap);
      if (!cn.value) {
        verdict.no_cpartition = true;
        break;
      }
      SearchOutcome cc = coalition_count(g, o.partition_cap);
      int f = vertex_roles(g).full_count;
      int bound = ceil_div2(*cn.value - f);
      if (*cc.value < bound)
        cex("c=" + std::to_string(*cc.value) + ",C=" + std::to_string(*cn.value) +
                ",f=" + std::to_string(f),
            "c>=ceil((C-f)/2)");
      break;
    }
    case CheckId::T36: {
      SearchOutcome cc = coalition_count(g, o.partition_cap);
      if (!cc.value) {
        verdict.no_cpartition = true;
        break;
      }
      int alpha = independence_number(g, o.alpha_cap);
      if (*cc.value < alpha)
        cex("c=" + std::to_string(*cc.value) + ",alpha=" + std::to_string(alpha),
            "c>=alpha");
      break;
    }
    case CheckId::HSTAR: {
      try {
        HStarResult r = build_hstar(g, o.host_cap);
        AuditReport a = validate_hstar(g, r);
        bool ok = a.partition_valid && a.cg_matches && a.corrected_size_match;
        if (!ok)
          cex(std::string("case=") + to_string(r.case_tag) +
                  ",partition_valid=" + (a.partition_valid ? "true" : "false") +
                  ",cg_matches=" + (a.cg_matches ? "true" : "false") +
                  ",size_ok=" + (a.corrected_size_match ? "true" : "false"),
              "partition_valid&&cg_matches&&order/size==corrected_table");
      } catch (const Error& e) {
        cex(std::string("build_failed=") + e.what(),
            "construction must not fail");
      }
      break;
    }
    case CheckId::ORACLE: {
      SearchOutcome cn = coalition_number(g, o.partition_cap);
      SearchOutcome cc = coalition_count(g, o.partition_cap);
      NaiveSearchResult naive = naive_coalition_search(g);
      if (!cn.value) verdict.no_cpartition = true;
      if (cn.value != naive.max_parts || cc.value != naive.max_pairs)
        cex("C=" + fmt_opt(cn.value) + ",c=" + fmt_opt(cc.value) +
                ",naive_C=" + fmt_opt(naive.max_parts) +
                ",naive_c=" + fmt_opt(naive.max_pairs),
            "engine==naive");
      break;
    }
  }
  return verdict;
}

void parallel_for(size_t count, int jobs,
                  const std::function<void(size_t)>& body) {
  if (jobs <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
      body(i);
  };
  std::vector<std::thread> pool;
  int threads = std::min<int>(jobs, (int)count);
  pool.reserve(threads);
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace

TheoremReport run_check(CheckId id, const UniverseSpec& spec,
                        const CheckOptions& opts) {
  TheoremReport rep;
  rep.check = id;
  rep.filter = natural_filter(id);
  rep.universe =
      std::string(spec.mode == EnumMode::Labeled ? "labeled" : "iso") +
      ":n<=" + std::to_string(spec.max_n);

  std::vector<Graph> graphs;
  for (int n = 1; n <= spec.max_n; ++n) {
    UniverseSpec layer{n, spec.mode, rep.filter};
    for (Graph& g : build_universe(layer, opts.enum_cap))
      graphs.push_back(std::move(g));
  }

  std::vector<GraphVerdict> verdicts(graphs.size());
  parallel_for(graphs.size(), opts.jobs,
               [&](size_t i) { verdicts[i] = check_one(id, graphs[i], opts); });

  rep.graphs_checked = (long long)graphs.size();
  for (const GraphVerdict& v : verdicts) {
    if (v.no_cpartition) ++rep.no_cpartition;
    if (v.cex) rep.counterexamples.push_back(*v.cex);
  }
  rep.passed = rep.counterexamples.empty();
  return rep;
}

std::string report_to_text(const TheoremReport& r) {
  std::string s = std::string("check=") + to_string(r.check) +
                  " universe=" + r.universe + " filter=" + to_string(r.filter) +
                  "\n";
  for (const Counterexample& c : r.counterexamples)
    s += "g6=" + c.g6 + " observed=" + c.observed + " expected=" + c.expected +
         "\n";
  s += "no_cpartition=" + std::to_string(r.no_cpartition) + "\n";
  s += "checked=" + std::to_string(r.graphs_checked) +
       " counterexamples=" + std::to_string(r.counterexamples.size()) +
       " passed=" + (r.passed ? "true" : "false") + "\n";
  return s;
}

}  // namespace coal

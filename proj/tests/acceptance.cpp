// Acceptance suite: runs every acceptance criterion and prints one pass/fail
// line per criterion. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "coal/coalition.hpp"
#include "coal/codec.hpp"
#include "coal/enumerate.hpp"
#include "coal/harness.hpp"
#include "coal/hstar.hpp"
#include "coal/iso.hpp"
#include "test_util.hpp"

using namespace coal;

namespace {

struct Failure {
  std::string detail;
};

struct Checker {
  std::vector<std::string> failures;
  void require(bool ok, const std::string& detail) {
    if (!ok) failures.push_back(detail);
  }
};

Graph with_isolates(const Graph& g, int t) {
  return combine(g, testutil::empty_graph(t), CombineMode::Union);
}

// 1. Known-value regression: exact integers on the pinned families.
void criterion1(Checker& c) {
  c.require(coalition_number(testutil::cycle(4)).value == 4, "C(C_4) != 4");
  c.require(coalition_count(testutil::cycle(4)).value == 6, "c(C_4) != 6");
  c.require(coalition_number(testutil::path(4)).value == 4, "C(P_4) != 4");
  c.require(coalition_count(testutil::path(4)).value == 4, "c(P_4) != 4");
  for (int n = 3; n <= 8; ++n) {
    c.require(coalition_number(testutil::complete(n)).value == n,
              "C(K_" + std::to_string(n) + ") != n");
    c.require(coalition_count(testutil::complete(n)).value == 0,
              "c(K_" + std::to_string(n) + ") != 0");
  }
  c.require(coalition_number(testutil::path(6)).value == 5, "C(P_6) != 5");
  c.require(coalition_count(testutil::path(6)).value == 5, "c(P_6) != 5");
  for (int m = 2; m <= 6; ++m) {
    Graph star = testutil::star(m);
    c.require(coalition_count(star).value == 1,
              "c(K_{1," + std::to_string(m) + "}) != 1");
    c.require(domatic_number(star).d == 2,
              "d(K_{1," + std::to_string(m) + "}) != 2");
    c.require(vertex_roles(star).full_count == 1,
              "f(K_{1," + std::to_string(m) + "}) != 1");
  }
}

// 2. Oracle equivalence on all labeled graphs with n <= 5.
void criterion2(Checker& c) {
  TheoremReport r =
      run_check(CheckId::ORACLE, {5, EnumMode::Labeled, UniverseFilter::All});
  c.require(r.graphs_checked == 1 + 2 + 8 + 64 + 1024,
            "expected 1099 labeled graphs, saw " +
                std::to_string(r.graphs_checked));
  c.require(r.passed, "engine disagrees with the naive enumerator on " +
                          std::to_string(r.counterexamples.size()) + " graphs");
  for (size_t i = 0; i < r.counterexamples.size() && i < 3; ++i)
    c.require(false, "mismatch at g6=" + r.counterexamples[i].g6 + " " +
                         r.counterexamples[i].observed);
}

// 3. Theorem sweeps over all classes n <= 6.
void criterion3(Checker& c) {
  UniverseSpec spec{6, EnumMode::UpToIsomorphism, UniverseFilter::All};
  CheckOptions opts;
  opts.t34_all_witnesses = true;
  for (CheckId id :
       {CheckId::T31, CheckId::T32, CheckId::R35, CheckId::T36, CheckId::T34}) {
    TheoremReport r = run_check(id, spec, opts);
    c.require(r.passed, std::string(to_string(id)) + " failed with " +
                            std::to_string(r.counterexamples.size()) +
                            " counterexamples");
    for (size_t i = 0; i < r.counterexamples.size() && i < 3; ++i)
      c.require(false, std::string(to_string(id)) + " counterexample g6=" +
                           r.counterexamples[i].g6 + " " +
                           r.counterexamples[i].observed);
  }
}

// 4. Host construction audits green on every even-complete and incomplete
// target with n(G') <= 5 and up to two isolates.
void criterion4(Checker& c) {
  auto audit_green = [&](const Graph& target, const std::string& label) {
    HStarResult r = build_hstar(target);
    AuditReport a = validate_hstar(target, r);
    bool ok = a.partition_valid && a.cg_matches &&
              r.actual_order == r.predicted.order &&
              r.actual_size == r.predicted.size_corrected;
    std::string why = ok ? "" : (": " + (a.violations.empty()
                                             ? std::string("(no detail)")
                                             : a.violations.front()));
    c.require(ok, label + " audit not green" + why);
  };
  for (int n = 2; n <= 5; ++n)
    for (const Graph& gp : all_graphs(n, EnumMode::UpToIsomorphism)) {
      if (!vertex_roles(gp).isolated.empty()) continue;
      if (gp.m() == n * (n - 1) / 2) continue;  // K_n handled below
      for (int t = 0; t <= 2; ++t)
        audit_green(with_isolates(gp, t),
                    "case2 n'=" + std::to_string(n) + " g6=" +
                        encode_graph(gp, GraphFormat::Graph6) + " t=" +
                        std::to_string(t));
    }
  for (int n : {2, 4, 6})
    for (int t = 0; t <= 2; ++t)
      audit_green(with_isolates(testutil::complete(n), t),
                  "case1even K_" + std::to_string(n) + " t=" +
                      std::to_string(t));
}

// 5. Case 1 odd: the audit is definitive, the build never crashes, and the
// outcome matches the recorded discrepancy: the part holding the helper
// vertex dominates, so the partition is invalid and the coalition graph
// misses the target.
void criterion5(Checker& c) {
  for (int n : {3, 5})
    for (int t : {0, 1}) {
      std::string label = "K_" + std::to_string(n) + " t=" + std::to_string(t);
      try {
        Graph target = with_isolates(testutil::complete(n), t);
        HStarResult r = build_hstar(target);
        c.require(r.case_tag == HStarCase::Case1Odd, label + ": wrong case");
        AuditReport a = validate_hstar(target, r);
        c.require(!a.partition_valid,
                  label + ": partition unexpectedly valid");
        c.require(!a.cg_matches, label + ": coalition graph matched anyway");
        bool names_u_part = false;
        for (const std::string& v : a.violations)
          if (v.find("part " + std::to_string(r.u_part)) != std::string::npos &&
              v.find("dominating") != std::string::npos)
            names_u_part = true;
        c.require(names_u_part,
                  label + ": no violation names the helper part");
        c.require(a.corrected_size_match, label + ": size prediction broken");
      } catch (const Error& e) {
        c.require(false, label + ": build crashed: " + e.what());
      }
    }
}

// 6. Property suites: codec round trips, relabeling invariance, the derived
// c-partition bound, and the class counts.
void criterion6(Checker& c) {
  for (int n = 0; n <= 6; ++n)
    for (const Graph& g : all_graphs(n, EnumMode::UpToIsomorphism)) {
      c.require(parse_graph(encode_graph(g, GraphFormat::EdgeList),
                            GraphFormat::EdgeList) == g,
                "edge_list round trip failed at n=" + std::to_string(n));
      c.require(parse_graph(encode_graph(g, GraphFormat::Graph6),
                            GraphFormat::Graph6) == g,
                "graph6 round trip failed at n=" + std::to_string(n));
    }

  std::mt19937 rng(20240817);
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : all_graphs(n, EnumMode::UpToIsomorphism)) {
      InvariantBundle base = invariant_bundle(g);
      auto cn = coalition_number(g).value;
      auto cc = coalition_count(g).value;
      for (int trial = 0; trial < 20; ++trial) {
        Graph h = relabeled(g, testutil::random_perm(n, rng));
        InvariantBundle hb = invariant_bundle(h);
        bool same = hb.f == base.f && hb.delta == base.delta &&
                    hb.alpha == base.alpha && hb.domatic_d == base.domatic_d &&
                    coalition_number(h).value == cn &&
                    coalition_count(h).value == cc;
        c.require(same, "invariants changed under relabeling, g6=" +
                            encode_graph(g, GraphFormat::Graph6));
        if (!same) return;
      }
    }

  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : all_graphs(n, EnumMode::UpToIsomorphism)) {
      if (!vertex_roles(g).isolated.empty()) continue;
      DomaticDerivedPartition d = cpartition_from_domatic(g);
      PartitionAssessment a = assess_partition(g, d.partition);
      c.require(a.valid, "derived partition invalid, g6=" +
                             encode_graph(g, GraphFormat::Graph6));
      c.require(a.pair_count >= d.lower_bound,
                "derived partition below bound, g6=" +
                    encode_graph(g, GraphFormat::Graph6));
    }

  const long expected[] = {1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) {
    long count = 0;
    enumerate_graphs(n, EnumMode::UpToIsomorphism,
                     [&](const Graph&) { ++count; });
    c.require(count == expected[n - 1],
              "class count at n=" + std::to_string(n) + " is " +
                  std::to_string(count) + ", expected " +
                  std::to_string(expected[n - 1]));
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Checker&)> run;
    double budget_seconds;  // 0 = none stated
  };
  const std::vector<Criterion> criteria = {
      {"1 known-value regression", criterion1, 5},
      {"2 oracle equivalence, labeled n<=5", criterion2, 60},
      {"3 theorem sweeps, classes n<=6", criterion3, 600},
      {"4 host construction audits", criterion4, 120},
      {"5 case-1-odd discrepancy report", criterion5, 0},
      {"6 property suites", criterion6, 0},
  };

  int failed = 0;
  for (const Criterion& cr : criteria) {
    Checker checker;
    auto start = std::chrono::steady_clock::now();
    cr.run(checker);
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    if (cr.budget_seconds > 0 && secs > cr.budget_seconds)
      checker.failures.push_back("exceeded the " +
                                 std::to_string(cr.budget_seconds) +
                                 "s time budget");
    if (checker.failures.empty()) {
      std::printf("criterion %s: PASS (%.2fs)\n", cr.name, secs);
    } else {
      ++failed;
      std::printf("criterion %s: FAIL (%.2fs)\n", cr.name, secs);
      for (const std::string& f : checker.failures)
        std::printf("  - %s\n", f.c_str());
    }
  }
  return failed;
}

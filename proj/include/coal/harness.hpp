#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coal/coalition.hpp"
#include "coal/enumerate.hpp"
#include "coal/hstar.hpp"

namespace coal {

enum class UniverseFilter {
  All,
  NoIsolates,
  OneFullAndDelta1,
  SpNoFull,
  FamilyMembership,
};
const char* to_string(UniverseFilter f);

struct UniverseSpec {
  int max_n = 5;
  EnumMode mode = EnumMode::UpToIsomorphism;
  UniverseFilter filter = UniverseFilter::All;
};

// Graphs of order exactly spec.max_n passing the filter, in enumeration
// order. run_check sweeps every order 1..max_n.
std::vector<Graph> build_universe(const UniverseSpec& spec,
                                  int enum_cap = kDefaultEnumCap);

enum class CheckId { T31, T32, COR, T34, R35, T36, HSTAR, ORACLE };
const char* to_string(CheckId id);
CheckId parse_check_id(const std::string& name);
UniverseFilter natural_filter(CheckId id);

struct Counterexample {
  std::string g6;
  std::string observed;  // "k=v,..."
  std::string expected;  // the violated relation
};

struct TheoremReport {
  CheckId check = CheckId::T31;
  std::string universe;  // e.g. "iso:n<=5"
  UniverseFilter filter = UniverseFilter::All;
  long long graphs_checked = 0;
  long long no_cpartition = 0;  // graphs without any c-partition, skipped
  std::vector<Counterexample> counterexamples;
  bool passed = true;
};

struct CheckOptions {
  int jobs = 1;
  bool t34_all_witnesses = false;
  int partition_cap = kDefaultPartitionCap;
  int domatic_cap = kDefaultDomaticCap;
  int alpha_cap = kDefaultAlphaCap;
  int enum_cap = kDefaultEnumCap;
  int iso_cap = kDefaultIsoCap;
  int host_cap = kDefaultMaxN;
};

// Evaluates the check on every graph of order 1..spec.max_n in spec.mode,
// restricted to the check's natural filter. Deterministic: workers write
// per-graph results that are reduced in enumeration order.
TheoremReport run_check(CheckId id, const UniverseSpec& spec,
                        const CheckOptions& opts = {});
std::string report_to_text(const TheoremReport& r);

// Definition-direct reference used by the ORACLE check: adjacency lists, no
// bit masks, plain recursive set-partition enumeration.
struct NaiveSearchResult {
  std::optional<int> max_parts;
  std::optional<int> max_pairs;
};
NaiveSearchResult naive_coalition_search(const Graph& g);

// G isomorphic to (K_f + p*K_1) union q*K_1 for some f,p,q >= 0 summing to n.
bool is_full_plus_independents_member(const Graph& g, int* f_out = nullptr,
                                      int* p_out = nullptr,
                                      int* q_out = nullptr,
                                      int iso_cap = kDefaultIsoCap);

}  // namespace coal

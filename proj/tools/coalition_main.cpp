// coalition: exact coalition-partition analysis for small graphs.
//
// Subcommands: analyze (invariants of one graph), construct (host graph
// realizing the target as a coalition graph), cg (evaluate a partition),
// verify (sweep checks over all small graphs), formats (input grammars).
// Exit codes: 0 success / all passed, 2 check found counterexamples,
// 1 usage, parse or cap errors.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "coal/codec.hpp"
#include "coal/coalition.hpp"
#include "coal/harness.hpp"
#include "coal/hstar.hpp"
#include "coal/iso.hpp"

namespace {

struct Caps {
  int max_n = coal::kDefaultMaxN;
  int alpha = coal::kDefaultAlphaCap;
  int domatic = coal::kDefaultDomaticCap;
  int partition = coal::kDefaultPartitionCap;
  int enumeration = coal::kDefaultEnumCap;
  int iso = coal::kDefaultIsoCap;
};

Caps forced_caps() {
  Caps c;
  c.max_n = coal::kHardVertexLimit;
  c.alpha = 40;
  c.domatic = 18;
  c.partition = 18;
  c.enumeration = 10;
  c.iso = 12;
  return c;
}

struct InputOpts {
  std::string file;
  std::string g6;
  std::string family;
  std::string format = "auto";
};

coal::Graph load_graph(const InputOpts& in, const Caps& caps) {
  int sources = (!in.file.empty()) + (!in.g6.empty()) + (!in.family.empty());
  if (sources != 1)
    throw coal::Error("exactly one of --file, --g6, --family is required");
  if (!in.family.empty())
    return coal::make_family(coal::parse_family_spec(in.family), caps.max_n);
  if (!in.g6.empty())
    return coal::parse_graph(in.g6, coal::GraphFormat::Graph6, caps.max_n);
  std::ifstream f(in.file, std::ios::binary);
  if (!f) throw coal::Error("cannot open file '" + in.file + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  std::string text = buf.str();
  coal::GraphFormat fmt;
  if (in.format == "edge_list")
    fmt = coal::GraphFormat::EdgeList;
  else if (in.format == "graph6")
    fmt = coal::GraphFormat::Graph6;
  else if (in.format == "auto")
    fmt = coal::detect_format(text);
  else
    throw coal::Error("unknown format '" + in.format + "'");
  return coal::parse_graph(text, fmt, caps.max_n);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw coal::Error("cannot write to '" + out_path + "'");
  f << text;
}

std::string opt_to_string(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "none";
}

int cmd_analyze(const InputOpts& in, const Caps& caps, bool witness,
                const std::string& out_path) {
  coal::Graph g = load_graph(in, caps);
  coal::VertexRoles roles = coal::vertex_roles(g);
  coal::DomaticResult dom = coal::domatic_number(g, caps.domatic);
  int alpha = coal::independence_number(g, caps.alpha);
  coal::SearchOutcome cn = coal::coalition_number(g, caps.partition);
  coal::SearchOutcome cc = coal::coalition_count(g, caps.partition);

  std::ostringstream s;
  s << "n=" << g.n() << "\n"
    << "m=" << g.m() << "\n"
    << "f=" << roles.full_count << "\n"
    << "delta=" << roles.min_degree << "\n"
    << "alpha=" << alpha << "\n"
    << "domatic=" << dom.d << "\n"
    << "C=" << opt_to_string(cn.value) << "\n"
    << "c=" << opt_to_string(cc.value) << "\n";
  if (witness) {
    if (g.n() > 0) s << "domatic_witness=" << dom.witness.to_text() << "\n";
    if (cn.witness) s << "C_witness=" << cn.witness->to_text() << "\n";
    if (cc.witness) s << "c_witness=" << cc.witness->to_text() << "\n";
  }
  emit(s.str(), out_path);
  return 0;
}

int cmd_construct(const InputOpts& in, const Caps& caps,
                  const std::string& out_path) {
  coal::Graph target = load_graph(in, caps);
  coal::HStarResult r = coal::build_hstar(target, caps.max_n);
  coal::AuditReport a = coal::validate_hstar(target, r);

  std::ostringstream s;
  s << "case=" << coal::to_string(r.case_tag) << "\n"
    << "target_n=" << target.n() << "\n"
    << "host_n=" << r.actual_order << "\n"
    << "host_m=" << r.actual_size << "\n"
    << "host_g6=" << coal::encode_graph(r.host, coal::GraphFormat::Graph6)
    << "\n"
    << "pi_star=" << r.pi_star.to_text() << "\n";
  s << "part_targets=";
  for (size_t i = 0; i < r.part_to_target.size(); ++i)
    s << (i ? "|" : "") << r.part_to_target[i];
  s << "\n";
  s << "matching=";
  for (size_t i = 0; i < r.matching.size(); ++i)
    s << (i ? "," : "") << r.matching[i].first << "-" << r.matching[i].second;
  s << "\n";
  if (r.u_vertex >= 0)
    s << "u_vertex=" << r.u_vertex << "\n"
      << "u_part=" << r.u_part << "\n";
  for (const coal::GadgetPlacement& g : r.gadgets)
    s << "gadget=" << g.j << "-" << g.k << ":vertex=" << g.host_vertex
      << ":part=" << g.host_part << "\n";
  s << "w_vertices=";
  for (size_t i = 0; i < r.w_vertices.size(); ++i)
    s << (i ? "," : "") << r.w_vertices[i];
  s << "\n";
  s << "predicted_order=" << r.predicted.order << "\n"
    << "predicted_size_verbatim=" << r.predicted.size_verbatim << "\n"
    << "predicted_size_corrected=" << r.predicted.size_corrected << "\n"
    << "actual_order=" << r.actual_order << "\n"
    << "actual_size=" << r.actual_size << "\n"
    << "partition_valid=" << (a.partition_valid ? "true" : "false") << "\n"
    << "cg_matches=" << (a.cg_matches ? "true" : "false") << "\n"
    << "iso_matches=" << (a.iso_matches ? "true" : "false") << "\n"
    << "order_size_match_table="
    << (a.order_size_match_table ? "true" : "false") << "\n"
    << "corrected_size_match=" << (a.corrected_size_match ? "true" : "false")
    << "\n"
    << "violations=" << a.violations.size() << "\n";
  for (const std::string& v : a.violations) s << "violation=" << v << "\n";
  s << "# host edge_list\n"
    << coal::encode_graph(r.host, coal::GraphFormat::EdgeList) << "\n";
  emit(s.str(), out_path);
  return 0;
}

int cmd_cg(const InputOpts& in, const Caps& caps, const std::string& partition,
           const std::string& out_path) {
  coal::Graph g = load_graph(in, caps);
  coal::Partition p = coal::parse_partition(partition, g.n());
  coal::PartitionAssessment a = coal::assess_partition(g, p);

  std::ostringstream s;
  s << "parts=" << p.size() << "\n"
    << "valid=" << (a.valid ? "true" : "false") << "\n"
    << "pair_count=" << a.pair_count << "\n";
  for (int i = 0; i < p.size(); ++i)
    s << "part_" << i << "=" << p.part(i).to_text() << "\n";
  for (int i = 0; i < p.size(); ++i)
    s << "class_" << i << "=" << coal::to_string(a.part_class[i]) << "\n";
  if (!a.valid) {
    emit(s.str(), out_path);
    throw coal::Error("not a valid c-partition; no coalition graph");
  }
  coal::CoalitionGraphResult r = coal::coalition_graph(g, p);
  s << "cg_n=" << r.cg.n() << "\n"
    << "cg_m=" << r.cg.m() << "\n"
    << "cg_g6=" << coal::encode_graph(r.cg, coal::GraphFormat::Graph6) << "\n";
  for (auto [i, j] : r.cg.edges()) s << "edge=" << i << "," << j << "\n";
  emit(s.str(), out_path);
  return 0;
}

int cmd_verify(const std::string& check, int max_n, const std::string& mode,
               int jobs, bool all_witnesses, const Caps& caps,
               const std::string& out_path) {
  coal::UniverseSpec spec;
  spec.max_n = max_n;
  if (mode == "iso")
    spec.mode = coal::EnumMode::UpToIsomorphism;
  else if (mode == "labeled")
    spec.mode = coal::EnumMode::Labeled;
  else
    throw coal::Error("unknown mode '" + mode + "' (use iso or labeled)");
  coal::CheckOptions opts;
  opts.jobs = jobs;
  opts.t34_all_witnesses = all_witnesses;
  opts.partition_cap = caps.partition;
  opts.domatic_cap = caps.domatic;
  opts.alpha_cap = caps.alpha;
  opts.enum_cap = caps.enumeration;
  opts.iso_cap = caps.iso;
  opts.host_cap = caps.max_n;
  coal::TheoremReport rep =
      coal::run_check(coal::parse_check_id(check), spec, opts);
  emit(coal::report_to_text(rep), out_path);
  return rep.passed ? 0 : 2;
}

int cmd_formats(const std::string& out_path) {
  std::string s =
      "edge_list: first line \"n m\"; then m lines \"u v\" with vertices in\n"
      "  0..n-1, u != v, no duplicate pairs; blank lines and lines starting\n"
      "  with '#' are ignored; the encoder emits u < v.\n"
      "graph6: byte n+63 (n <= 62), then the upper-triangle adjacency bits in\n"
      "  column order (0,1),(0,2),(1,2),(0,3),... packed big-endian into 6-bit\n"
      "  groups, zero-padded, each group emitted as byte group+63.\n"
      "partition: parts separated by '|', members by ','; whitespace ignored;\n"
      "  must cover 0..n-1 exactly once; example \"0,5|1|2|3|4\".\n"
      "family: name:arg[,arg...]; path:n (n>=1), cycle:n (n>=3), complete:n,\n"
      "  star:m (K_{1,m}), empty:n, fpq:f,p,q ((K_f + p K_1) union q K_1).\n";
  emit(s, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact coalition-partition analysis for small graphs"};
  app.require_subcommand(1);

  InputOpts in;
  Caps caps;
  bool force_cap = false;
  bool witness = false;
  std::string out_path;
  std::string partition_text;
  std::string check = "ORACLE";
  std::string mode = "iso";
  int max_n = 5;
  int jobs = 1;
  bool all_witnesses = false;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--file", in.file, "graph file (edge_list or graph6)");
    cmd->add_option("--g6", in.g6, "inline graph6 string");
    cmd->add_option("--family", in.family, "family spec, e.g. cycle:4");
    cmd->add_option("--format", in.format,
                    "file format: auto|edge_list|graph6");
    cmd->add_flag("--force-cap", force_cap,
                  "raise the default size caps (acknowledges runtime)");
    cmd->add_option("--out", out_path, "write output to this file");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "invariants of one graph");
  add_input(analyze);
  analyze->add_flag("--witness", witness, "also print witness partitions");

  CLI::App* construct = app.add_subcommand(
      "construct", "host graph whose coalition graph is the target");
  add_input(construct);

  CLI::App* cg =
      app.add_subcommand("cg", "assess a partition and print its coalition graph");
  add_input(cg);
  cg->add_option("--partition", partition_text, "partition text, e.g. 0,5|1|2|3|4")
      ->required();

  CLI::App* verify = app.add_subcommand("verify", "run a sweep check");
  verify->add_option("--check", check,
                     "T31|T32|COR|T34|R35|T36|HSTAR|ORACLE")
      ->required();
  verify->add_option("--max-n", max_n, "sweep all orders 1..max-n");
  verify->add_option("--mode", mode, "iso|labeled");
  verify->add_option("--jobs", jobs, "parallel workers");
  verify->add_flag("--all-witnesses", all_witnesses,
                   "T34: check every maximum-order witness");
  verify->add_flag("--force-cap", force_cap,
                   "raise the default size caps (acknowledges runtime)");
  verify->add_option("--out", out_path, "write the report to this file");

  CLI::App* formats = app.add_subcommand("formats", "print the input grammars");
  formats->add_option("--out", out_path, "write output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (force_cap) caps = forced_caps();

  try {
    if (app.got_subcommand(analyze))
      return cmd_analyze(in, caps, witness, out_path);
    if (app.got_subcommand(construct)) return cmd_construct(in, caps, out_path);
    if (app.got_subcommand(cg)) return cmd_cg(in, caps, partition_text, out_path);
    if (app.got_subcommand(verify))
      return cmd_verify(check, max_n, mode, jobs, all_witnesses, caps, out_path);
    if (app.got_subcommand(formats)) return cmd_formats(out_path);
  } catch (const coal::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

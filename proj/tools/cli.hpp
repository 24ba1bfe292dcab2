#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "probeblock/partition_io.hpp"
#include "probeblock/probeblock.hpp"

namespace probeblock::cli {

using nlohmann::json;

enum ExitCode : int { kYes = 0, kNo = 1, kError = 2 };

/// What `check` reports. On yes the partition and added edges are set; on no
/// the refutation is.
struct CliReport {
  std::string verdict;
  std::string klass;
  VertexSet n1, n2;
  std::vector<Edge> added_edges;
  std::string stage;  // refutation stage, empty on yes
  json detail;
  std::vector<std::pair<std::string, double>> timing;
};

inline json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

inline json to_json(const CliReport& r) {
  json j;
  j["verdict"] = r.verdict;
  j["class"] = r.klass;
  if (r.verdict == "yes") {
    j["n1"] = r.n1;
    j["n2"] = r.n2;
    j["added_edges"] = edges_json(r.added_edges);
  } else {
    j["refutation"] = {{"stage", r.stage}, {"detail", r.detail}};
  }
  json t = json::object();
  for (const auto& [name, ms] : r.timing) t[name] = ms;
  j["timing"] = t;
  return j;
}

inline std::string join_vertices(const VertexSet& s) {
  std::string out;
  for (Vertex v : s) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out.empty() ? "-" : out;
}

inline void print_human(const CliReport& r, std::ostream& out) {
  out << "verdict: " << r.verdict << "\nclass: " << r.klass << "\n";
  if (r.verdict == "yes") {
    out << "n1: " << join_vertices(r.n1) << "\nn2: " << join_vertices(r.n2) << "\nadded_edges:";
    if (r.added_edges.empty()) out << " -";
    for (const Edge& e : r.added_edges) out << " " << e.u << "-" << e.v;
    out << "\n";
  } else {
    out << "refutation: " << r.stage << " " << r.detail.dump() << "\n";
  }
  out << "timing_ms:";
  for (const auto& [name, ms] : r.timing) out << " " << name << "=" << ms;
  out << "\n";
}

/// Stage name and JSON detail for a refutation.
inline std::pair<std::string, json> describe(const Refutation& r) {
  struct Visitor {
    std::pair<std::string, json> operator()(const BadBlock& b) const {
      json d = {{"kind", to_string(b.failure.kind)}, {"witness", b.failure.witness}};
      d["block"] = b.block ? json(*b.block) : json(nullptr);
      return {"kxyz", d};
    }
    std::pair<std::string, json> operator()(const ImpossibleBranch& b) const {
      return {"find-nonprobes", {{"branch", to_string(b.tag)}, {"cut_vertex", b.cut_vertex}, {"block", b.block}}};
    }
    std::pair<std::string, json> operator()(const VerificationFailed& f) const {
      return {"verify", json::array({f.pair.u, f.pair.v})};
    }
    std::pair<std::string, json> operator()(const DependentSets& d) const {
      return {"independence", {{"set", d.set}, {"pair", {d.pair.u, d.pair.v}}}};
    }
    std::pair<std::string, json> operator()(const Exhausted& e) const { return {"exhaustive", {{"k", e.k}}}; }
  };
  return std::visit(Visitor{}, r);
}

inline CliReport report_of(const std::string& klass, const RecognitionOutcome& o) {
  CliReport r;
  r.klass = klass;
  if (o.accepted()) {
    r.verdict = "yes";
    r.n1 = o.certificate->partition.n1;
    r.n2 = o.certificate->partition.n2;
    r.added_edges = o.certificate->embedding.added;
  } else {
    r.verdict = "no";
    std::tie(r.stage, r.detail) = describe(*o.refutation);
  }
  return r;
}

inline const std::vector<std::string>& check_classes() {
  static const std::vector<std::string> names{"block", "complete-split", "2probe-complete", "probe-block", "2probe-block"};
  return names;
}

/// Runs one `check`. Throws DomainError for a partition the class cannot use.
inline CliReport check(const Graph& g, const std::string& klass, const std::optional<ProbePartition>& partition) {
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  auto total = [&](CliReport r) {
    r.timing.emplace_back("total", detail::millis_since(t0));
    return r;
  };
  if ((klass == "block" || klass == "complete-split") && partition) {
    throw DomainError("--partition does not apply to class " + klass);
  }
  if (klass == "block") {
    const BlockGraphCheck c = is_block_graph(g);
    CliReport r;
    r.klass = klass;
    if (c.is_block_graph) {
      r.verdict = "yes";
    } else {
      r.verdict = "no";
      r.stage = "block-clique";
      r.detail = json::array({c.witness->u, c.witness->v});
    }
    return total(std::move(r));
  }
  if (klass == "complete-split") {
    const auto split = complete_split(g);
    CliReport r;
    r.klass = klass;
    if (const auto* p = std::get_if<SplitPartition>(&split)) {
      r.verdict = "yes";
      r.n1 = p->independent;
    } else {
      const Edge e = std::get<Edge>(split);
      r.verdict = "no";
      r.stage = "independence";
      r.detail = {{"set", 1}, {"pair", {e.u, e.v}}};
    }
    return total(std::move(r));
  }
  if (klass == "2probe-complete") {
    return total(report_of(klass, partition ? verify_partitioned(g, *partition, Target::complete)
                                            : recognize_2probe_complete(g)));
  }
  if (klass == "probe-block") {
    if (partition && !partition->n2.empty()) throw DomainError("class probe-block takes N2 = []");
    return total(report_of(klass, partition ? verify_partitioned(g, *partition, Target::block) : recognize_probe_block(g)));
  }
  if (klass == "2probe-block") {
    if (partition) return total(report_of(klass, verify_partitioned(g, *partition, Target::block)));
    StageTimings st;
    CliReport r = report_of(klass, recognize_2probe_block(g, &st));
    r.timing = {{"decomposition", st.decomposition},
                {"structure", st.structure},
                {"find_nonprobes", st.find_nonprobes},
                {"verify", st.verify}};
    return total(std::move(r));
  }
  throw DomainError("unknown class: " + klass);
}

/// Brute-force verdict for `oracle --class`.
inline RecognitionOutcome oracle(const Graph& g, const std::string& klass) {
  if (klass == "complete-split") return brute_kprobe(g, 1, Target::complete);
  if (klass == "2probe-complete") return brute_kprobe(g, 2, Target::complete);
  if (klass == "probe-block") return brute_kprobe(g, 1, Target::block);
  if (klass == "2probe-block") return brute_kprobe(g, 2, Target::block);
  throw DomainError("oracle has no class " + klass);
}

inline std::vector<Vertex> parse_sizes(const std::string& list) {
  std::vector<Vertex> sizes;
  std::stringstream in(list);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    long long v = 0;
    if (!detail::parse_int(tok, v) || v < 1 || v > INT32_MAX) throw DomainError("bad size in --sizes: " + tok);
    sizes.push_back(static_cast<Vertex>(v));
  }
  if (sizes.empty()) throw DomainError("--sizes is empty");
  return sizes;
}

inline void emit(std::ostream& out, bool as_json, const CliReport& r) {
  if (as_json) {
    out << to_json(r).dump() << "\n";
  } else {
    print_human(r, out);
  }
}

/// Entry point shared by the executable and the tests. args excludes the
/// program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Recognition of probe block graphs and related classes", "probeblock"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit JSON");

  std::string graph_path, klass, partition_path, family, mode = "diamond-c4", kind = "plant2", sizes, format = "el",
                                                          partition_out;
  GenSpec spec;
  double p = 0.5;
  int repeat = 3;

  auto* check_cmd = app.add_subcommand("check", "Recognize a graph class");
  check_cmd->add_option("--class", klass, "Graph class")->required()->check(CLI::IsMember(check_classes()));
  check_cmd->add_option("--partition", partition_path, "Partition JSON {\"N1\": [...], \"N2\": [...]}");
  check_cmd->add_option("graph", graph_path, "Graph file (.el or .g6)")->required();
  check_cmd->add_flag("--json", as_json, "Emit JSON");

  auto* witness_cmd = app.add_subcommand("witness", "Find an induced forbidden pattern");
  witness_cmd->add_option("--family", family, "probe-block, 2probe-block-blocks, 2probe-block-gluing, dh, ptolemaic")
      ->required();
  witness_cmd->add_option("graph", graph_path, "Graph file")->required();
  witness_cmd->add_flag("--json", as_json, "Emit JSON");

  auto* enhance_cmd = app.add_subcommand("enhance", "Add the forced edges of a partition");
  enhance_cmd->add_option("--mode", mode, "diamond or diamond-c4")->check(CLI::IsMember({"diamond", "diamond-c4"}));
  enhance_cmd->add_option("--partition", partition_path, "Partition JSON")->required();
  enhance_cmd->add_option("graph", graph_path, "Graph file")->required();
  enhance_cmd->add_flag("--json", as_json, "Emit JSON");

  auto* generate_cmd = app.add_subcommand("generate", "Write a random instance to standard output");
  generate_cmd->add_option("--kind", kind, "block, plant1, plant2 or gnp")
      ->required()
      ->check(CLI::IsMember({"block", "plant1", "plant2", "gnp"}));
  generate_cmd->add_option("--n", spec.n, "Order")->required()->check(CLI::PositiveNumber);
  generate_cmd->add_option("--seed", spec.seed, "Seed")->required();
  generate_cmd->add_option("--p", p, "Edge probability (gnp)")->check(CLI::Range(0.0, 1.0));
  generate_cmd->add_option("--min-block", spec.min_block, "Smallest block");
  generate_cmd->add_option("--max-block", spec.max_block, "Largest block");
  generate_cmd->add_option("--blocks-per-cut", spec.blocks_per_cut, "Expected blocks at a cut vertex");
  generate_cmd->add_option("--draft", spec.draft_fraction, "Chance a block vertex becomes a non-probe");
  generate_cmd->add_option("--both", spec.both_fraction, "Chance a non-probe lands in N1 and N2");
  generate_cmd->add_option("--format", format, "el or g6")->check(CLI::IsMember({"el", "g6"}));
  generate_cmd->add_option("--partition-out", partition_out, "Write the planted partition here");

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force verdict (small graphs)");
  oracle_cmd->add_option("--class", klass, "complete-split, 2probe-complete, probe-block, 2probe-block")
      ->required()
      ->check(CLI::IsMember({"complete-split", "2probe-complete", "probe-block", "2probe-block"}));
  oracle_cmd->add_option("graph", graph_path, "Graph file")->required();
  oracle_cmd->add_flag("--json", as_json, "Emit JSON");

  auto* bench_cmd = app.add_subcommand("bench", "Time 2-probe block recognition on planted instances (CSV)");
  bench_cmd->add_option("--sizes", sizes, "Comma-separated orders")->required();
  bench_cmd->add_option("--seed", spec.seed, "Seed")->required();
  bench_cmd->add_option("--repeat", repeat, "Runs per size; the fastest is reported")->check(CLI::PositiveNumber);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kYes;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kYes;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kError;
  }

  try {
    if (check_cmd->parsed()) {
      const Graph g = read_graph_file(graph_path);
      std::optional<ProbePartition> part;
      if (!partition_path.empty()) part = read_partition_file(partition_path);
      const CliReport r = check(g, klass, part);
      emit(out, as_json, r);
      return r.verdict == "yes" ? kYes : kNo;
    }
    if (witness_cmd->parsed()) {
      const Family f = parse_family(family);
      const Graph g = read_graph_file(graph_path);
      const auto w = forbidden_witness(g, f);
      if (as_json) {
        json j = {{"family", family}, {"found", w.has_value()}};
        if (w) j["pattern"] = w->pattern, j["mapping"] = w->mapping;
        out << j.dump() << "\n";
      } else if (w) {
        out << "witness: " << w->pattern << " at " << join_vertices(normalized(w->mapping)) << "\nmapping:";
        for (Vertex v : w->mapping) out << " " << v;
        out << "\n";
      } else {
        out << "no " << family << " pattern found\n";
      }
      return w ? kYes : kNo;
    }
    if (enhance_cmd->parsed()) {
      const Graph g = read_graph_file(graph_path);
      const ProbePartition part = read_partition_file(partition_path);
      const Embedding e = enhanced_graph(g, part.n1, part.n2,
                                         mode == "diamond" ? EnhanceMode::diamond : EnhanceMode::diamond_and_c4);
      const bool block = is_block_graph(e.result).is_block_graph;
      if (as_json) {
        out << json{{"added_edges", edges_json(e.added)}, {"is_block_graph", block}}.dump() << "\n";
      } else {
        out << "added_edges:";
        if (e.added.empty()) out << " -";
        for (const Edge& a : e.added) out << " " << a.u << "-" << a.v;
        out << "\nis_block_graph: " << (block ? "yes" : "no") << "\n";
      }
      return kYes;
    }
    if (generate_cmd->parsed()) {
      const GraphFormat fmt = format == "g6" ? GraphFormat::graph6 : GraphFormat::edge_list;
      if (kind == "gnp" || kind == "block") {
        if (!partition_out.empty()) throw DomainError("--partition-out needs a planted kind");
        out << serialize(kind == "gnp" ? random_graph(spec.n, p, spec.seed) : random_block_graph(spec), fmt);
        return kYes;
      }
      const PlantedInstance inst = plant(kind == "plant1" ? 1 : 2, spec);
      if (!partition_out.empty()) {
        std::ofstream f(partition_out);
        if (!f) throw std::runtime_error("cannot write " + partition_out);
        f << probeblock::to_json(inst.partition) << "\n";
      }
      out << serialize(inst.graph, fmt);
      return kYes;
    }
    if (oracle_cmd->parsed()) {
      const Graph g = read_graph_file(graph_path);
      const auto t0 = std::chrono::steady_clock::now();
      CliReport r = report_of(klass, oracle(g, klass));
      r.timing.emplace_back("total", detail::millis_since(t0));
      emit(out, as_json, r);
      return r.verdict == "yes" ? kYes : kNo;
    }
    if (bench_cmd->parsed()) {
      out << "n,m,millis,verdict\n";
      for (Vertex n : parse_sizes(sizes)) {
        GenSpec s = spec;
        s.n = n;
        const Graph g = plant(2, s).graph;
        double best = 0;
        bool accepted = false;
        for (int i = 0; i < repeat; ++i) {
          const auto t0 = std::chrono::steady_clock::now();
          accepted = recognize_2probe_block(g).accepted();
          const double ms = detail::millis_since(t0);
          best = i == 0 ? ms : std::min(best, ms);
        }
        out << n << "," << g.size() << "," << best << "," << (accepted ? "yes" : "no") << "\n";
      }
      return kYes;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace probeblock::cli

#include "nutgraph/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nutgraph/construction.hpp"
#include "nutgraph/coverage.hpp"
#include "nutgraph/graph_io.hpp"
#include "nutgraph/nut_verify.hpp"
#include "nutgraph/sieve.hpp"
#include "nutgraph/tables.hpp"

namespace nutgraph {
namespace {

using nlohmann::json;

constexpr const char* kSchema = "nutgraph-cli/1";

// Input problems surfaced as exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json tuple_json(const ParameterTuple& t) { return json::array({t.n1, t.k1, t.d1, t.n2, t.k2, t.d2}); }

json certificate_json(const NutCertificate& c) {
  json kernel = nullptr;
  if (c.kernel) {
    kernel = json::array();
    for (const auto& x : *c.kernel) kernel.push_back(format_rational(x));
  }
  return {{"order", c.order},
          {"connected", c.connected},
          {"nullity", c.nullity},
          {"kernel", kernel},
          {"min_abs_entry", format_rational(c.min_abs_entry)},
          {"is_nut", c.is_nut},
          {"method", to_string(c.method)}};
}

json symmetry_json(const SymmetryCertificate& c) {
  return {{"deg_V", c.deg_v},
          {"deg_U", c.deg_u},
          {"constructed_orbits", c.constructed_orbits},
          {"certified_2_3", c.certified_2_3},
          {"reason", c.reason}};
}

json prediction_json(const TheoremKPrediction& p) { return {{"verdict", to_string(p.verdict)}, {"reasons", p.reasons}}; }

json witness_json(const SplitWitness& w) {
  return {{"m", w.m},         {"t", w.t},         {"a", w.a},
          {"kappa", w.kappa}, {"v_m", w.v_m},     {"v_t", w.v_t},
          {"m_block", format(w.m_factorization)}, {"t_block", format(w.t_factorization)}};
}

std::string render_graph(const MultiGraph& g, const std::string& fmt) {
  if (fmt == "graph6") {
    if (g.has_loops()) throw UsageError("graph6 cannot encode loops");
    return to_graph6(g) + "\n";
  }
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

// Writes the graph to `path` when given, otherwise embeds it in the document.
void emit_graph(json& doc, const MultiGraph& g, const std::string& fmt, const std::string& path) {
  const std::string text = render_graph(g, fmt);
  doc["format"] = fmt;
  if (path.empty()) {
    doc["graph"] = text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
  doc["out"] = path;
}

std::vector<std::uint64_t> parse_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw UsageError("bad list element '" + item + "'");
    out.push_back(v);
  }
  return out;
}

void load_cache_if_present(CoverageEngine& engine, const std::string& path) {
  if (path.empty() || !std::filesystem::exists(path)) return;
  std::ifstream in(path);
  engine.load_cache(in);
}

void save_cache(CoverageEngine& engine, const std::string& path) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write cache " + path);
  engine.save_cache(out);
}

struct Options {
  std::string spec_path, graph_path, out_path, format = "edgelist", cache_path, checkpoints, report_format = "csv";
  std::uint64_t n = 0, order = 0, s = 0, a = 0, up_to = 0;
  std::size_t partition = 0;
  std::string kappa;
  int table = 0;
  unsigned jobs = 1;
  bool verify = false, slow = false;
  std::string gallery_id;
};

int cmd_build(const Options& o, json& doc) {
  const std::string base = std::filesystem::path(o.spec_path).parent_path().string();
  const MergeSpec spec = realize(read_spec_file(o.spec_path), base.empty() ? "." : base);
  const MergedGraph merged = merge(spec);
  doc["order"] = merged.graph.order();
  doc["edges"] = merged.graph.edge_count();
  doc["partition"] = merged.partition.size_v();
  doc["tuple"] = merged.bi_regular ? tuple_json(merged.tuple) : json(nullptr);
  doc["adjusted"] = merged.adjusted;
  emit_graph(doc, merged.graph, o.format, o.out_path);
  return kExitOk;
}

int cmd_verify(const Options& o, json& doc) {
  const MultiGraph g = read_edge_list_file(o.graph_path);
  if (g.has_loops()) throw UsageError("graph has loops; nut graphs are simple");
  NutCertificate cert;
  if (o.partition > 0) {
    const Bipartition part = Bipartition::prefix(g.order(), std::min(o.partition, g.order()));
    try {
      const ParameterTuple t = extract_tuple(g, part);
      doc["tuple"] = tuple_json(t);
      cert = is_nut(g, part, t);
      doc["symmetry"] = symmetry_json(certify_2_3(t, true));
    } catch (const NotBiRegular&) {
      doc["tuple"] = nullptr;
      doc["symmetry"] = nullptr;
      cert = is_nut(g);
    }
  } else {
    cert = is_nut(g);
  }
  doc["certificate"] = certificate_json(cert);
  return cert.is_nut ? kExitOk : kExitNegative;
}

int cmd_table(const Options& o, json& doc) {
  if (o.table < 1 || o.table > 3) throw UsageError("table must be 1, 2 or 3");
  std::uint64_t n = o.n;
  if (o.table == 3) {
    if (n != 0) throw UsageError("table 3 rows fix their own n");
  } else {
    if (n == 0) n = default_table_n(o.table);
    if (!admissible_table_n(o.table, n)) throw UsageError("n = " + std::to_string(n) + " is not admissible");
  }
  doc["table"] = o.table;
  if (o.table != 3) doc["n"] = n;
  json rows = json::array();
  bool all_pass = true;
  for (const TableRow& row : table_rows(o.table)) {
    const std::uint64_t rn = o.table == 3 ? row.n : n;
    json r{{"s", row.s},         {"n", rn},          {"order", rn * row.s},  {"m", row.m},
           {"t", row.t},         {"a", row.a},       {"kappa", row.kappa},   {"m_block", row.m_block},
           {"t_block", row.t_block}, {"k1", row.k1}, {"k2", row.k2},
           {"spec", row_spec_text(row, rn).to_text()}};
    if (o.verify) {
      if (rn * row.s > 1000 && !o.slow) {
        r["verified"] = "skipped";
      } else {
        const RowCheck c = check_row(row, rn);
        r["verified"] = c.pass ? "pass" : "fail";
        r["k_match"] = c.k_match;
        r["tuple"] = tuple_json(c.spec.merged.tuple);
        r["prediction"] = prediction_json(c.spec.prediction);
        r["is_nut"] = c.spec.nut.is_nut;
        r["method"] = to_string(c.spec.nut.method);
        r["symmetry"] = symmetry_json(c.spec.symmetry);
        all_pass = all_pass && c.pass;
      }
    }
    rows.push_back(std::move(r));
  }
  doc["rows"] = rows;
  if (o.verify) doc["all_pass"] = all_pass;
  return all_pass ? kExitOk : kExitNegative;
}

int cmd_cover(const Options& o, json& doc) {
  const std::uint64_t order = o.order;
  if (order < 9 || order % 2 == 0 || is_prime(order)) throw UsageError("order must be an odd non-prime >= 9");
  CoverageEngine engine;
  load_cache_if_present(engine, o.cache_path);
  const auto w = engine.cover(order);
  save_cache(engine, o.cache_path);
  doc["order"] = order;
  doc["covered"] = w.has_value();
  if (!w) {
    doc["corollary"] = nullptr;
    return kExitNegative;
  }
  doc["corollary"] = to_string(w->corollary);
  doc["n"] = w->n;
  doc["witness"] = witness_json(w->split);
  doc["spec"] = witness_to_spec_text(w->split, w->n).to_text();
  return kExitOk;
}

int cmd_split(const Options& o, json& doc) {
  if (o.s < 3 || o.s % 2 == 0) throw UsageError("s must be odd and at least 3");
  if (o.a == 0 || o.a % 2 != 0) throw UsageError("a must be even");
  std::vector<std::uint64_t> kappas = o.kappa.empty() ? std::vector<std::uint64_t>{o.a, o.a * o.a} : parse_list(o.kappa);
  for (auto k : kappas) {
    if (k != o.a && k != o.a * o.a) throw UsageError("kappa must be a or a^2");
  }
  CoverageEngine engine;
  const auto w = engine.find_split(o.s, o.a, kappas);
  doc["s"] = o.s;
  doc["a"] = o.a;
  doc["kappas"] = kappas;
  doc["witness"] = w ? witness_json(*w) : json(nullptr);
  return w ? kExitOk : kExitNegative;
}

int cmd_report(const Options& o, json& doc) {
  if (o.up_to < 9) throw UsageError("--up-to must be at least 9");
  std::vector<std::uint64_t> checkpoints = o.checkpoints.empty() ? default_checkpoints() : parse_list(o.checkpoints);
  CoverageEngine engine;
  load_cache_if_present(engine, o.cache_path);
  const CoverageReport rep = engine.report(o.up_to, checkpoints, o.jobs);
  save_cache(engine, o.cache_path);
  json rows = json::array();
  for (const auto& r : rep.rows) rows.push_back({{"bound", r.bound}, {"X", r.x}, {"X1", r.x1}, {"X2", r.x2}, {"X3", r.x3}});
  doc["bound"] = rep.bound;
  doc["rows"] = rows;
  doc["remaining"] = rep.remaining;
  std::ostringstream csv;
  write_report_csv(csv, rep);
  doc["csv"] = csv.str();
  if (!o.out_path.empty()) {
    std::ofstream file(o.out_path);
    if (!file) throw UsageError("cannot write " + o.out_path);
    if (o.report_format == "json") {
      write_report_json(file, rep);
    } else {
      file << csv.str();
    }
    doc["out"] = o.out_path;
  }
  return kExitOk;
}

int cmd_gallery(const Options& o, json& doc) {
  const auto id = parse_gallery_id(o.gallery_id);
  if (!id) throw UsageError("unknown gallery graph '" + o.gallery_id + "'");
  const GalleryGraph gg = gallery(*id);
  doc["id"] = to_string(*id);
  doc["order"] = gg.graph.order();
  doc["tuple"] = tuple_json(gg.tuple);
  emit_graph(doc, gg.graph, o.format, o.out_path);
  if (!o.verify) return kExitOk;
  const ParameterTuple expected = *id == GalleryId::fig3 ? ParameterTuple{5, 4, 12, 30, 6, 2}
                                                         : ParameterTuple{7, 6, 12, 28, 6, 3};
  const NutCertificate cert = is_nut(gg.graph, gg.partition, gg.tuple);
  doc["certificate"] = certificate_json(cert);
  doc["tuple_matches_caption"] = gg.tuple == expected;
  return cert.is_nut && gg.tuple == expected ? kExitOk : kExitNegative;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-orbit nut graph constructions, certificates and coverage search", "nutgraph"};
  app.require_subcommand(1);
  Options o;

  auto* build = app.add_subcommand("build", "Build the merged graph of a spec file");
  build->add_option("spec", o.spec_path, "Spec file")->required();
  build->add_option("--out", o.out_path, "Write the graph here instead of embedding it");
  build->add_option("--format", o.format, "edgelist or graph6")->check(CLI::IsMember({"edgelist", "graph6"}));

  auto* verify = app.add_subcommand("verify", "Certify nut-ness of an edge-list graph");
  verify->add_option("graph", o.graph_path, "Edge-list file")->required();
  verify->add_option("--partition", o.partition, "First N vertices form V of a merge product");

  auto* table = app.add_subcommand("table", "Emit (and verify) the specs of a published table");
  table->add_option("id", o.table, "1, 2 or 3")->required();
  table->add_option("--n", o.n, "Order of Λ1 (tables 1 and 2)");
  table->add_flag("--verify", o.verify, "Build and certify every row");
  table->add_flag("--slow", o.slow, "Also verify rows of order above 1000");

  auto* cover = app.add_subcommand("cover", "Which corollary covers an odd non-prime order");
  cover->add_option("order", o.order, "Order")->required();
  cover->add_option("--cache", o.cache_path, "Search cache file");

  auto* split = app.add_subcommand("split", "Find a split of s for valence a");
  split->add_option("s", o.s, "Odd s >= 3")->required();
  split->add_option("--a", o.a, "Even valence of Λ1")->required();
  split->add_option("--kappa", o.kappa, "Comma-separated κ values (default a,a^2)");

  auto* report = app.add_subcommand("report", "Coverage counts at checkpoint bounds");
  report->add_option("--up-to", o.up_to, "Largest order")->required();
  report->add_option("--checkpoints", o.checkpoints, "Comma-separated bounds");
  report->add_option("--out", o.out_path, "Report file");
  report->add_option("--format", o.report_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  report->add_option("--jobs", o.jobs, "Worker threads (0 = all cores)");
  report->add_option("--cache", o.cache_path, "Search cache file");

  auto* gal = app.add_subcommand("gallery", "Emit one of the order-35 exceptional graphs");
  gal->add_option("id", o.gallery_id, "fig3, fig4_left or fig4_right")->required();
  gal->add_flag("--verify", o.verify, "Certify nut-ness and the parameter tuple");
  gal->add_option("--format", o.format, "edgelist or graph6")->check(CLI::IsMember({"edgelist", "graph6"}));
  gal->add_option("--out", o.out_path, "Write the graph here instead of embedding it");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  json doc;
  doc["schema"] = kSchema;
  int code = kExitUsage;
  try {
    if (*build) {
      doc["command"] = "build";
      code = cmd_build(o, doc);
    } else if (*verify) {
      doc["command"] = "verify";
      code = cmd_verify(o, doc);
    } else if (*table) {
      doc["command"] = "table";
      code = cmd_table(o, doc);
    } else if (*cover) {
      doc["command"] = "cover";
      code = cmd_cover(o, doc);
    } else if (*split) {
      doc["command"] = "split";
      code = cmd_split(o, doc);
    } else if (*report) {
      doc["command"] = "report";
      code = cmd_report(o, doc);
    } else if (*gal) {
      doc["command"] = "gallery";
      code = cmd_gallery(o, doc);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SpecError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  doc["exit_code"] = code;
  out << doc.dump(2) << '\n';
  return code;
}

}  // namespace nutgraph

#include "xmnlab/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>

#include "xmnlab/catalog.hpp"
#include "xmnlab/group_io.hpp"
#include "xmnlab/kst_bounds.hpp"
#include "xmnlab/report.hpp"
#include "xmnlab/scan.hpp"

namespace xmnlab {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string group;
  std::string group_file;
  std::string cls = "all";
  std::string m_text = "1..3";
  std::size_t n = 0;
  std::size_t max_order = 60;
  std::size_t m_cap = kDefaultMCap;
  std::size_t order_cap = default_order_cap();
  std::string format;
  std::string out_path;
  std::uint64_t seed = 42;
  std::size_t trials = 500;
  std::size_t t_max = 30;
  bool strict_kst = true;
  unsigned threads = 1;
};

std::string fmt_double(double v) {
  std::ostringstream s;
  s << std::setprecision(6) << v;
  return s.str();
}

Group resolve_group(const RunConfig& cfg) {
  if (!cfg.group_file.empty()) return load_group_file(cfg.group_file, cfg.order_cap);
  if (cfg.group.empty()) throw UsageError("one of --group or --group-file is required");
  auto entry = find_catalog_entry(cfg.group);
  if (!entry) throw UsageError("unknown group \"" + cfg.group + "\"");
  return build_entry(*entry, cfg.order_cap);
}

std::vector<ClassId> resolve_classes(const std::string& text) {
  if (text == "all") {
    std::vector<ClassId> all;
    for (const auto& spec : class_registry()) all.push_back(spec.id);
    return all;
  }
  auto id = parse_class_id(text);
  if (!id) throw UsageError("unknown class \"" + text + "\"");
  return {*id};
}

ClassId resolve_single_class(const std::string& text) {
  auto classes = resolve_classes(text);
  if (classes.size() != 1) throw UsageError("this command needs a single --class");
  return classes.front();
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw UsageError("unsupported --format \"" + format + "\" for this command");
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  std::string body = text;
  if (body.empty() || body.back() != '\n') body += '\n';
  if (cfg.out_path.empty()) {
    out << body;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + cfg.out_path);
  file << body;
}

// Check at a user-supplied n next to the n_star rows.
struct FixedNCheck {
  unsigned m = 1;
  bool satisfies = false;
  bool vacuous = false;
  std::optional<XmnWitness> counterexample;
  Rational bound;
  bool bound_applies = false;
  bool holds = true;
};

std::vector<FixedNCheck> fixed_n_checks(const XGraph& xg, const GroupVerification& v,
                                        unsigned m_min, unsigned m_max, std::size_t n) {
  std::vector<FixedNCheck> rows;
  for (unsigned m = m_min; m <= m_max; ++m) {
    FixedNCheck row;
    row.m = m;
    const XmnResult r = satisfies_xmn(xg, m, n);
    row.satisfies = r.holds;
    row.vacuous = r.vacuous;
    row.counterexample = r.counterexample;
    row.bound = theorem_bound(xg.cls, m, n);
    row.bound_applies = r.holds && !r.vacuous && !v.vacuous && m <= n;
    if (row.bound_applies) row.holds = Rational(BigInt(v.order)) <= row.bound;
    rows.push_back(std::move(row));
  }
  return rows;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  require_format(format, {"json", "csv", "text"});
  const Group g = resolve_group(cfg);
  const auto classes = resolve_classes(cfg.cls);
  const auto [m_min, m_max] = parse_m_range(cfg.m_text);

  VerifyOptions opts;
  opts.m_min = m_min;
  opts.m_max = m_max;
  opts.m_cap = cfg.m_cap;
  opts.threads = cfg.threads;

  bool violation = false;
  ordered_json results = ordered_json::array();
  ordered_json class_list = ordered_json::array();
  std::ostringstream text;
  std::ostringstream csv;
  csv << csv_header() << '\n';
  for (ClassId id : classes) {
    const ClassSpec& cls = class_spec(id);
    class_list.push_back(class_json(cls));
    const XGraph xg = build_xgraph(g, cls, cfg.threads);
    const GroupVerification v = verify_group(xg, opts);
    violation = violation || v.has_violation();
    ordered_json entry = verification_json(v);

    text << g.name() << " (order " << g.order() << "), class " << cls.name() << ", gamma "
         << fraction_string(cls.gamma) << '\n';
    text << "  p = " << fraction_string(v.probability) << " (" << fmt_double(to_double(v.probability))
         << "), eta = " << v.eta << ", loops = " << v.loops << '\n';
    if (v.vacuous) text << "  vacuous: " << g.name() << " lies in the class\n";
    if (!v.threshold_ok) text << "  THRESHOLD VIOLATION: p > gamma\n";
    for (const auto& c : v.checks) {
      text << "  m=" << c.m << " n*=" << c.n_star << " bound=" << fraction_string(c.bound) << " ("
           << fmt_double(to_double(c.bound)) << ") " << (c.holds ? "holds" : "VIOLATED");
      if (c.corollary_applies) {
        text << ", 180/53 form " << (c.corollary_holds ? "holds" : "VIOLATED");
      }
      text << '\n';
    }
    if (v.limited_at_m) text << "  stopped at m=" << *v.limited_at_m << " (m cap)\n";
    write_csv_rows(csv, v);

    if (cfg.n > 0) {
      ordered_json fixed = ordered_json::array();
      for (const auto& row : fixed_n_checks(xg, v, m_min, m_max, cfg.n)) {
        ordered_json j = {{"m", row.m},
                          {"n", cfg.n},
                          {"satisfies_xmn", row.satisfies},
                          {"vacuous_subsets", row.vacuous},
                          {"bound", fraction_string(row.bound)},
                          {"bound_applies", row.bound_applies},
                          {"holds", row.holds}};
        if (row.counterexample) j["counterexample"] = witness_json(*row.counterexample);
        fixed.push_back(j);
        violation = violation || !row.holds;
        text << "  X(" << row.m << "," << cfg.n << ") " << (row.satisfies ? "holds" : "fails");
        if (row.bound_applies) text << ", bound " << (row.holds ? "holds" : "VIOLATED");
        text << '\n';
      }
      entry["at_n"] = fixed;
    }
    results.push_back(entry);
  }

  if (format == "json") {
    ordered_json doc = {{"command", "verify"},
                        {"group", g.name()},
                        {"order", g.order()},
                        {"m_range", std::to_string(m_min) + ".." + std::to_string(m_max)},
                        {"conventions", conventions_json()},
                        {"classes", class_list},
                        {"results", results},
                        {"violation", violation}};
    emit(cfg, doc.dump(2), out);
  } else if (format == "csv") {
    emit(cfg, csv.str(), out);
  } else {
    emit(cfg, text.str(), out);
  }
  return violation ? kExitViolation : kExitOk;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
  const std::string format = cfg.format.empty() ? "text" : cfg.format;
  require_format(format, {"json", "csv", "text"});
  ScanConfig sc;
  sc.max_order = cfg.max_order;
  sc.classes = resolve_classes(cfg.cls);
  std::tie(sc.m_min, sc.m_max) = parse_m_range(cfg.m_text);
  sc.m_cap = cfg.m_cap;
  sc.order_cap = cfg.order_cap;
  sc.seed = cfg.seed;
  sc.threads = cfg.threads;
  if (sc.max_order > sc.order_cap) {
    throw UsageError("--max-order exceeds the order cap of " + std::to_string(sc.order_cap));
  }
  const ScanResult result = run_scan(sc);
  std::ostringstream body;
  if (format == "json") {
    body << scan_json(result, sc).dump(2);
  } else if (format == "csv") {
    write_scan_csv(body, result);
  } else {
    write_scan_text(body, result, sc);
  }
  emit(cfg, body.str(), out);
  return result.has_violation() ? kExitViolation : kExitOk;
}

int cmd_prob(const RunConfig& cfg, std::ostream& out) {
  const std::string format = cfg.format.empty() ? "text" : cfg.format;
  require_format(format, {"json", "text"});
  const Group g = resolve_group(cfg);
  const auto classes = resolve_classes(cfg.cls);
  std::ostringstream text;
  ordered_json rows = ordered_json::array();
  for (ClassId id : classes) {
    const XGraph xg = build_xgraph(g, class_spec(id), cfg.threads);
    const Rational p = x_probability(xg);
    if (classes.size() > 1) text << to_string(id) << ": ";
    text << fraction_string(p) << " (" << fmt_double(to_double(p)) << ")\n";
    rows.push_back({{"class", std::string(to_string(id))},
                    {"probability", fraction_string(p)},
                    {"probability_float", to_double(p)},
                    {"bad_ordered", xg.bad_ordered},
                    {"pairs", g.order() * g.order()}});
  }
  if (format == "json") {
    ordered_json doc = {{"command", "prob"},
                        {"group", g.name()},
                        {"order", g.order()},
                        {"conventions", conventions_json()},
                        {"results", rows}};
    emit(cfg, doc.dump(2), out);
  } else {
    emit(cfg, text.str(), out);
  }
  return kExitOk;
}

int cmd_graph(const RunConfig& cfg, std::ostream& out) {
  const std::string format = cfg.format.empty() ? "dot" : cfg.format;
  require_format(format, {"dot", "csv"});
  const Group g = resolve_group(cfg);
  const XGraph xg = build_xgraph(g, class_spec(resolve_single_class(cfg.cls)), cfg.threads);
  std::ostringstream body;
  if (format == "dot") {
    write_dot(body, xg);
  } else {
    write_edge_csv(body, xg);
  }
  emit(cfg, body.str(), out);
  return kExitOk;
}

int cmd_kmn(const RunConfig& cfg, std::ostream& out) {
  const std::string format = cfg.format.empty() ? "text" : cfg.format;
  require_format(format, {"json", "text"});
  const Group g = resolve_group(cfg);
  const ClassId id = resolve_single_class(cfg.cls);
  const auto [m, m_hi] = parse_m_range(cfg.m_text);
  if (m != m_hi) throw UsageError("kmn takes a single --m");
  if (cfg.n == 0) throw UsageError("kmn needs --n");
  const XGraph xg = build_xgraph(g, class_spec(id), cfg.threads);
  const auto witness = contains_kmn(xg.graph, m, cfg.n, cfg.m_cap);
  if (format == "json") {
    ordered_json doc = {{"command", "kmn"}, {"group", g.name()}, {"class", std::string(to_string(id))},
                        {"m", m},           {"n", cfg.n},        {"found", witness.has_value()}};
    if (witness) doc["witness"] = {{"M", witness->m_part}, {"N", witness->n_part}};
    emit(cfg, doc.dump(2), out);
    return kExitOk;
  }
  std::ostringstream text;
  if (!witness) {
    text << "free\n";
  } else {
    text << "K_{" << m << "," << cfg.n << "} M = [";
    for (std::size_t i = 0; i < witness->m_part.size(); ++i) text << (i ? " " : "") << witness->m_part[i];
    text << "] N = [";
    for (std::size_t i = 0; i < witness->n_part.size(); ++i) text << (i ? " " : "") << witness->n_part[i];
    text << "]\n";
  }
  emit(cfg, text.str(), out);
  return kExitOk;
}

int cmd_ksttest(const RunConfig& cfg, std::ostream& out) {
  const std::string format = cfg.format.empty() ? "text" : cfg.format;
  require_format(format, {"json", "text"});
  const auto [m, m_hi] = parse_m_range(cfg.m_text);
  if (m != m_hi) throw UsageError("ksttest takes a single --m");
  KstTestConfig kc;
  kc.seed = cfg.seed;
  kc.m = m;
  kc.n = cfg.n == 0 ? 3 : cfg.n;
  kc.trials = cfg.trials;
  kc.t_max = cfg.t_max;
  kc.strict = cfg.strict_kst;
  KstTestSummary s;
  try {
    s = kst_random_property_test(kc);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (format == "json") {
    ordered_json boundary = ordered_json::array();
    for (const auto& b : s.boundary) {
      boundary.push_back({{"trial", b.trial}, {"t", b.t}, {"eta", b.eta}, {"contains", b.contains}});
    }
    ordered_json doc = {{"command", "ksttest"},
                        {"m", kc.m},
                        {"n", kc.n},
                        {"seed", kc.seed},
                        {"trials", kc.trials},
                        {"t_max", kc.t_max},
                        {"strict", kc.strict},
                        {"graphs", s.graphs},
                        {"exceeded", s.exceeded},
                        {"witnessed", s.witnessed},
                        {"below_with_kmn", s.below_with_kmn},
                        {"boundary", boundary},
                        {"violations", s.violations}};
    emit(cfg, doc.dump(2), out);
  } else {
    std::ostringstream text;
    text << "K_{" << kc.m << "," << kc.n << "} seed " << kc.seed << ": " << s.graphs
         << " graphs, " << s.exceeded << (kc.strict ? " strictly" : "")
         << " above threshold, " << s.witnessed << " witnessed, " << s.below_with_kmn
         << " below threshold with K_{m,n}\n";
    for (const auto& b : s.boundary) {
      text << "boundary: trial " << b.trial << " t=" << b.t << " eta=" << b.eta
           << (b.contains ? " contains" : " free") << '\n';
    }
    text << s.violations << " violations\n";
    emit(cfg, text.str(), out);
  }
  return s.violations == 0 ? kExitOk : kExitViolation;
}

int cmd_catalog_list(const RunConfig& cfg, std::ostream& out) {
  const std::string format = cfg.format.empty() ? "text" : cfg.format;
  require_format(format, {"json", "text"});
  const auto entries = catalog_scan(cfg.max_order);
  std::ostringstream text;
  ordered_json rows = ordered_json::array();
  for (const auto& e : entries) {
    const Group g = build_entry(e, cfg.order_cap);
    std::string gens;
    for (const auto& p : g.generators()) gens += (gens.empty() ? "" : " ") + p.to_cycle_string();
    if (gens.empty()) gens = "()";
    text << std::left << std::setw(14) << e.name << std::setw(6) << e.expected_order
         << std::setw(34) << flags_string(e.flags) << gens << '\n';
    rows.push_back({{"name", e.name},
                    {"order", e.expected_order},
                    {"degree", g.degree()},
                    {"flags", flags_string(e.flags)},
                    {"generators", gens}});
  }
  if (format == "json") {
    emit(cfg, ordered_json{{"command", "catalog list"}, {"max_order", cfg.max_order}, {"groups", rows}}
                  .dump(2),
         out);
  } else {
    emit(cfg, text.str(), out);
  }
  return kExitOk;
}

}  // namespace

std::pair<unsigned, unsigned> parse_m_range(const std::string& text) {
  auto parse_one = [&](const std::string& s) -> unsigned {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 6) {
      throw std::invalid_argument("bad m range \"" + text + "\"");
    }
    return static_cast<unsigned>(std::stoul(s));
  };
  unsigned lo = 0;
  unsigned hi = 0;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    lo = parse_one(text.substr(0, dots));
    hi = parse_one(text.substr(dots + 2));
  } else {
    lo = hi = parse_one(text);
  }
  if (lo == 0 || lo > hi) throw std::invalid_argument("bad m range \"" + text + "\"");
  return {lo, hi};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"xmnlab: non-X generating graphs, condition X(m,n) and size bounds"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--group", cfg.group, "catalog group name (e.g. A5, S3, D8, C2xS3)");
    sub->add_option("--group-file", cfg.group_file, "JSON group description");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "output format");
    sub->add_option("--out", cfg.out_path, "write the report to this file");
    sub->add_option("--order-cap", cfg.order_cap, "maximum group order")->check(CLI::PositiveNumber);
    sub->add_option("--threads", cfg.threads, "worker threads (0 = hardware)");
  };

  auto* verify = app.add_subcommand("verify", "check the size bound for one group");
  add_group(verify);
  add_common(verify);
  verify->add_option("--class", cfg.cls, "class id or all");
  verify->add_option("--m", cfg.m_text, "m range a..b");
  verify->add_option("--n", cfg.n, "also check condition X(m,n) at this n");
  verify->add_option("--m-cap", cfg.m_cap, "largest m for n_star")->check(CLI::PositiveNumber);

  auto* scan = app.add_subcommand("scan", "check the size bound over the catalog");
  add_common(scan);
  scan->add_option("--class", cfg.cls, "class id or all");
  scan->add_option("--m", cfg.m_text, "m range a..b");
  scan->add_option("--max-order", cfg.max_order, "largest catalog order");
  scan->add_option("--m-cap", cfg.m_cap, "largest m for n_star")->check(CLI::PositiveNumber);
  scan->add_option("--seed", cfg.seed, "recorded in the report");

  auto* prob = app.add_subcommand("prob", "probability that a random pair generates a class member");
  add_group(prob);
  add_common(prob);
  prob->add_option("--class", cfg.cls, "class id or all");

  auto* graph = app.add_subcommand("graph", "export the non-X generating graph");
  add_group(graph);
  add_common(graph);
  graph->add_option("--class", cfg.cls, "class id")->required();

  auto* kmn = app.add_subcommand("kmn", "search the non-X generating graph for K_{m,n}");
  add_group(kmn);
  add_common(kmn);
  kmn->add_option("--class", cfg.cls, "class id")->required();
  kmn->add_option("--m", cfg.m_text, "part size m")->required();
  kmn->add_option("--n", cfg.n, "part size n")->required();
  kmn->add_option("--m-cap", cfg.m_cap, "largest m")->check(CLI::PositiveNumber);

  auto* ksttest = app.add_subcommand("ksttest", "random-graph check of the KST threshold");
  add_common(ksttest);
  ksttest->add_option("--m", cfg.m_text, "part size m")->required();
  ksttest->add_option("--n", cfg.n, "part size n")->required();
  ksttest->add_option("--trials", cfg.trials, "number of random graphs");
  ksttest->add_option("--seed", cfg.seed, "64-bit seed");
  ksttest->add_option("--t-max", cfg.t_max, "largest vertex count");
  ksttest->add_flag("--strict-kst,!--no-strict-kst", cfg.strict_kst,
                    "count only graphs strictly above the threshold (default on)");

  auto* catalog = app.add_subcommand("catalog", "catalog queries");
  auto* list = catalog->add_subcommand("list", "list catalog groups");
  catalog->require_subcommand(1);
  add_common(list);
  list->add_option("--max-order", cfg.max_order, "largest order listed");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(cfg, out);
    if (*scan) return cmd_scan(cfg, out);
    if (*prob) return cmd_prob(cfg, out);
    if (*graph) return cmd_graph(cfg, out);
    if (*kmn) return cmd_kmn(cfg, out);
    if (*ksttest) return cmd_ksttest(cfg, out);
    if (*list) return cmd_catalog_list(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LimitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace xmnlab

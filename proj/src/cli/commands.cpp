#include "cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "alphax/errors.hpp"
#include "alphax/graph6.hpp"
#include "alphax/minor.hpp"
#include "alphax/spectral.hpp"
#include "cli/lemma_suites.hpp"

namespace alphax::cli {
namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

int parse_int(const std::string& text) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + text + "'");
  }
  if (used != text.size()) throw UsageError("not an integer: '" + text + "'");
  return v;
}

// Options naming one graph through a constructor.
struct ConstructorArgs {
  std::string family;
  int n = -1;
  int m = -1;
  int s = -1;
  int t = -1;
  std::vector<std::string> operands;  // graph6 operands for complement / join
};

void add_constructor_options(CLI::App* cmd, ConstructorArgs& c, bool required) {
  auto* fam = cmd->add_option("--family", c.family,
                              "complete, empty, path, cycle, complete-bipartite, friendship, quadrangle-book, "
                              "matching, fs-extremal, qt-extremal, complement, join");
  if (required) fam->required();
  cmd->add_option("--n", c.n, "Order");
  cmd->add_option("--m", c.m, "First part size (complete-bipartite)");
  cmd->add_option("--s", c.s, "Friendship parameter");
  cmd->add_option("--t", c.t, "Quadrangle-book parameter");
  cmd->add_option("--operand", c.operands, "graph6 operand for complement / join (repeat for join)");
}

Graph construct(const ConstructorArgs& c) {
  auto need = [&](int v, const char* name) {
    if (v < 0) throw UsageError(std::string("--family ") + c.family + " needs --" + name);
    return v;
  };
  const std::string& f = c.family;
  if (f == "complete") return make_complete(need(c.n, "n"));
  if (f == "empty") return make_empty(need(c.n, "n"));
  if (f == "path") return make_path(need(c.n, "n"));
  if (f == "cycle") return make_cycle(need(c.n, "n"));
  if (f == "complete-bipartite") return make_complete_bipartite(need(c.m, "m"), need(c.n, "n"));
  if (f == "friendship") return friendship(need(c.s, "s"));
  if (f == "quadrangle-book") return quadrangle_book(need(c.t, "t"));
  if (f == "matching") return matching_graph(need(c.n, "n"));
  if (f == "fs-extremal") return extremal_fs(need(c.n, "n"), need(c.s, "s"));
  if (f == "qt-extremal") return extremal_qt(need(c.n, "n"), need(c.t, "t"));
  if (f == "complement") {
    if (c.operands.size() != 1) throw UsageError("complement needs exactly one --operand");
    return complement(parse_graph6(c.operands[0]));
  }
  if (f == "join") {
    if (c.operands.size() != 2) throw UsageError("join needs exactly two --operand");
    return join(parse_graph6(c.operands[0]), parse_graph6(c.operands[1]));
  }
  throw UsageError("unknown family '" + f + "'");
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  if (path == "-") return read_graph6_stream(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return read_graph6_stream(in);
}

// Graphs from --graph, --input and the constructor options, in that order.
struct GraphSource {
  std::vector<std::string> graph6;
  std::string input;
  ConstructorArgs ctor;

  void attach(CLI::App* cmd) {
    cmd->add_option("--graph", graph6, "graph6 string (repeatable)");
    cmd->add_option("--input", input, "graph6 file, one graph per line ('-' for stdin)");
    add_constructor_options(cmd, ctor, false);
  }

  std::vector<Graph> collect() const {
    std::vector<Graph> out;
    for (const auto& g : graph6) out.push_back(parse_graph6(g));
    if (!input.empty()) {
      auto more = read_graph6_file(input);
      out.insert(out.end(), more.begin(), more.end());
    }
    if (!ctor.family.empty()) out.push_back(construct(ctor));
    if (out.empty()) throw UsageError("no graphs given (use --graph, --input or --family)");
    return out;
  }
};

Graph parse_minor_spec(const std::string& spec) {
  if (spec.starts_with("g6:")) return parse_graph6(spec.substr(3));
  if (spec.size() < 2) throw UsageError("bad minor spec '" + spec + "'");
  const int k = parse_int(spec.substr(1));
  switch (spec[0]) {
    case 'K': return make_complete(k);
    case 'C': return make_cycle(k);
    case 'P': return make_path(k);
    case 'F': return friendship(k);
    case 'Q': return quadrangle_book(k);
    default: throw UsageError("bad minor spec '" + spec + "' (K<n>, C<n>, P<n>, F<s>, Q<t> or g6:<graph6>)");
  }
}

Family parse_family(const std::string& name, int param) {
  if (param < 1) throw UsageError("family parameter must be at least 1");
  if (name == "fs") return Family::fs(param);
  if (name == "qt") return Family::qt(param);
  throw UsageError("--family must be fs or qt");
}

Shard parse_shard(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw UsageError("--shard expects i/K");
  Shard s{parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
  if (s.count < 1 || s.index < 0 || s.index >= s.count) throw UsageError("--shard index out of range");
  return s;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

int cmd_construct(const ConstructorArgs& c, std::ostream& out) {
  out << write_graph6(construct(c)) << '\n';
  return kExitOk;
}

int cmd_alpha_index(const GraphSource& src, const std::string& alpha_text, double tol, bool signless,
                    std::ostream& out) {
  const auto graphs = src.collect();
  if (signless) {
    out << "graph6,n,q,residual\n";
    for (const Graph& g : graphs) {
      const SpectralResult r = alpha_index(g, 0.5, tol);
      out << write_graph6(g) << ',' << g.order() << ',' << format_real(2.0 * r.rho) << ','
          << format_real(2.0 * r.residual) << '\n';
    }
    return kExitOk;
  }
  const auto alphas = parse_reals(alpha_text);
  out << "graph6,n,alpha,rho,residual\n";
  for (const Graph& g : graphs) {
    for (double a : alphas) {
      const SpectralResult r = alpha_index(g, a, tol);
      out << write_graph6(g) << ',' << g.order() << ',' << format_real(a) << ',' << format_real(r.rho) << ','
          << format_real(r.residual) << '\n';
    }
  }
  return kExitOk;
}

struct MinorCheckArgs {
  GraphSource src;
  std::string minor;
  bool oracle = false;
  bool as_json = false;
  std::uint64_t node_cap = MinorOptions{}.node_cap;
};

int cmd_minor_check(const MinorCheckArgs& a, std::ostream& out, std::ostream& err) {
  const auto graphs = a.src.collect();
  const Graph h = parse_minor_spec(a.minor);
  MinorOptions options;
  options.node_cap = a.node_cap;
  int status = kExitOk;
  json results = json::array();
  std::ostringstream csv;
  csv << "graph6,n,minor,contains,nodes_explored,certificate_valid" << (a.oracle ? ",oracle" : "") << '\n';
  for (const Graph& g : graphs) {
    const MinorVerdict v = has_minor(g, h, options);
    const bool valid = v.model ? validate_model(g, h, *v.model) : !v.contains;
    if (!valid) {
      err << "invalid certificate for " << write_graph6(g) << '\n';
      status = kExitCounterexample;
    }
    std::optional<bool> oracle;
    if (a.oracle && g.order() <= 7) {
      oracle = minor_closure_oracle(g, h);
      if (*oracle != v.contains) {
        err << "oracle disagreement for " << write_graph6(g) << '\n';
        status = kExitCounterexample;
      }
    }
    csv << write_graph6(g) << ',' << g.order() << ',' << a.minor << ',' << (v.contains ? "true" : "false") << ','
        << v.nodes_explored << ',' << (valid ? "true" : "false");
    if (a.oracle) csv << ',' << (oracle ? (*oracle ? "true" : "false") : "skipped");
    csv << '\n';
    json row{{"graph6", write_graph6(g)}, {"n", g.order()}, {"minor", a.minor}, {"contains", v.contains},
             {"nodes_explored", v.nodes_explored}, {"certificate_valid", valid}};
    row["certificate"] = v.model ? model_json(*v.model) : json(nullptr);
    if (a.oracle) row["oracle"] = oracle ? json(*oracle) : json(nullptr);
    results.push_back(std::move(row));
  }
  if (a.as_json) {
    out << json{{"schema", kReportSchema}, {"command", "minor-check"}, {"results", results}}.dump(2) << '\n';
  } else {
    out << csv.str();
  }
  return status;
}

struct LemmaArgs {
  int max_n = 7;
  int grid_max_n = 30;
  int samples = 10000;
  std::uint64_t seed = 20240601;
  int s = 1;
  int t = 1;
  double tol = kDefaultTol;
  std::string json_path;
};

int cmd_verify_lemmas(const LemmaArgs& a, std::ostream& out) {
  if (a.max_n < 1 || a.max_n > kMaxGeneratedOrder) throw UsageError("--max-n must lie in 1..9");
  if (a.grid_max_n < 2 || a.grid_max_n > kMaxOrder) throw UsageError("--grid-max-n must lie in 2..64");
  const auto alphas = decile_alphas();
  std::vector<SuiteResult> suites;
  suites.push_back(closed_form_suite(3, a.grid_max_n, alphas, a.tol));
  suites.push_back(join_bound_suite(3, a.grid_max_n, alphas, a.tol));
  suites.push_back(signless_laplacian_suite(a.max_n, a.tol));
  suites.push_back(intersection_suite(a.samples, a.seed));
  suites.push_back(structure_suite(Family::fs(a.s), a.max_n));
  suites.push_back(structure_suite(Family::qt(a.t), a.max_n));
  suites.push_back(monotonicity_suite(a.max_n, {0.0, 0.3, 0.5, 0.7}, false, a.tol));
  suites.push_back(regular_closure_suite(a.max_n, a.tol));
  suites.push_back(vertex_deletion_suite(std::min(a.max_n, 6), {0.0, 0.3, 0.5, 0.7}, a.tol));
  suites.push_back(corollary_suite(Family::fs(a.s), a.s + 3, a.max_n, a.tol));
  suites.push_back(corollary_suite(Family::qt(a.t), a.t + 4, a.max_n, a.tol));
  suites.push_back(clique_completion_suite(Family::fs(2), 200, a.seed));
  suites.push_back(clique_completion_suite(Family::qt(1), 200, a.seed));

  bool ok = true;
  out << "suite,checked,violations,first_counterexample\n";
  json js = json::array();
  for (const auto& s : suites) {
    ok = ok && s.passed();
    out << s.name << ',' << s.checked << ',' << s.violations << ','
        << (s.first ? s.first->graph6 + " " + s.first->context : "") << '\n';
    js.push_back({{"suite", s.name}, {"checked", s.checked}, {"violations", s.violations},
                  {"first_counterexample", counterexample_json(s.first)}});
  }
  const int status = ok ? kExitOk : kExitCounterexample;
  if (!a.json_path.empty()) {
    json density = json::object();
    for (Family f : {Family::fs(a.s), Family::qt(a.t)}) {
      json rows = json::array();
      for (const auto& d : density_table(f, a.max_n)) {
        rows.push_back({{"n", d.n}, {"minor_free_count", d.minor_free_count}, {"max_edges", d.max_edges},
                        {"max_edges_per_vertex", round_real(d.max_edges_per_vertex)}});
      }
      density[f.name()] = rows;
    }
    const json doc{{"schema", kReportSchema}, {"command", "verify-lemmas"}, {"suites", js},
                   {"edge_density", density}, {"exit_status", status}};
    std::ostringstream text;
    text << doc.dump(2) << '\n';
    write_output(a.json_path, text.str(), out);
  }
  return status;
}

struct TheoremArgs {
  std::string family = "fs";
  int s = -1;
  int t = -1;
  std::string orders;
  std::string alphas = "0.1,0.3,0.5,0.7,0.9";
  double tol = kDefaultTol;
  double tie_tol = kTieTol;
  int require_from = -1;
  int shards = 1;
  std::string shard;
  std::string input;
  std::string csv_path;
  std::string json_path;
  bool timing = false;
};

int cmd_verify_theorem(const TheoremArgs& a, std::ostream& out) {
  TheoremConfig config;
  const int param = a.family == "qt" ? a.t : a.s;
  config.family = parse_family(a.family, param < 0 ? 1 : param);
  config.alphas = parse_reals(a.alphas);
  for (double x : config.alphas)
    if (!(x > 0.0 && x < 1.0)) throw UsageError("theorem runs need every alpha in (0, 1)");
  if (!(a.tol > 0.0) || !(a.tie_tol > 0.0)) throw UsageError("tolerances must be positive");
  config.tol = a.tol;
  config.tie_tol = a.tie_tol;
  if (a.require_from >= 0) config.require_from = a.require_from;
  if (a.shards < 1) throw UsageError("--shards must be at least 1");
  config.shards = a.shards;
  if (!a.shard.empty()) config.only_shard = parse_shard(a.shard);
  config.threads = worker_count();
  config.timing = a.timing;
  if (!a.input.empty()) {
    config.input = read_graph6_file(a.input);
    if (a.orders.empty()) {
      for (const Graph& g : config.input) config.orders.push_back(g.order());
      std::sort(config.orders.begin(), config.orders.end());
      config.orders.erase(std::unique(config.orders.begin(), config.orders.end()), config.orders.end());
    }
  }
  if (config.orders.empty()) {
    if (a.orders.empty()) throw UsageError("--n is required");
    config.orders = parse_orders(a.orders);
  }
  for (int n : config.orders) {
    if (n < 1) throw UsageError("orders must be positive");
    if (config.input.empty() && n > kMaxGeneratedOrder) {
      throw CapacityError("in-process generation stops at 9 vertices; pass larger orders with --input");
    }
  }

  const VerdictSummary summary = verify_theorem(config);
  const bool want_json = !a.json_path.empty();
  if (!a.csv_path.empty() || !want_json) write_output(a.csv_path, theorem_csv(summary), out);
  if (want_json) write_output(a.json_path, theorem_json(config, summary), out);
  return summary.exit_status;
}

}  // namespace

int worker_count() {
  if (const char* env = std::getenv("ALPHAX_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
  }
  return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

std::vector<int> parse_orders(const std::string& text) {
  std::vector<int> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const int lo = parse_int(trim(text.substr(0, dots)));
    const int hi = parse_int(trim(text.substr(dots + 2)));
    if (lo > hi) throw UsageError("empty order range '" + text + "'");
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(trim(item)));
  if (out.empty()) throw UsageError("no orders given");
  return out;
}

std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError("not a number: '" + item + "'");
    }
    if (used != item.size()) throw UsageError("not a number: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("no values given");
  return out;
}

VerdictSummary verify_theorem(const TheoremConfig& config) {
  // One work item per (order, shard); each produces a report per alpha.
  struct Item {
    int n;
    Shard shard;
    std::vector<SearchReport> per_alpha;
  };
  std::vector<Item> items;
  for (int n : config.orders) {
    if (config.only_shard) {
      items.push_back({n, *config.only_shard, {}});
    } else {
      for (int i = 0; i < config.shards; ++i) items.push_back({n, Shard{i, config.shards}, {}});
    }
  }

  std::map<int, std::vector<Graph>> file_by_order;
  for (const Graph& g : config.input) file_by_order[g.order()].push_back(g);

  SearchOptions options;
  options.tol = config.tol;
  options.tie_tol = config.tie_tol;

  auto work = [&](Item& item) {
    GraphStream stream;
    if (config.input.empty()) {
      stream = enumerate_graphs(item.n, false, item.shard);
    } else {
      const GraphStream all = stream_from_graphs(item.n, file_by_order[item.n]);
      stream = all;
      stream.graphs.clear();
      for (const Graph& g : all.graphs) {
        if (item.shard.count == 1 || shard_of(g, item.shard.count) == item.shard.index) stream.graphs.push_back(g);
      }
    }
    MinorFreeCache cache(config.family);
    for (double alpha : config.alphas) {
      item.per_alpha.push_back(search_extremal(item.n, alpha, config.family, stream, cache, options));
    }
  };

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        work(items[i]);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int threads = std::clamp(config.threads, 1, static_cast<int>(std::max<std::size_t>(1, items.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  VerdictSummary summary;
  for (int n : config.orders) {
    for (std::size_t ai = 0; ai < config.alphas.size(); ++ai) {
      std::optional<SearchReport> merged;
      for (const Item& item : items) {
        if (item.n != n) continue;
        merged = merged ? merge_reports(*merged, item.per_alpha[ai]) : item.per_alpha[ai];
      }
      summary.reports.push_back(std::move(*merged));
    }
  }

  for (const SearchReport& r : summary.reports) {
    const bool partial = config.only_shard.has_value();
    if (!partial && r.total_graphs > 0 && r.minor_free_count == 0) {
      throw std::logic_error("verify_theorem: empty minor-free family");
    }
    const bool holds = r.matches_construction && r.unique;
    if (!holds && !partial && r.minor_free_count > 0) {
      if (!summary.first_counterexample) {
        std::string reason = r.matches_construction ? "construction ties with other graphs"
                                                    : "argmax differs from the construction";
        summary.first_counterexample =
            Counterexample{r.argmax_graph6, "n=" + std::to_string(r.n) + " alpha=" + format_real(r.alpha) +
                                                " family=" + r.family.name() + " ties=" +
                                                std::to_string(r.ties.size()) + " " + reason};
      }
      if (config.require_from && r.n >= *config.require_from) summary.exit_status = kExitCounterexample;
    }
  }

  if (!config.only_shard) {
    std::vector<int> orders = config.orders;
    std::sort(orders.begin(), orders.end());
    for (auto it = orders.rbegin(); it != orders.rend(); ++it) {
      const bool all_hold = std::all_of(summary.reports.begin(), summary.reports.end(), [&](const SearchReport& r) {
        return r.n != *it || (r.matches_construction && r.unique);
      });
      if (!all_hold) break;
      summary.empirical_n0 = *it;
    }
  }
  return summary;
}

std::string theorem_csv(const VerdictSummary& summary) {
  std::ostringstream out;
  write_theorem_csv(out, summary.reports);
  return out.str();
}

std::string theorem_json(const TheoremConfig& config, const VerdictSummary& summary) {
  json reports = json::array();
  for (const auto& r : summary.reports) reports.push_back(report_json(r, config.timing));
  json alphas = json::array();
  for (double a : config.alphas) alphas.push_back(round_real(a));
  json doc{{"schema", kReportSchema},
           {"command", "verify-theorem"},
           {"family", config.family.name()},
           {"orders", config.orders},
           {"alphas", alphas},
           {"tol", config.tol},
           {"tie_tol", config.tie_tol},
           {"require_from", config.require_from ? json(*config.require_from) : json(nullptr)},
           {"shard", config.only_shard ? json(std::to_string(config.only_shard->index) + "/" +
                                              std::to_string(config.only_shard->count))
                                       : json(nullptr)},
           {"reports", reports},
           {"empirical_n0", summary.empirical_n0 ? json(*summary.empirical_n0) : json(nullptr)},
           {"first_counterexample", counterexample_json(summary.first_counterexample)},
           {"exit_status", summary.exit_status}};
  return doc.dump(2) + "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral extremal verification for F_s- and Q_t-minor-free graphs", "alphax"};
  app.require_subcommand(1);

  ConstructorArgs construct_args;
  auto* construct_cmd = app.add_subcommand("construct", "Print the graph6 of a named construction");
  add_constructor_options(construct_cmd, construct_args, true);

  GraphSource alpha_src;
  std::string alpha_text = "0.5";
  double alpha_tol = kDefaultTol;
  bool signless = false;
  auto* alpha_cmd = app.add_subcommand("alpha-index", "Largest eigenvalue of A_alpha for each graph");
  alpha_src.attach(alpha_cmd);
  alpha_cmd->add_option("--alpha", alpha_text, "Comma-separated alpha values in [0,1]");
  alpha_cmd->add_option("--tol", alpha_tol, "Eigen residual tolerance");
  alpha_cmd->add_flag("--signless-laplacian", signless, "Emit q = 2 rho_{1/2}");

  MinorCheckArgs minor_args;
  auto* minor_cmd = app.add_subcommand("minor-check", "Decide H-minor containment with certificates");
  minor_args.src.attach(minor_cmd);
  minor_cmd->add_option("--minor", minor_args.minor, "K<n>, C<n>, P<n>, F<s>, Q<t> or g6:<graph6>")->required();
  minor_cmd->add_flag("--oracle", minor_args.oracle, "Cross-check with the closure oracle when n <= 7");
  minor_cmd->add_flag("--json", minor_args.as_json, "JSON output with certificates");
  minor_cmd->add_option("--node-cap", minor_args.node_cap, "Search node cap");

  TheoremArgs theorem_args;
  auto* theorem_cmd = app.add_subcommand("verify-theorem", "Exhaustive extremal search per (n, alpha)");
  theorem_cmd->add_option("--family", theorem_args.family, "fs or qt");
  theorem_cmd->add_option("--s", theorem_args.s, "F_s parameter");
  theorem_cmd->add_option("--t", theorem_args.t, "Q_t parameter");
  theorem_cmd->add_option("--n", theorem_args.orders, "Orders: 4, 4..8 or 5,7,9");
  theorem_cmd->add_option("--alpha", theorem_args.alphas, "Comma-separated alpha values in (0,1)");
  theorem_cmd->add_option("--tol", theorem_args.tol, "Eigen residual tolerance");
  theorem_cmd->add_option("--tie-tol", theorem_args.tie_tol, "Tie tolerance between alpha-indices");
  theorem_cmd->add_option("--require-from", theorem_args.require_from, "Fail (exit 1) on non-match at n >= this");
  theorem_cmd->add_option("--shards", theorem_args.shards, "Split each order into K shards and merge");
  theorem_cmd->add_option("--shard", theorem_args.shard, "Run only shard i/K (partial report)");
  theorem_cmd->add_option("--input", theorem_args.input, "graph6 file instead of generation");
  theorem_cmd->add_option("--csv", theorem_args.csv_path, "CSV output path ('-' for stdout)");
  theorem_cmd->add_option("--json", theorem_args.json_path, "JSON output path ('-' for stdout)");
  theorem_cmd->add_flag("--timing", theorem_args.timing, "Include wall times in JSON");

  LemmaArgs lemma_args;
  auto* lemma_cmd = app.add_subcommand("verify-lemmas", "Run the lemma and property suites");
  lemma_cmd->add_option("--max-n", lemma_args.max_n, "Largest enumerated order");
  lemma_cmd->add_option("--grid-max-n", lemma_args.grid_max_n, "Largest order of the closed-form grid");
  lemma_cmd->add_option("--samples", lemma_args.samples, "Randomized intersection families");
  lemma_cmd->add_option("--seed", lemma_args.seed, "Random seed");
  lemma_cmd->add_option("--s", lemma_args.s, "F_s parameter for structure and corollary suites");
  lemma_cmd->add_option("--t", lemma_args.t, "Q_t parameter for structure and corollary suites");
  lemma_cmd->add_option("--tol", lemma_args.tol, "Eigen residual tolerance");
  lemma_cmd->add_option("--json", lemma_args.json_path, "JSON output path ('-' for stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "alphax: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*construct_cmd) return cmd_construct(construct_args, out);
    if (*alpha_cmd) return cmd_alpha_index(alpha_src, alpha_text, alpha_tol, signless, out);
    if (*minor_cmd) return cmd_minor_check(minor_args, out, err);
    if (*theorem_cmd) return cmd_verify_theorem(theorem_args, out);
    if (*lemma_cmd) return cmd_verify_lemmas(lemma_args, out);
  } catch (const std::exception& e) {
    err << "alphax: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace alphax::cli

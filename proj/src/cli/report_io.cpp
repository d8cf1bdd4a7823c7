#include "cli/report_io.hpp"

#include <cstdio>
#include <cstdlib>

namespace alphax::cli {

std::string format_real(double x) {
  if (x == 0.0) return "0";  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round_real(double x) { return std::strtod(format_real(x).c_str(), nullptr); }

void write_theorem_csv(std::ostream& out, const std::vector<SearchReport>& reports) {
  out << kTheoremCsvHeader << '\n';
  for (const auto& r : reports) {
    std::string ties;
    for (std::size_t i = 0; i < r.ties.size(); ++i) ties += (i ? ";" : "") + r.ties[i];
    out << r.argmax_graph6 << ',' << r.n << ',' << format_real(r.alpha) << ',' << r.family.name() << ','
        << format_real(r.max_rho) << ',' << format_real(r.argmax_residual) << ',' << r.minor_free_count << ','
        << (r.matches_construction ? "true" : "false") << ',' << (r.unique ? "true" : "false") << ',' << ties
        << '\n';
  }
}

nlohmann::ordered_json report_json(const SearchReport& r, bool timing) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["alpha"] = round_real(r.alpha);
  j["family"] = r.family.name();
  j["total_graphs"] = r.total_graphs;
  j["minor_free_count"] = r.minor_free_count;
  j["max_rho"] = round_real(r.max_rho);
  j["argmax_graph6"] = r.argmax_graph6;
  j["argmax_canonical"] = r.argmax_canonical.bytes;
  j["argmax_residual"] = round_real(r.argmax_residual);
  j["ties"] = r.ties;
  j["matches_construction"] = r.matches_construction;
  j["unique"] = r.unique;
  if (timing) j["wall_time_ms"] = std::chrono::duration<double, std::milli>(r.wall_time).count();
  return j;
}

nlohmann::ordered_json model_json(const MinorModel& m) {
  auto sets = nlohmann::ordered_json::array();
  for (VertexSet s : m.branch_sets) sets.push_back(s.members());
  return nlohmann::ordered_json{{"branch_sets", sets}};
}

nlohmann::ordered_json counterexample_json(const std::optional<Counterexample>& c) {
  if (!c) return nullptr;
  return nlohmann::ordered_json{{"graph6", c->graph6}, {"context", c->context}};
}

}  // namespace alphax::cli

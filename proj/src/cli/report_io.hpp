#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "alphax/enumerate.hpp"
#include "alphax/minor.hpp"
#include "json.hpp"

namespace alphax::cli {

inline constexpr int kReportSchema = 1;

/// printf("%.12g"): shortest form up to 12 significant digits.
std::string format_real(double x);
/// x rounded to 12 significant digits, so JSON output matches the CSV.
double round_real(double x);

inline constexpr const char* kTheoremCsvHeader =
    "graph6,n,alpha,family,rho,residual,minor_free,matches_construction,unique,ties";

void write_theorem_csv(std::ostream& out, const std::vector<SearchReport>& reports);
nlohmann::ordered_json report_json(const SearchReport& r, bool timing);
nlohmann::ordered_json model_json(const MinorModel& m);

struct Counterexample {
  std::string graph6;
  std::string context;
};

nlohmann::ordered_json counterexample_json(const std::optional<Counterexample>& c);

}  // namespace alphax::cli

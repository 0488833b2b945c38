#include "projent/report.hpp"

#include <cmath>
#include <string>

#include "projent/error.hpp"

namespace projent {

std::string_view to_string(MeasureKind kind) noexcept {
  switch (kind) {
    case MeasureKind::segre: return "segre";
    case MeasureKind::pluecker_qubit: return "pluecker-qubit";
    case MeasureKind::pluecker_general: return "pluecker-general";
  }
  return "unknown";
}

MeasureKind parse_measure_kind(std::string_view name) {
  if (name == "segre") return MeasureKind::segre;
  if (name == "pluecker-qubit") return MeasureKind::pluecker_qubit;
  if (name == "pluecker-general") return MeasureKind::pluecker_general;
  throw Error(ErrorCode::invalid_argument, "unknown measure kind '" + std::string(name) + "'");
}

MeasureReport make_report(MeasureKind kind, double norm_const, std::vector<double> contributions) {
  if (!(norm_const > 0.0)) throw Error(ErrorCode::invalid_argument, "norm_const must be positive");
  MeasureReport report{kind, norm_const, {}, 0.0};
  double sum = 0.0;
  for (std::size_t j = 0; j < contributions.size(); ++j) {
    report.per_flattening.push_back({static_cast<int>(j) + 1, contributions[j]});
    sum += contributions[j];
  }
  report.total = std::sqrt(norm_const * sum);
  return report;
}

nlohmann::ordered_json to_json(const MeasureReport& report) {
  nlohmann::ordered_json parts = nlohmann::ordered_json::array();
  for (const auto& c : report.per_flattening) {
    parts.push_back({{"party", c.party}, {"value", c.value}});
  }
  return {{"kind", to_string(report.kind)},
          {"norm_const", report.norm_const},
          {"per_flattening", std::move(parts)},
          {"total", report.total}};
}

}  // namespace projent

#pragma once

#include <string_view>
#include <vector>

#include <json.hpp>

namespace projent {

enum class MeasureKind { segre, pluecker_qubit, pluecker_general };

std::string_view to_string(MeasureKind kind) noexcept;
MeasureKind parse_measure_kind(std::string_view name);

struct PartyContribution {
  int party;
  double value;
};

// total == sqrt(norm_const * sum of contributions).
struct MeasureReport {
  MeasureKind kind;
  double norm_const;
  std::vector<PartyContribution> per_flattening;
  double total;
};

// Assembles a report from per-party contributions in party order.
MeasureReport make_report(MeasureKind kind, double norm_const, std::vector<double> contributions);

nlohmann::ordered_json to_json(const MeasureReport& report);

}  // namespace projent

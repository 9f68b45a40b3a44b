#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "enriques/cycles.hpp"
#include "enriques/lattice.hpp"

namespace enriques {

inline constexpr const char* kToolName = "enriques-verify";
inline constexpr const char* kToolVersion = "0.1.0";

nlohmann::json to_json(const ProductPoint& p);
ProductPoint product_point_from_json(const nlohmann::json& j, PeriodBasis basis_e,
                                     PeriodBasis basis_f);

nlohmann::json to_json(const ActionSpec& spec);
ActionSpec action_spec_from_json(const nlohmann::json& j);

/// {spec, n, levels, status, element?, witness?, criterion_value?,
///  condition_fired, notes}
nlohmann::json verdict_record(const ActionSpec& spec, int n, const FreenessVerdict& verdict);

struct ParsedVerdict {
  ActionSpec spec;
  int n;
  std::optional<ModelLevels> levels;
  FreenessVerdict verdict;
};
ParsedVerdict verdict_from_record(const nlohmann::json& j);

/// One CLI invocation: command, parameters, result payload.
struct RunRecord {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json result = nlohmann::json::object();
  std::optional<std::uint64_t> seed;

  nlohmann::json to_json() const;
  static RunRecord from_json(const nlohmann::json& j);
  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

/// Gram matrices as JSON arrays of arrays.
IntegralLattice lattice_from_json(const nlohmann::json& j);
nlohmann::json to_json(const IntMatrix& m);

}  // namespace enriques

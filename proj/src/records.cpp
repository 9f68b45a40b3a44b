#include "enriques/records.hpp"

#include <stdexcept>

namespace enriques {

using nlohmann::json;

json to_json(const ProductPoint& p) {
  return {{"e", format_point(p.e)}, {"f", format_point(p.f)}};
}

ProductPoint product_point_from_json(const json& j, PeriodBasis basis_e,
                                     PeriodBasis basis_f) {
  return {parse_point(j.at("e").get<std::string>(), basis_e),
          parse_point(j.at("f").get<std::string>(), basis_f)};
}

json to_json(const ActionSpec& spec) {
  if (spec.is_lieberman()) {
    return {{"variant", "lieberman"},
            {"a", format_point(spec.as_lieberman().a)},
            {"a_prime", format_point(spec.as_lieberman().a_prime)}};
  }
  return {{"variant", "bdf"},
          {"row", spec.as_bdf().row},
          {"d", spec.d()},
          {"z", format_point(spec.as_bdf().z)}};
}

ActionSpec action_spec_from_json(const json& j) {
  const std::string variant = j.at("variant").get<std::string>();
  if (variant == "lieberman") {
    return ActionSpec::lieberman(parse_point(j.at("a").get<std::string>()),
                                 parse_point(j.at("a_prime").get<std::string>()));
  }
  if (variant == "bdf") {
    const int row = j.at("row").get<int>();
    return ActionSpec::bdf(row, parse_point(j.at("z").get<std::string>(), bdf_row(row).basis_f));
  }
  throw std::invalid_argument("unknown action variant '" + variant + "'");
}

json verdict_record(const ActionSpec& spec, int n, const FreenessVerdict& verdict) {
  json j;
  j["spec"] = to_json(spec);
  j["n"] = n;
  j["levels"] = verdict.levels ? json{{"e", verdict.levels->e}, {"f", verdict.levels->f}}
                               : json(nullptr);
  j["status"] = std::string(to_string(verdict.status));
  if (verdict.element) j["element"] = *verdict.element;
  if (verdict.criterion_value) j["criterion_value"] = format_point(*verdict.criterion_value);
  if (verdict.witness) {
    json points = json::array();
    for (const auto& p : verdict.witness->points()) points.push_back(to_json(p));
    j["witness"] = std::move(points);
  }
  j["condition_fired"] = verdict.condition_fired;
  j["notes"] = verdict.notes;
  return j;
}

ParsedVerdict verdict_from_record(const json& j) {
  ActionSpec spec = action_spec_from_json(j.at("spec"));
  const int n = j.at("n").get<int>();
  std::optional<ModelLevels> levels;
  if (j.contains("levels") && !j.at("levels").is_null()) {
    levels = ModelLevels{j.at("levels").at("e").get<std::int64_t>(),
                         j.at("levels").at("f").get<std::int64_t>()};
  }
  FreenessVerdict v;
  const std::string status = j.at("status").get<std::string>();
  bool known = false;
  for (auto s : {FreenessStatus::FreeByCriterion, FreenessStatus::NotFree,
                 FreenessStatus::UnknownAtLevel}) {
    if (to_string(s) == status) {
      v.status = s;
      known = true;
    }
  }
  if (!known) throw std::invalid_argument("unknown status '" + status + "'");
  v.levels = levels;
  if (j.contains("element")) v.element = j.at("element").get<int>();
  if (j.contains("criterion_value")) {
    v.criterion_value = parse_point(j.at("criterion_value").get<std::string>(),
                                    spec.is_lieberman() ? PeriodBasis::Generic : spec.basis_f());
  }
  if (j.contains("witness")) {
    std::vector<ProductPoint> points;
    for (const auto& p : j.at("witness")) {
      points.push_back(product_point_from_json(p, spec.basis_e(), spec.basis_f()));
    }
    v.witness = ZeroCycle(std::move(points), spec.kernel());
  }
  v.condition_fired = j.value("condition_fired", "");
  v.notes = j.value("notes", std::vector<std::string>{});
  return {std::move(spec), n, levels, std::move(v)};
}

json RunRecord::to_json() const {
  json j{{"tool", kToolName},
         {"version", kToolVersion},
         {"command", command},
         {"parameters", parameters},
         {"result", result}};
  if (seed) j["seed"] = *seed;
  return j;
}

RunRecord RunRecord::from_json(const json& j) {
  RunRecord r;
  r.command = j.at("command").get<std::string>();
  r.parameters = j.value("parameters", json::object());
  r.result = j.value("result", json::object());
  if (j.contains("seed")) r.seed = j.at("seed").get<std::uint64_t>();
  return r;
}

IntegralLattice lattice_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("Gram matrix must be a JSON array of rows");
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw std::invalid_argument("Gram rows must be arrays");
    std::vector<std::int64_t> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw std::invalid_argument("Gram entries must be integers");
      r.push_back(x.get<std::int64_t>());
    }
    rows.push_back(std::move(r));
  }
  IntMatrix m = IntMatrix::from_rows(rows);
  if (m.rows() != m.cols()) throw std::invalid_argument("Gram matrix must be square");
  return IntegralLattice(std::move(m));
}

json to_json(const IntMatrix& m) { return m.to_rows(); }

}  // namespace enriques

// enriques-verify: command-line front end for the enriques library.
//
// Exit codes: 0 success, 1 verified negative finding, 2 usage error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "enriques/cycles.hpp"
#include "enriques/lattice.hpp"
#include "enriques/numerics.hpp"
#include "enriques/records.hpp"
#include "enriques/torsion.hpp"

namespace {

using nlohmann::json;
using namespace enriques;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join(const std::set<int>& s) {
  std::string out = "{";
  bool first = true;
  for (int x : s) {
    out += (first ? "" : ",") + std::to_string(x);
    first = false;
  }
  return out + "}";
}

std::string join(const std::vector<std::int64_t>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

void emit(const RunRecord& record) { std::cout << record.to_json().dump(2) << "\n"; }

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw UsageError("unsupported --format '" + format + "'");
}

ModelLevels parse_levels(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--levels expects E,F");
  try {
    ModelLevels l{std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1))};
    if (l.e < 1 || l.f < 1) throw UsageError("levels must be positive");
    return l;
  } catch (const std::logic_error&) {
    throw UsageError("--levels expects two integers E,F");
  }
}

// ---------------------------------------------------------------------------
// indices

struct IndicesOptions {
  std::optional<int> n;
  std::optional<int> b2;
  std::optional<std::string> family;
  std::string format = "text";
};

json diff_json(const IndexDiff& d) {
  return {{"computed", d.computed},
          {"published", d.published},
          {"published_only", d.published_only},
          {"computed_only", d.computed_only}};
}

int run_indices(const IndicesOptions& o) {
  check_format(o.format, {"text", "json"});
  if (!o.n && !o.b2 && !o.family) throw UsageError("indices needs --n, --b2 or --family");
  RunRecord rec;
  rec.command = "indices";
  std::optional<int> b2 = o.b2;
  if (o.family) {
    const Family f = parse_family(*o.family);
    if ((f == Family::HilbK3 || f == Family::Kummer) && !o.n) {
      throw UsageError("--family " + *o.family + " needs --n");
    }
    const FamilyInvariants inv = family_invariants(f, o.n.value_or(1));
    rec.parameters["family"] = *o.family;
    rec.parameters["n"] = inv.n;
    rec.result["family_candidates"] = family_index_candidates(f, inv.n);
    rec.result["admissible"] = admissible_indices(inv.n);
    rec.result["b2"] = inv.b2;
    if (!b2) b2 = inv.b2;
  } else if (o.n) {
    rec.parameters["n"] = *o.n;
    rec.result["admissible"] = admissible_indices(*o.n);
  }
  if (b2) {
    rec.parameters["b2"] = *b2;
    rec.result["phi_bound"] = phi_bound_indices(*b2);
    if (published_index_row(*b2)) rec.result["published_diff"] = diff_json(index_table_diff(*b2));
  }
  if (o.n && !o.family && b2) {
    std::set<int> both;
    for (int d : admissible_indices(*o.n)) {
      if (rec.result["phi_bound"].get<std::set<int>>().contains(d)) both.insert(d);
    }
    rec.result["candidates"] = both;
  }

  if (o.format == "json") {
    emit(rec);
    return kOk;
  }
  const json& r = rec.result;
  if (r.contains("family_candidates")) {
    std::cout << "family " << *o.family << " (n=" << rec.parameters["n"] << ", b2="
              << r["b2"] << "): " << join(r["family_candidates"].get<std::set<int>>()) << "\n";
  }
  if (r.contains("admissible")) {
    std::cout << "d | n+1: " << join(r["admissible"].get<std::set<int>>()) << "\n";
  }
  if (r.contains("phi_bound")) {
    std::cout << "phi(d) < b2=" << *b2 << ": " << join(r["phi_bound"].get<std::set<int>>()) << "\n";
  }
  if (r.contains("candidates")) {
    std::cout << "candidates: " << join(r["candidates"].get<std::set<int>>()) << "\n";
  }
  if (r.contains("published_diff")) {
    const auto& d = r["published_diff"];
    const auto published_only = d["published_only"].get<std::set<int>>();
    const auto computed_only = d["computed_only"].get<std::set<int>>();
    std::cout << "published table: " << join(d["published"].get<std::set<int>>()) << "\n";
    std::cout << "diff: ";
    if (published_only.empty()) {
      std::cout << "none published-only";
    } else {
      for (int x : published_only) std::cout << "+" << x << " ";
      std::cout << "(published only)";
    }
    std::cout << " / ";
    if (computed_only.empty()) {
      std::cout << "none missing";
    } else {
      for (int x : computed_only) std::cout << "+" << x << " ";
      std::cout << "(computed only)";
    }
    std::cout << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// hodge / families

int run_hodge(int n, int d, const std::string& format) {
  check_format(format, {"text", "json", "csv"});
  const EnriquesShape shape(n, d);
  std::vector<int> row;
  for (int p = 0; p <= 2 * n; ++p) row.push_back(hodge_h_p0(shape, p));
  int alternating = 0;
  for (int p = 0; p <= 2 * n; ++p) alternating += (p % 2 == 0 ? 1 : -1) * row[static_cast<std::size_t>(p)];
  RunRecord rec;
  rec.command = "hodge";
  rec.parameters = {{"n", n}, {"d", d}};
  rec.result = {{"h_p0", row},
                {"chi", chi_structure_sheaf(shape)},
                {"alternating_sum", alternating}};
  if (format == "json") {
    emit(rec);
  } else if (format == "csv") {
    std::cout << "p,h_p0\n";
    for (int p = 0; p <= 2 * n; ++p) std::cout << p << "," << row[static_cast<std::size_t>(p)] << "\n";
  } else {
    std::cout << "h^{p,0} for p=0.." << 2 * n << ": ";
    for (std::size_t p = 0; p < row.size(); ++p) std::cout << (p ? "," : "") << row[p];
    std::cout << "\nchi(O_Y) = " << chi_structure_sheaf(shape) << "\n";
  }
  return kOk;
}

int run_families(int n, const std::string& format) {
  check_format(format, {"text", "json", "csv"});
  RunRecord rec;
  rec.command = "families";
  rec.parameters = {{"n", n}};
  rec.result = json::array();
  for (Family f : {Family::HilbK3, Family::Kummer, Family::OGrady6, Family::OGrady10}) {
    const FamilyInvariants inv = family_invariants(f, n);
    rec.result.push_back({{"family", to_string(f)},
                          {"n", inv.n},
                          {"dim", inv.dim},
                          {"chi", inv.chi},
                          {"b2", inv.b2},
                          {"index_candidates", family_index_candidates(f, inv.n)}});
  }
  if (format == "json") {
    emit(rec);
    return kOk;
  }
  if (format == "csv") std::cout << "family,n,dim,chi,b2\n";
  for (const auto& r : rec.result) {
    if (format == "csv") {
      std::cout << r["family"].get<std::string>() << "," << r["n"] << "," << r["dim"] << ","
                << r["chi"] << "," << r["b2"] << "\n";
    } else {
      std::cout << r["family"].get<std::string>() << ": dim=" << r["dim"] << " chi=" << r["chi"]
                << " b2=" << r["b2"]
                << " indices=" << join(r["index_candidates"].get<std::set<int>>()) << "\n";
    }
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// action

struct ActionOptions {
  std::optional<int> row;
  bool lieberman = false;
  int n = 1;
  std::string z = "0";
  std::string a = "0";
  std::string a_prime = "1/2";
  std::optional<std::string> levels;
  std::string mode = "criterion";
  std::string format = "json";
  unsigned jobs = 1;
  bool no_fail = false;
};

ActionSpec spec_from(const ActionOptions& o) {
  if (o.lieberman == o.row.has_value()) {
    throw UsageError("exactly one of --row or --lieberman is required");
  }
  try {
    if (o.lieberman) return ActionSpec::lieberman(parse_point(o.a), parse_point(o.a_prime));
    return ActionSpec::bdf(*o.row, parse_point(o.z, bdf_row(*o.row).basis_f));
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

void print_verdict_text(const json& v) {
  std::cout << "spec: " << v["spec"].dump() << "\n";
  std::cout << "n: " << v["n"] << "\n";
  std::cout << "status: " << v["status"].get<std::string>() << "\n";
  if (!v["levels"].is_null()) {
    std::cout << "levels: E=" << v["levels"]["e"] << " F=" << v["levels"]["f"] << "\n";
  }
  std::cout << "condition: " << v["condition_fired"].get<std::string>() << "\n";
  if (v.contains("element")) std::cout << "element: g^" << v["element"] << "\n";
  if (v.contains("criterion_value")) {
    std::cout << "criterion value: " << v["criterion_value"].get<std::string>() << "\n";
  }
  if (v.contains("witness")) {
    std::cout << "witness:";
    for (const auto& p : v["witness"]) {
      std::cout << " (" << p["e"].get<std::string>() << ", " << p["f"].get<std::string>() << ")";
    }
    std::cout << "\n";
  }
  for (const auto& note : v["notes"]) std::cout << "note: " << note.get<std::string>() << "\n";
}

int run_action(const ActionOptions& o) {
  check_format(o.format, {"text", "json", "csv"});
  const ActionSpec spec = spec_from(o);
  RunRecord rec;
  rec.command = "action";
  rec.parameters = {{"spec", to_json(spec)}, {"n", o.n}, {"mode", o.mode}};

  if (o.mode == "scan") {
    if (spec.is_lieberman()) throw UsageError("scan needs --row");
    const auto entries = scan_z(*o.row, o.n, o.jobs);
    if (o.format == "csv") {
      std::cout << "z,status,element,criterion_value\n";
      for (const auto& e : entries) {
        std::cout << format_point(e.z) << "," << to_string(e.verdict.status) << ","
                  << (e.verdict.element ? std::to_string(*e.verdict.element) : "") << ","
                  << (e.verdict.criterion_value ? format_point(*e.verdict.criterion_value) : "")
                  << "\n";
      }
      return kOk;
    }
    json list = json::array();
    std::size_t free_count = 0;
    for (const auto& e : entries) {
      list.push_back({{"z", format_point(e.z)}, {"status", to_string(e.verdict.status)}});
      if (e.verdict.status == FreenessStatus::FreeByCriterion) ++free_count;
    }
    rec.result = {{"entries", list}, {"free_count", free_count}, {"total", entries.size()}};
    if (o.format == "json") {
      emit(rec);
    } else {
      for (const auto& e : list) {
        std::cout << e["z"].get<std::string>() << " " << e["status"].get<std::string>() << "\n";
      }
      std::cout << free_count << " of " << entries.size() << " free by criterion\n";
    }
    return kOk;
  }

  if (o.mode == "invariance") {
    const ModelLevels levels = o.levels ? parse_levels(*o.levels) : minimal_levels(spec);
    const bool criterion = invariance_criterion(spec, o.n);
    const Action action = build_action(spec, levels);
    const InvarianceResult brute =
        invariance_bruteforce(action, o.n, PointModel::full(levels, action.kernel));
    rec.result = {{"criterion", criterion},
                  {"bruteforce", brute.invariant},
                  {"levels", {{"e", levels.e}, {"f", levels.f}}},
                  {"cycles_checked", brute.cycles_checked}};
    if (brute.counterexample) {
      json pts = json::array();
      for (const auto& p : brute.counterexample->points()) pts.push_back(to_json(p));
      rec.result["counterexample"] = pts;
    }
    if (o.format == "json") {
      emit(rec);
    } else {
      std::cout << "criterion: " << (criterion ? "invariant" : "hypotheses fail") << "\n"
                << "bruteforce at E=" << levels.e << " F=" << levels.f << ": "
                << (brute.invariant ? "invariant" : "NOT invariant") << " ("
                << brute.cycles_checked << " zero-sum cycles)\n";
    }
    return brute.invariant || o.no_fail ? kOk : kNegative;
  }

  FreenessVerdict verdict;
  if (o.mode == "criterion") {
    try {
      verdict = freeness_criterion(spec, o.n);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else if (o.mode == "bruteforce") {
    const ModelLevels levels = o.levels ? parse_levels(*o.levels)
                                        : default_levels(spec, o.n, level_multiplier_from_env());
    verdict = freeness_bruteforce(build_action(spec, levels), o.n);
  } else {
    throw UsageError("unknown --mode '" + o.mode + "'");
  }
  rec.result = verdict_record(spec, o.n, verdict);
  if (o.format == "text") {
    print_verdict_text(rec.result);
  } else {
    emit(rec);
  }
  return verdict.status == FreenessStatus::NotFree && !o.no_fail ? kNegative : kOk;
}

// ---------------------------------------------------------------------------
// verify-witness

int run_verify_witness(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
  const json& payload = j.contains("result") ? j.at("result") : j;
  ParsedVerdict parsed = [&] {
    try {
      return verdict_from_record(payload);
    } catch (const std::exception& e) {
      throw UsageError(std::string("malformed verdict record: ") + e.what());
    }
  }();
  if (!parsed.verdict.witness) throw UsageError("record carries no witness");
  if (!parsed.levels) throw UsageError("record carries no model levels");
  const Action action = build_action(parsed.spec, *parsed.levels);
  const bool ok = verify_witness(action, parsed.n, parsed.verdict);
  std::cout << (ok ? "verified" : "rejected") << ": " << parsed.spec.describe()
            << " n=" << parsed.n << "\n";
  return ok ? kOk : kNegative;
}

// ---------------------------------------------------------------------------
// lattice

IntegralLattice named_lattice(const std::string& name) {
  if (name == "e8") return e8(1);
  if (name == "e8-") return e8(-1);
  if (name == "h") return hyperbolic_plane();
  if (name == "h2") return twist(hyperbolic_plane(), 2);
  if (name == "k3") return k3_lattice_with_involution().lattice;
  if (name == "ns") return enriques_ns_model();
  if (name == "antiinvariant-k3") {
    const auto k3 = k3_lattice_with_involution();
    return eigenlattice(k3.lattice, k3.involution, -1).lattice;
  }
  throw UsageError("unknown lattice '" + name +
                   "' (e8, e8-, h, h2, k3, ns, antiinvariant-k3)");
}

IntegralLattice lattice_from_options(const std::optional<std::string>& gram,
                                     const std::optional<std::string>& named) {
  if (gram.has_value() == named.has_value()) {
    throw UsageError("give exactly one of --gram or --named");
  }
  if (named) return named_lattice(*named);
  try {
    return lattice_from_json(json::parse(*gram));
  } catch (const std::exception& e) {
    throw UsageError(std::string("malformed Gram matrix: ") + e.what());
  }
}

json lattice_info(const IntegralLattice& l) {
  const Signature s = l.signature();
  json j{{"rank", l.rank()},
         {"determinant", l.determinant()},
         {"even", l.is_even()},
         {"signature", {s.positive, s.negative}}};
  if (s.zero == 0) j["discriminant"] = discriminant_group(l);
  return j;
}

void print_matrix(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string cell = std::to_string(m(i, j));
      std::cout << std::string(cell.size() < 3 ? 3 - cell.size() : 0, ' ') << cell;
    }
    std::cout << "\n";
  }
}

int run_lattice(const std::string& what, const std::optional<std::string>& gram,
                const std::optional<std::string>& named, std::int64_t norm, std::int64_t bound,
                const std::string& format) {
  check_format(format, {"text", "json"});
  RunRecord rec;
  rec.command = "lattice";
  rec.parameters = {{"what", what}};
  const bool text = format == "text";

  if (what == "k3") {
    const auto k3 = k3_lattice_with_involution();
    rec.result = lattice_info(k3.lattice);
    rec.result["involution"] = to_json(k3.involution.matrix());
  } else if (what == "antiinvariant-k3" || what == "invariant-k3") {
    const int sign = what == "invariant-k3" ? 1 : -1;
    const auto k3 = k3_lattice_with_involution();
    const Sublattice sub = eigenlattice(k3.lattice, k3.involution, sign);
    rec.result = lattice_info(sub.lattice);
    if (sign == -1) {
      const Sublattice standard = antiinvariant_k3_standard_basis();
      const IntMatrix target = IntMatrix::block_diagonal(
          {e8(-1).gram().scaled(2), hyperbolic_plane().gram(), hyperbolic_plane().gram().scaled(2)});
      rec.result["basis"] = to_json(standard.basis.transpose());
      rec.result["gram"] = to_json(standard.lattice.gram());
      rec.result["gram_is_e8(-2)+h+h(2)"] = standard.lattice.gram() == target;
      rec.result["same_span_as_kernel"] = same_span(standard.basis, sub.basis);
    } else {
      rec.result["basis"] = to_json(sub.basis.transpose());
      rec.result["gram"] = to_json(sub.lattice.gram());
    }
  } else if (what == "info") {
    rec.result = lattice_info(lattice_from_options(gram, named));
  } else if (what == "roots") {
    const IntegralLattice l = lattice_from_options(gram, named);
    rec.parameters["norm"] = norm;
    rec.parameters["bound"] = bound;
    const auto roots = roots_in_box(l, norm, bound);
    rec.result = {{"count", roots.size()}, {"bound", bound}, {"norm", norm}, {"vectors", roots}};
    if (text) {
      std::cout << roots.size() << " vectors of norm " << norm << " with |coefficients| <= "
                << bound << " (complete only inside the box)\n";
      return kOk;
    }
  } else {
    throw UsageError("unknown lattice action '" + what +
                     "' (k3, antiinvariant-k3, invariant-k3, info, roots)");
  }

  if (!text) {
    emit(rec);
    return kOk;
  }
  const json& r = rec.result;
  std::cout << "rank " << r["rank"] << ", determinant " << r["determinant"] << ", signature ("
            << r["signature"][0] << "," << r["signature"][1] << "), "
            << (r["even"].get<bool>() ? "even" : "odd") << "\n";
  if (r.contains("discriminant")) {
    std::cout << "discriminant group elementary divisors: "
              << join(r["discriminant"].get<std::vector<std::int64_t>>()) << "\n";
  }
  if (r.contains("gram")) {
    std::cout << "Gram matrix:\n";
    print_matrix(lattice_from_json(r["gram"]).gram());
  }
  if (r.contains("gram_is_e8(-2)+h+h(2)")) {
    std::cout << "block-diagonal E8(-2) + H + H(2): "
              << (r["gram_is_e8(-2)+h+h(2)"].get<bool>() ? "yes" : "no")
              << "; spans the computed eigenlattice: "
              << (r["same_span_as_kernel"].get<bool>() ? "yes" : "no") << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// mukai

int run_mukai(std::int64_t r, const std::string& l_text, std::optional<std::int64_t> chi,
              std::optional<std::int64_t> s, const std::string& format) {
  check_format(format, {"text", "json"});
  if (chi.has_value() == s.has_value()) throw UsageError("give exactly one of --chi or --s");
  const IntegralLattice ns = enriques_ns_model();
  std::vector<std::int64_t> l;
  if (l_text == "0") {
    l.assign(ns.rank(), 0);
  } else {
    std::stringstream in(l_text);
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        l.push_back(std::stoll(item));
      } catch (const std::logic_error&) {
        throw UsageError("--l expects comma-separated integers");
      }
    }
    if (l.size() != ns.rank()) {
      throw UsageError("--l needs " + std::to_string(ns.rank()) + " coordinates or 0");
    }
  }
  const MukaiVector v = chi ? MukaiVector::from_chi(r, l, *chi) : MukaiVector{r, l, *s};
  const AdmissibilityReport rep = moduli_admissibility(v, ns);
  RunRecord rec;
  rec.command = "mukai";
  rec.parameters = {{"r", v.r}, {"l", v.l}, {"s", v.s}, {"chi", v.chi()}};
  rec.result = {{"square", rep.square},
                {"dimension", rep.dimension},
                {"n", rep.n},
                {"n_odd", rep.n_odd},
                {"primitive", rep.primitive},
                {"chi_odd", rep.chi_odd},
                {"square_nonnegative", rep.square_nonnegative},
                {"admissible", rep.admissible},
                {"failures", rep.failures}};
  if (rep.admissible) {
    rec.result["quotient"] = {{"dimension", rep.dimension}, {"index", rep.quotient_index}};
  }
  if (format == "json") {
    emit(rec);
  } else {
    std::cout << "v = (" << v.r << ", [" << join(v.l) << "], " << v.s << "), chi = " << v.chi()
              << "\nv^2 = " << rep.square << ", dim = v^2+2 = " << rep.dimension
              << ", n = " << rep.n << "\n";
    if (rep.admissible) {
      std::cout << "admissible: Enriques quotient of dimension " << rep.dimension << ", index "
                << rep.quotient_index << "\n";
    } else {
      std::cout << "not admissible, failed:";
      for (const auto& f : rep.failures) std::cout << " " << f;
      std::cout << "\n";
    }
  }
  return rep.admissible ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Enriques manifold constructions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  IndicesOptions indices;
  auto* cmd_indices = app.add_subcommand("indices", "Possible indices d");
  cmd_indices->add_option("--n", indices.n, "Half-dimension n");
  cmd_indices->add_option("--b2", indices.b2, "Second Betti number");
  cmd_indices->add_option("--family", indices.family, "hilb, kummer, ogrady6, ogrady10");
  cmd_indices->add_option("--format", indices.format, "text or json");

  int hodge_n = 1, hodge_d = 2;
  std::string hodge_format = "text";
  auto* cmd_hodge = app.add_subcommand("hodge", "Hodge numbers h^{p,0} and chi(O_Y)");
  cmd_hodge->add_option("--n", hodge_n, "Half-dimension n")->required();
  cmd_hodge->add_option("--d", hodge_d, "Index d")->required();
  cmd_hodge->add_option("--format", hodge_format, "text, json or csv");

  int families_n = 1;
  std::string families_format = "text";
  auto* cmd_families = app.add_subcommand("families", "Invariants of the known families");
  cmd_families->add_option("--n", families_n, "n for Hilb^n and Km^n");
  cmd_families->add_option("--format", families_format, "text, json or csv");

  ActionOptions action;
  auto* cmd_action = app.add_subcommand("action", "Invariance and freeness of a group action");
  cmd_action->add_option("--row", action.row, "Bielliptic row 1..7");
  cmd_action->add_flag("--lieberman", action.lieberman, "Lieberman involution on E x E'");
  cmd_action->add_option("--n", action.n, "Kummer parameter n (cycles of length n+1)");
  cmd_action->add_option("--z", action.z, "Translation z on F, e.g. 1/2 or 1/3+1/3*tau");
  cmd_action->add_option("--a", action.a, "Lieberman translation a on E");
  cmd_action->add_option("--a-prime", action.a_prime, "Lieberman translation a' on E'");
  cmd_action->add_option("--levels", action.levels, "Model levels E,F for brute force");
  cmd_action->add_option("--mode", action.mode, "criterion, bruteforce, scan or invariance");
  cmd_action->add_option("--format", action.format, "json, text or csv");
  cmd_action->add_option("--jobs", action.jobs, "Worker threads for scan");
  cmd_action->add_flag("--no-fail", action.no_fail, "Exit 0 on negative findings");

  std::string witness_path;
  auto* cmd_verify = app.add_subcommand("verify-witness", "Re-check a NOT_FREE witness record");
  cmd_verify->add_option("record", witness_path, "JSON file from 'action', or - for stdin")
      ->required();

  std::string lattice_what;
  std::optional<std::string> lattice_gram, lattice_named;
  std::int64_t lattice_norm = -2, lattice_bound = 1;
  std::string lattice_format = "text";
  auto* cmd_lattice = app.add_subcommand("lattice", "Integral lattice computations");
  cmd_lattice->add_option("what", lattice_what, "k3, antiinvariant-k3, invariant-k3, info, roots")
      ->required();
  cmd_lattice->add_option("--gram", lattice_gram, "Gram matrix as a JSON array of rows");
  cmd_lattice->add_option("--named", lattice_named, "e8, e8-, h, h2, k3, ns, antiinvariant-k3");
  cmd_lattice->add_option("--norm", lattice_norm, "Target self-intersection for roots");
  cmd_lattice->add_option("--bound", lattice_bound, "Coefficient box for roots");
  cmd_lattice->add_option("--format", lattice_format, "text or json");

  std::int64_t mukai_r = 0;
  std::string mukai_l = "0";
  std::optional<std::int64_t> mukai_chi, mukai_s;
  std::string mukai_format = "text";
  auto* cmd_mukai = app.add_subcommand("mukai", "Mukai vector admissibility");
  cmd_mukai->add_option("--r", mukai_r, "Rank r")->required();
  cmd_mukai->add_option("--l", mukai_l, "First Chern class: 10 comma-separated integers or 0");
  cmd_mukai->add_option("--chi", mukai_chi, "Euler characteristic chi");
  cmd_mukai->add_option("--s", mukai_s, "Third component s = chi - r");
  cmd_mukai->add_option("--format", mukai_format, "text or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*cmd_indices) return run_indices(indices);
    if (*cmd_hodge) return run_hodge(hodge_n, hodge_d, hodge_format);
    if (*cmd_families) return run_families(families_n, families_format);
    if (*cmd_action) return run_action(action);
    if (*cmd_verify) return run_verify_witness(witness_path);
    if (*cmd_lattice) {
      return run_lattice(lattice_what, lattice_gram, lattice_named, lattice_norm, lattice_bound,
                         lattice_format);
    }
    if (*cmd_mukai) return run_mukai(mukai_r, mukai_l, mukai_chi, mukai_s, mukai_format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return kUsage;
}

#include "enriques/numerics.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace enriques {

EnriquesShape::EnriquesShape(int n, int d) : n_(n), d_(d) {
  if (n < 1) throw std::invalid_argument("half-dimension n must be >= 1");
  if (d < 2 || (n + 1) % d != 0) {
    throw std::invalid_argument("index d=" + std::to_string(d) +
                                " must be >= 2 and divide n+1=" + std::to_string(n + 1));
  }
}

std::string to_string(Family family) {
  switch (family) {
    case Family::HilbK3: return "hilb";
    case Family::Kummer: return "kummer";
    case Family::OGrady6: return "ogrady6";
    case Family::OGrady10: return "ogrady10";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::HilbK3, Family::Kummer, Family::OGrady6, Family::OGrady10}) {
    if (to_string(f) == name) return f;
  }
  throw std::invalid_argument("unknown family '" + name +
                              "' (expected hilb, kummer, ogrady6, ogrady10)");
}

FamilyInvariants family_invariants(Family family, int n) {
  switch (family) {
    case Family::HilbK3:
      if (n < 1) throw std::invalid_argument("n must be >= 1");
      return {family, n, 2 * n, n + 1, 23};
    case Family::Kummer:
      if (n < 1) throw std::invalid_argument("n must be >= 1");
      return {family, n, 2 * n, n + 1, 7};
    case Family::OGrady6:
      return {family, 3, 6, 4, 8};
    case Family::OGrady10:
      return {family, 5, 10, 6, 24};
  }
  throw std::invalid_argument("unknown family");
}

std::int64_t euler_phi(std::int64_t d) {
  if (d < 1) throw std::invalid_argument("euler_phi needs d >= 1");
  std::int64_t result = d;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % p == 0) {
      while (d % p == 0) d /= p;
      result -= result / p;
    }
  }
  if (d > 1) result -= result / d;
  return result;
}

std::set<int> admissible_indices(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::set<int> out;
  for (int d = 2; d <= n + 1; ++d) {
    if ((n + 1) % d == 0) out.insert(d);
  }
  return out;
}

std::set<int> phi_bound_indices(int b2, std::optional<int> d_max) {
  if (b2 < 2) throw std::invalid_argument("b2 must be >= 2");
  const int limit = d_max.value_or(2 * b2 * b2);
  std::set<int> out;
  for (int d = 2; d <= limit; ++d) {
    if (euler_phi(d) < b2) out.insert(d);
  }
  return out;
}

std::set<int> family_index_candidates(Family family, int n) {
  const FamilyInvariants inv = family_invariants(family, n);
  const std::set<int> by_n = admissible_indices(inv.n);
  const std::set<int> by_phi = phi_bound_indices(inv.b2);
  std::set<int> out;
  std::set_intersection(by_n.begin(), by_n.end(), by_phi.begin(), by_phi.end(),
                        std::inserter(out, out.end()));
  return out;
}

int hodge_h_p0(const EnriquesShape& shape, int p) {
  if (p < 0) throw std::invalid_argument("p must be >= 0");
  return (p % (2 * shape.d()) == 0 && p <= 2 * shape.n()) ? 1 : 0;
}

int chi_structure_sheaf(const EnriquesShape& shape) {
  return (shape.n() + 1) / shape.d();
}

int chi_structure_sheaf(Family family, int n) { return family_invariants(family, n).chi; }

namespace {

std::set<int> range_set(int lo, int hi, std::initializer_list<int> extra) {
  std::set<int> s(extra);
  for (int d = lo; d <= hi; ++d) s.insert(d);
  return s;
}

}  // namespace

const std::vector<PublishedIndexRow>& published_index_table() {
  static const std::vector<PublishedIndexRow> table{
      {7, "Km^n(A)", range_set(2, 10, {12, 14, 18, 24})},
      {23, "Hilb^n(S)",
       range_set(2, 28, {30, 32, 33, 34, 36, 38, 40, 42, 44, 46, 50, 54, 66})},
  };
  return table;
}

std::optional<PublishedIndexRow> published_index_row(int b2) {
  for (const auto& row : published_index_table()) {
    if (row.b2 == b2) return row;
  }
  return std::nullopt;
}

IndexDiff index_table_diff(int b2) {
  const auto row = published_index_row(b2);
  if (!row) throw std::out_of_range("no published index row for b2=" + std::to_string(b2));
  IndexDiff diff;
  diff.computed = phi_bound_indices(b2);
  diff.published = row->indices;
  std::set_difference(diff.published.begin(), diff.published.end(), diff.computed.begin(),
                      diff.computed.end(),
                      std::inserter(diff.published_only, diff.published_only.end()));
  std::set_difference(diff.computed.begin(), diff.computed.end(), diff.published.begin(),
                      diff.published.end(),
                      std::inserter(diff.computed_only, diff.computed_only.end()));
  return diff;
}

}  // namespace enriques

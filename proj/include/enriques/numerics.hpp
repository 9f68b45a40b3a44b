#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace enriques {

/// Half-dimension n and index d of an Enriques manifold; d >= 2 and d | n+1.
class EnriquesShape {
 public:
  /// Throws std::invalid_argument when the index is not admissible.
  EnriquesShape(int n, int d);

  int n() const { return n_; }
  int d() const { return d_; }
  int dimension() const { return 2 * n_; }

 private:
  int n_;
  int d_;
};

enum class Family { HilbK3, Kummer, OGrady6, OGrady10 };

std::string to_string(Family family);
/// Accepts "hilb", "kummer", "ogrady6", "ogrady10".
Family parse_family(const std::string& name);

struct FamilyInvariants {
  Family family;
  int n;  // half-dimension
  int dim;
  int chi;
  int b2;
};

/// Invariants of the known hyperkaehler families. n is used for HilbK3 and
/// Kummer only.
FamilyInvariants family_invariants(Family family, int n = 1);

std::int64_t euler_phi(std::int64_t d);

/// {d >= 2 : d | n+1}.
std::set<int> admissible_indices(int n);

/// {d >= 2 : phi(d) < b2}, searched up to d_max (default 2*b2^2, enough
/// because phi(d) >= sqrt(d/2)).
std::set<int> phi_bound_indices(int b2, std::optional<int> d_max = std::nullopt);

std::set<int> family_index_candidates(Family family, int n = 1);

/// h^{p,0} of an Enriques manifold: 1 if 2d | p and p <= 2n, else 0.
int hodge_h_p0(const EnriquesShape& shape, int p);

/// chi(O_Y) = (n+1)/d.
int chi_structure_sheaf(const EnriquesShape& shape);
/// chi(O_X) for a hyperkaehler family member.
int chi_structure_sheaf(Family family, int n = 1);

/// Index table printed alongside the phi bound, kept verbatim.
struct PublishedIndexRow {
  int b2;
  std::string family;
  std::set<int> indices;
};
const std::vector<PublishedIndexRow>& published_index_table();
std::optional<PublishedIndexRow> published_index_row(int b2);

struct IndexDiff {
  std::set<int> computed;
  std::set<int> published;
  std::set<int> published_only;
  std::set<int> computed_only;
};

/// Compares phi_bound_indices(b2) with the published row for b2.
/// Throws std::out_of_range if no row exists.
IndexDiff index_table_diff(int b2);

}  // namespace enriques

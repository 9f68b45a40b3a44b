#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "enriques/torsion.hpp"

namespace enriques {

struct ModelLevels {
  std::int64_t e = 1;
  std::int64_t f = 1;
  friend bool operator==(const ModelLevels&, const ModelLevels&) = default;
};

/// Finite point model of A = (E x F) / T: a set of canonical coset
/// representatives, sorted.
class PointModel {
 public:
  /// All points of E[level_e] x F[level_f] modulo the kernel. The kernel must
  /// lie in the level model.
  static PointModel full(ModelLevels levels, const FiniteSubgroup& kernel);
  /// An explicit point set (e.g. a subgroup), reduced modulo the kernel.
  static PointModel from_points(std::vector<ProductPoint> points,
                                const FiniteSubgroup& kernel);

  const std::vector<ProductPoint>& points() const { return points_; }
  const FiniteSubgroup& kernel() const { return kernel_; }
  std::size_t size() const { return points_.size(); }
  /// Index of an already reduced point, or nullopt.
  std::optional<std::size_t> index_of(const ProductPoint& reduced) const;
  bool contains(const ProductPoint& p) const;

 private:
  PointModel(std::vector<ProductPoint> points, FiniteSubgroup kernel);

  std::vector<ProductPoint> points_;
  FiniteSubgroup kernel_;
};

/// A multiset of points of A, stored as sorted coset representatives.
class ZeroCycle {
 public:
  ZeroCycle(std::vector<ProductPoint> points, const FiniteSubgroup& kernel);

  const std::vector<ProductPoint>& points() const { return points_; }
  std::size_t length() const { return points_.size(); }

  friend bool operator==(const ZeroCycle&, const ZeroCycle&) = default;
  friend auto operator<=>(const ZeroCycle&, const ZeroCycle&) = default;

 private:
  std::vector<ProductPoint> points_;
};

ZeroCycle act_on_cycle(const AffineAuto& g, const ZeroCycle& cycle,
                       const FiniteSubgroup& kernel);

/// Sum in A of the multiset, as a coset representative.
ProductPoint cycle_sum(const ZeroCycle& cycle, const FiniteSubgroup& kernel);

/// Visits each multiset of the given length over `points` exactly once, as
/// nondecreasing index tuples in lexicographic order. The visitor returns
/// false to stop. Returns the number of multisets visited.
std::size_t for_each_multiset(
    std::size_t universe, std::size_t length,
    const std::function<bool(std::span<const std::size_t>)>& visit);

/// Visits every multiset of the given length whose sum is 0 in A, each once,
/// in deterministic order. Returns the number visited.
std::size_t enumerate_zero_fiber(const PointModel& model, std::size_t length,
                                 const std::function<bool(const ZeroCycle&)>& visit);
std::vector<ZeroCycle> collect_zero_fiber(const PointModel& model,
                                          std::size_t length);

// ---------------------------------------------------------------------------
// Actions

/// One row of the Bagnera-de Franchis list of bielliptic surfaces.
struct BdfRow {
  int row;
  int d;
  RootOfUnity root;
  PeriodBasis basis_f;
  /// Generator of the extra translation group, if any.
  std::optional<ProductPoint> kernel_generator;
};

/// Rows 1..7. Throws std::out_of_range otherwise.
const BdfRow& bdf_row(int row);

struct LiebermanSpec {
  TorusPoint a;        // on E
  TorusPoint a_prime;  // on E', order dividing 2
};

struct BdfSpec {
  int row;
  TorusPoint z;  // on F
};

class ActionSpec {
 public:
  static ActionSpec lieberman(TorusPoint a, TorusPoint a_prime);
  static ActionSpec bdf(int row, TorusPoint z);

  bool is_lieberman() const { return std::holds_alternative<LiebermanSpec>(data_); }
  const LiebermanSpec& as_lieberman() const { return std::get<LiebermanSpec>(data_); }
  const BdfSpec& as_bdf() const { return std::get<BdfSpec>(data_); }

  /// Order of the canonical generator of G.
  int d() const;
  PeriodBasis basis_e() const { return PeriodBasis::Generic; }
  PeriodBasis basis_f() const;
  /// The root of unity acting on F (BDF only).
  std::optional<CyclotomicClass> xi() const;
  /// The translation group T~ = ker(E x F -> A); trivial for Lieberman.
  FiniteSubgroup kernel() const;
  std::string describe() const;

 private:
  explicit ActionSpec(std::variant<LiebermanSpec, BdfSpec> data)
      : data_(std::move(data)) {}
  std::variant<LiebermanSpec, BdfSpec> data_;
};

struct Action {
  ActionSpec spec;
  ModelLevels levels;
  /// Canonical generator g of G.
  AffineAuto generator;
  /// Generators of T~ as translations.
  std::vector<AffineAuto> kernel_generators;
  FiniteSubgroup kernel;
  int order = 1;
};

/// Builds the generators on the level model. Throws std::invalid_argument on
/// levels that do not hold the translations.
Action build_action(const ActionSpec& spec, ModelLevels levels);

/// Smallest levels holding every translation (used by invariance and
/// fixed-cycle searches).
ModelLevels minimal_levels(const ActionSpec& spec);

/// Levels at which the fixed-cycle search is complete:
/// F = lcm(n+1, level(z), exponent of T), E = d^2 * exponent of T~ on E.
/// Lieberman: E = lcm(n+1, level(a)), E' = lcm(4, level(a')).
/// `multiplier` scales both levels.
ModelLevels default_levels(const ActionSpec& spec, int n, std::int64_t multiplier = 1);

/// Reads ENRIQUES_LEVEL_MULTIPLIER (default 1).
std::int64_t level_multiplier_from_env();

// ---------------------------------------------------------------------------
// Criteria and searches

/// sum_{k=1}^{d-1} (d-k) xi^{k-1} m z.
TorusPoint f_component(int d, const CyclotomicClass& xi, std::int64_t m,
                       const TorusPoint& z);

/// Reduced closed forms: d=2: mz, d=3: (2+omega)mz, d=4: 2(1+i)mz,
/// d=6: 6 zeta m z. Requires z on the basis matching d.
TorusPoint f_component_reduced(int d, std::int64_t m, const TorusPoint& z);

bool invariance_criterion(const ActionSpec& spec, int n);

struct InvarianceResult {
  bool invariant = true;
  std::optional<ZeroCycle> counterexample;
  std::size_t cycles_checked = 0;
};

/// Checks every zero-sum cycle of length n+1 in the model against the
/// generator of G.
InvarianceResult invariance_bruteforce(const Action& action, int n,
                                       const PointModel& model);

enum class FreenessStatus { FreeByCriterion, NotFree, UnknownAtLevel };
std::string_view to_string(FreenessStatus status);

struct FreenessVerdict {
  FreenessStatus status = FreenessStatus::UnknownAtLevel;
  /// Exponent k of the offending element g^k.
  std::optional<int> element;
  /// Cycle fixed by g^k with sum 0 in A.
  std::optional<ZeroCycle> witness;
  /// The criterion value that landed in T (f-component, or m*a).
  std::optional<TorusPoint> criterion_value;
  std::optional<ModelLevels> levels;
  std::string condition_fired;
  std::vector<std::string> notes;
};

/// Closed-form verdict. Throws std::invalid_argument unless
/// invariance_criterion(spec, n) holds and G acts freely on A.
FreenessVerdict freeness_criterion(const ActionSpec& spec, int n);

/// Searches the model for a cycle of length n+1, fixed by a prime-order
/// element of G, with sum 0. Never returns FreeByCriterion.
FreenessVerdict freeness_bruteforce(const Action& action, int n);
FreenessVerdict freeness_bruteforce(const Action& action, int n,
                                    const PointModel& model);

/// Re-checks a NotFree witness: length n+1, fixed by g^k with g^k != 1,
/// zero sum in A.
bool verify_witness(const Action& action, int n, const FreenessVerdict& verdict);

struct ScanEntry {
  TorusPoint z;
  FreenessVerdict verdict;
};

/// Criterion verdicts for every z in F[n+1], in canonical order of z.
/// Work is split across `workers` threads; the result does not depend on it.
std::vector<ScanEntry> scan_z(int row, int n, unsigned workers = 1);

/// Whether a free involution on a set of `set_size` points induces a free
/// involution on multisets of size n.
bool q2hilb_model_check(int set_size, int n);

struct FixedCycleReport {
  /// fixed_counts[len] = number of G-fixed cycles of that length.
  std::vector<std::size_t> fixed_counts;
  /// Every fixed cycle found has length divisible by d.
  bool divisible = true;
};

/// Exhaustive search of G-fixed cycles of length 1..max_length. Throws when
/// the action on the point model is not free.
FixedCycleReport fixed_cycle_length_check(const Action& action,
                                          const PointModel& model,
                                          std::size_t max_length);

}  // namespace enriques

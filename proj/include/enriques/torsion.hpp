#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace enriques {

/// Period lattice Z + tau*Z of an elliptic curve, recorded only through the
/// complex multiplication it admits.
enum class PeriodBasis { Generic, Gauss, Eisenstein };

/// Roots of unity used as linear parts: -1, omega (order 3), i (order 4),
/// zeta (order 6).
enum class RootOfUnity { MinusOne, Omega, I, Zeta };

std::string_view to_string(PeriodBasis basis);
std::string_view to_string(RootOfUnity root);

/// 2x2 integer matrix [[a, b], [c, d]] acting on coordinate columns (x, y)
/// of the point x + y*tau.
struct Mat2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  static constexpr Mat2 identity() { return {}; }
  static constexpr Mat2 scalar(std::int64_t k) { return {k, 0, 0, k}; }

  Mat2 pow(int k) const;
  bool is_scalar() const { return b == 0 && c == 0 && a == d; }

  friend Mat2 operator*(const Mat2& lhs, const Mat2& rhs);
  friend Mat2 operator+(const Mat2& lhs, const Mat2& rhs);
  friend Mat2 operator-(const Mat2& lhs, const Mat2& rhs);
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// Multiplication by a root of unity on a period lattice that admits it.
class CyclotomicClass {
 public:
  /// Throws std::invalid_argument when the basis has no such multiplication
  /// (omega/zeta need Eisenstein, i needs Gauss).
  CyclotomicClass(RootOfUnity root, PeriodBasis basis);

  RootOfUnity root() const { return root_; }
  PeriodBasis basis() const { return basis_; }
  const Mat2& matrix() const { return matrix_; }
  int order() const;

  /// xi^k as one of the four classes. Returns nullopt when xi^k = 1 and
  /// throws when xi^k is a root of unity outside the four classes.
  std::optional<CyclotomicClass> power(int k) const;

  friend bool operator==(const CyclotomicClass&, const CyclotomicClass&) = default;

 private:
  RootOfUnity root_;
  PeriodBasis basis_;
  Mat2 matrix_;
};

/// The point (a + b*tau)/N on C/(Z + tau*Z), with residues 0 <= a, b < N.
///
/// The level N is kept as constructed so that points of a torsion model share
/// one level; equality and ordering compare the rational values, so 2/4 and
/// 1/2 are equal points.
class TorusPoint {
 public:
  /// Origin at level 1 on a generic basis.
  TorusPoint() = default;
  TorusPoint(std::int64_t a, std::int64_t b, std::int64_t level,
             PeriodBasis basis = PeriodBasis::Generic);

  static TorusPoint origin(PeriodBasis basis = PeriodBasis::Generic) {
    return TorusPoint(0, 0, 1, basis);
  }

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t level() const { return level_; }
  PeriodBasis basis() const { return basis_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  /// Exact additive order, N / gcd(a, b, N).
  std::int64_t order() const;
  /// Same point expressed at a multiple of the current level.
  TorusPoint at_level(std::int64_t level) const;
  /// Same point at the smallest level that holds it.
  TorusPoint reduced() const;
  /// True when level * p = 0, i.e. p is a point of the level-N model.
  bool lies_in_level(std::int64_t level) const;
  /// Applies an integral linear map to the coordinates.
  TorusPoint transformed(const Mat2& m) const;

  TorusPoint operator-() const;
  friend TorusPoint operator+(const TorusPoint& lhs, const TorusPoint& rhs);
  friend TorusPoint operator-(const TorusPoint& lhs, const TorusPoint& rhs);
  friend TorusPoint operator*(std::int64_t k, const TorusPoint& p);
  TorusPoint& operator+=(const TorusPoint& rhs) { return *this = *this + rhs; }

  friend bool operator==(const TorusPoint& lhs, const TorusPoint& rhs);
  friend std::strong_ordering operator<=>(const TorusPoint& lhs,
                                          const TorusPoint& rhs);

 private:
  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
  std::int64_t level_ = 1;
  PeriodBasis basis_ = PeriodBasis::Generic;
};

TorusPoint make_point(std::int64_t a, std::int64_t b, std::int64_t level,
                      PeriodBasis basis = PeriodBasis::Generic);

/// xi * p. Throws std::invalid_argument on a period basis mismatch.
TorusPoint cm_apply(const CyclotomicClass& xi, const TorusPoint& p);

/// Canonical text form "a/N+b/N*tau" at the point's own level.
std::string format_point(const TorusPoint& p);

/// Parses a sum of terms "p/q", "p/q*tau", "p*tau/q", "tau/q", "tau" or an
/// integer. The resulting level is the lcm of the denominators, so
/// parse_point(format_point(p)) == p with the same level.
TorusPoint parse_point(std::string_view text,
                       PeriodBasis basis = PeriodBasis::Generic);

/// A point of a product of two elliptic curves E x F.
struct ProductPoint {
  TorusPoint e;
  TorusPoint f;

  ProductPoint operator-() const { return {-e, -f}; }
  friend ProductPoint operator+(const ProductPoint& lhs, const ProductPoint& rhs) {
    return {lhs.e + rhs.e, lhs.f + rhs.f};
  }
  friend ProductPoint operator-(const ProductPoint& lhs, const ProductPoint& rhs) {
    return {lhs.e - rhs.e, lhs.f - rhs.f};
  }
  friend ProductPoint operator*(std::int64_t k, const ProductPoint& p) {
    return {k * p.e, k * p.f};
  }
  ProductPoint& operator+=(const ProductPoint& rhs) { return *this = *this + rhs; }
  bool is_zero() const { return e.is_zero() && f.is_zero(); }

  friend bool operator==(const ProductPoint&, const ProductPoint&) = default;
  friend std::strong_ordering operator<=>(const ProductPoint&,
                                          const ProductPoint&) = default;
};

/// Linear part of an automorphism of one factor: +-1 on any basis, or a
/// complex multiplication bound to its basis.
class LinearPart {
 public:
  LinearPart() = default;
  explicit LinearPart(const CyclotomicClass& xi);

  static LinearPart identity() { return {}; }
  static LinearPart negation();

  const Mat2& matrix() const { return matrix_; }
  /// Required period basis; empty for +-1.
  std::optional<PeriodBasis> basis() const { return basis_; }
  bool is_identity() const { return matrix_ == Mat2::identity(); }

  TorusPoint apply(const TorusPoint& p) const;

  /// Composition outer * inner, i.e. apply inner first.
  friend LinearPart operator*(const LinearPart& outer, const LinearPart& inner);
  friend bool operator==(const LinearPart&, const LinearPart&) = default;

 private:
  LinearPart(Mat2 m, std::optional<PeriodBasis> basis);

  Mat2 matrix_;
  std::optional<PeriodBasis> basis_;
};

/// p -> (M_E e, M_F f) + t on E x F.
class AffineAuto {
 public:
  AffineAuto() = default;
  AffineAuto(LinearPart linear_e, LinearPart linear_f, ProductPoint translation);

  static AffineAuto translation(const ProductPoint& t) { return {{}, {}, t}; }

  const LinearPart& linear_e() const { return linear_e_; }
  const LinearPart& linear_f() const { return linear_f_; }
  const ProductPoint& translation() const { return translation_; }
  bool is_translation() const {
    return linear_e_.is_identity() && linear_f_.is_identity();
  }

  ProductPoint operator()(const ProductPoint& p) const;
  /// g^k for k >= 0.
  AffineAuto pow(int k) const;

  /// Composition g * h = g after h.
  friend AffineAuto operator*(const AffineAuto& g, const AffineAuto& h);
  friend bool operator==(const AffineAuto&, const AffineAuto&) = default;

 private:
  LinearPart linear_e_;
  LinearPart linear_f_;
  ProductPoint translation_;
};

/// Least k >= 1 with g^k the identity on the model E[level_e] x F[level_f].
/// Throws std::invalid_argument when the translation is not in the model.
int auto_order(const AffineAuto& g, std::int64_t level_e, std::int64_t level_f);
inline int auto_order(const AffineAuto& g, std::int64_t level) {
  return auto_order(g, level, level);
}

/// Finite group of translations of E x F, stored as its enumerated closure.
class FiniteSubgroup {
 public:
  /// Trivial subgroup of E x F with the given period bases.
  FiniteSubgroup(PeriodBasis basis_e = PeriodBasis::Generic,
                 PeriodBasis basis_f = PeriodBasis::Generic);
  FiniteSubgroup(PeriodBasis basis_e, PeriodBasis basis_f,
                 std::vector<ProductPoint> generators);

  const std::vector<ProductPoint>& generators() const { return generators_; }
  /// All elements, sorted; the origin comes first.
  const std::vector<ProductPoint>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool is_trivial() const { return elements_.size() == 1; }
  bool contains(const ProductPoint& p) const;

  PeriodBasis basis_e() const { return basis_e_; }
  PeriodBasis basis_f() const { return basis_f_; }
  ProductPoint zero() const;

  /// Image under the projection to F.
  std::vector<TorusPoint> projection_f() const;
  bool projection_f_contains(const TorusPoint& f) const;
  /// Exponent of the projection to E (1 for the trivial group).
  std::int64_t exponent_e() const;
  std::int64_t exponent_f() const;

 private:
  PeriodBasis basis_e_;
  PeriodBasis basis_f_;
  std::vector<ProductPoint> generators_;
  std::vector<ProductPoint> elements_;
};

/// Lexicographically least element of p + T.
ProductPoint quotient_rep(const ProductPoint& p, const FiniteSubgroup& kernel);

}  // namespace enriques

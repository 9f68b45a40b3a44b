#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace enriques {

/// Dense integer matrix. Arithmetic is overflow-checked and throws
/// std::overflow_error rather than wrapping.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
  static IntMatrix identity(std::size_t n);
  static IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  IntMatrix scaled(std::int64_t k) const;
  std::vector<std::int64_t> column(std::size_t j) const;
  std::vector<std::vector<std::int64_t>> to_rows() const;
  bool is_symmetric() const;

  friend IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);
  friend IntMatrix operator+(const IntMatrix& lhs, const IntMatrix& rhs);
  friend IntMatrix operator-(const IntMatrix& lhs, const IntMatrix& rhs);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

std::int64_t determinant(const IntMatrix& m);

/// Basis of {v in Z^n : m v = 0} as the columns of the result. The basis
/// spans a primitive sublattice.
IntMatrix integer_kernel(const IntMatrix& m);

/// Absolute diagonal of the Smith normal form, in divisibility order,
/// including 1s and 0s.
std::vector<std::int64_t> smith_diagonal(const IntMatrix& m);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Free Z-module with a symmetric integer bilinear form.
class IntegralLattice {
 public:
  IntegralLattice() = default;
  /// Throws std::invalid_argument unless gram is square and symmetric.
  explicit IntegralLattice(IntMatrix gram);

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  bool is_even() const;
  std::int64_t determinant() const;
  /// Exact inertia of the Gram matrix via rational symmetric pivoting.
  Signature signature() const;
  bool is_definite() const;

  std::int64_t pairing(const std::vector<std::int64_t>& x,
                       const std::vector<std::int64_t>& y) const;
  std::int64_t norm(const std::vector<std::int64_t>& x) const { return pairing(x, x); }

  friend bool operator==(const IntegralLattice&, const IntegralLattice&) = default;

 private:
  IntMatrix gram_;
};

/// E8 root lattice (Bourbaki numbering) with its form multiplied by sign.
IntegralLattice e8(int sign);
IntegralLattice hyperbolic_plane();
/// Form multiplied by k; throws for k = 0.
IntegralLattice twist(const IntegralLattice& lattice, std::int64_t k);
IntegralLattice direct_sum(const std::vector<IntegralLattice>& summands);

/// Isometric involution v -> P v of a lattice.
class LatticeInvolution {
 public:
  /// Throws std::invalid_argument unless P^2 = 1 and P^T G P = G.
  LatticeInvolution(const IntegralLattice& lattice, IntMatrix matrix);
  const IntMatrix& matrix() const { return matrix_; }

 private:
  IntMatrix matrix_;
};

struct K3WithInvolution {
  IntegralLattice lattice;
  LatticeInvolution involution;
};

/// E8(-1)^2 + H^3 with (x, y, z1, z2, z3) -> (y, x, -z1, z3, z2).
K3WithInvolution k3_lattice_with_involution();

struct Sublattice {
  /// Basis vectors as columns, in coordinates of the ambient lattice.
  IntMatrix basis;
  IntegralLattice lattice;
};

/// {v : P v = sign * v} with its induced form.
Sublattice eigenlattice(const IntegralLattice& lattice, const LatticeInvolution& involution,
                        int sign);

/// Explicit basis of the antiinvariant part of the K3 involution:
/// (e_k, -e_k, 0, 0, 0), (0, 0, h_k, 0, 0), (0, 0, 0, h_k, -h_k).
/// Its Gram matrix is block-diagonal E8(-2) + H + H(2).
Sublattice antiinvariant_k3_standard_basis();

/// Whether two bases (as columns) span the same sublattice.
bool same_span(const IntMatrix& basis_a, const IntMatrix& basis_b);

/// Elementary divisors of the Gram matrix greater than 1. Throws
/// std::invalid_argument for degenerate lattices.
std::vector<std::int64_t> discriminant_group(const IntegralLattice& lattice);

/// All nonzero v with |v_i| <= bound and (v.v) = norm, in lexicographic order.
/// Only vectors inside the box are found. Throws std::length_error when an
/// indefinite box exceeds max_points.
std::vector<std::vector<std::int64_t>> roots_in_box(const IntegralLattice& lattice,
                                                    std::int64_t norm, std::int64_t bound,
                                                    std::uint64_t max_points = 2'000'000'000);

// ---------------------------------------------------------------------------
// Mukai vectors

/// (r, l, s) with s = chi - r.
struct MukaiVector {
  std::int64_t r = 0;
  std::vector<std::int64_t> l;
  std::int64_t s = 0;

  static MukaiVector from_chi(std::int64_t r, std::vector<std::int64_t> l, std::int64_t chi) {
    return {r, std::move(l), chi - r};
  }
  std::int64_t chi() const { return s + r; }
  friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
};

/// (v, w) = l.l' - r s' - r' s.
std::int64_t mukai_pairing(const MukaiVector& v, const MukaiVector& w,
                           const IntegralLattice& ns);

/// twist(E8(-1) + H, 2): rank 10, every l^2 divisible by 4.
IntegralLattice enriques_ns_model();

/// Even lattice scaled by 2: diagonal divisible by 4, off-diagonal even.
bool is_scaled_even(const IntegralLattice& lattice);

struct AdmissibilityReport {
  bool primitive = false;
  bool chi_odd = false;
  bool square_nonnegative = false;
  bool ns_scaled_even = false;
  std::int64_t square = 0;
  std::int64_t dimension = 0;  // v^2 + 2
  std::int64_t n = 0;          // dimension / 2
  bool n_odd = false;
  bool admissible = false;
  int quotient_index = 2;
  std::vector<std::string> failures;
};

AdmissibilityReport moduli_admissibility(const MukaiVector& v, const IntegralLattice& ns);

}  // namespace enriques

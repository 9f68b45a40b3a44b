#include "enriques/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace enriques {

namespace {

using Rational = boost::multiprecision::cpp_rational;

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
  return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// row_i -= q * row_j, on every column.
void row_axpy(IntMatrix& m, std::size_t i, std::size_t j, std::int64_t q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = add(m(i, c), mul(-q, m(j, c)));
}

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
}

// Hermite normal form by unimodular row operations on the first `width`
// columns (the rest ride along). Pivots positive, entries above a pivot
// reduced into [0, pivot). Returns the rank.
std::size_t hermite_rows(IntMatrix& m, std::size_t width) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < width && r < m.rows(); ++c) {
    while (true) {
      std::size_t best = m.rows();
      for (std::size_t i = r; i < m.rows(); ++i) {
        if (m(i, c) != 0 && (best == m.rows() || std::abs(m(i, c)) < std::abs(m(best, c)))) {
          best = i;
        }
      }
      if (best == m.rows()) break;
      swap_rows(m, r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < m.rows(); ++i) {
        row_axpy(m, i, r, m(i, c) / m(r, c));
        if (m(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (m(r, c) == 0) continue;
    if (m(r, c) < 0) {
      for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) = -m(r, k);
    }
    for (std::size_t i = 0; i < r; ++i) row_axpy(m, i, r, floor_div(m(i, c), m(r, c)));
    ++r;
  }
  return r;
}

// Columns -> rows, HNF, drop zero rows.
IntMatrix span_hnf(const IntMatrix& basis) {
  IntMatrix rows = basis.transpose();
  const std::size_t rank = hermite_rows(rows, rows.cols());
  IntMatrix out(rank, rows.cols());
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = 0; j < rows.cols(); ++j) out(i, j) = rows(i, j);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<std::vector<std::int64_t>> v;
  for (const auto& r : rows) v.emplace_back(r);
  *this = from_rows(v);
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::block_diagonal(const std::vector<IntMatrix>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  IntMatrix m(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
    }
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

IntMatrix IntMatrix::scaled(std::int64_t k) const {
  IntMatrix m = *this;
  for (auto& x : m.data_) x = mul(x, k);
  return m;
}

std::vector<std::int64_t> IntMatrix::column(std::size_t j) const {
  std::vector<std::int64_t> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  }
  return out;
}

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const std::int64_t a = lhs(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) = add(out(i, j), mul(a, rhs(k, j)));
    }
  }
  return out;
}

IntMatrix operator+(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) {
    throw std::invalid_argument("matrix shape mismatch");
  }
  IntMatrix out = lhs;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = add(out.data_[i], rhs.data_[i]);
  return out;
}

IntMatrix operator-(const IntMatrix& lhs, const IntMatrix& rhs) { return lhs + rhs.scaled(-1); }

std::int64_t determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  }
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  const __int128 det = sign * a[n - 1][n - 1];
  if (det > INT64_MAX || det < INT64_MIN) throw std::overflow_error("determinant overflow");
  return static_cast<std::int64_t>(det);
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const std::size_t n = m.cols();
  // [m^T | I]: rows whose left part reduces to zero carry kernel vectors.
  IntMatrix work(n, m.rows() + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m.rows(); ++j) work(i, j) = m(j, i);
    work(i, m.rows() + i) = 1;
  }
  const std::size_t rank = hermite_rows(work, m.rows());
  IntMatrix kernel(n, n - rank);
  for (std::size_t k = rank; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) kernel(i, k - rank) = work(k, m.rows() + i);
  }
  if (kernel.cols() == 0) return kernel;
  return span_hnf(kernel).transpose();
}

std::vector<std::int64_t> smith_diagonal(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t rows = a.rows(), cols = a.cols();
  const std::size_t n = std::min(rows, cols);
  const auto col_axpy = [&](std::size_t i, std::size_t j, std::int64_t q) {
    for (std::size_t r = 0; r < rows; ++r) a(r, i) = add(a(r, i), mul(-q, a(r, j)));
  };
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j) != 0 && (bi == rows || std::abs(a(i, j)) < std::abs(a(bi, bj)))) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == rows) break;
      swap_rows(a, t, bi);
      for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, t), a(r, bj));
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        row_axpy(a, i, t, a(i, t) / a(t, t));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        col_axpy(j, t, a(t, j) / a(t, t));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // the pivot must divide the whole trailing block
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            row_axpy(a, t, i, -1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
  }
  std::vector<std::int64_t> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = std::abs(a(i, i));
  // zeros last, the rest already form a divisibility chain
  std::stable_partition(diag.begin(), diag.end(), [](std::int64_t x) { return x != 0; });
  return diag;
}

// ---------------------------------------------------------------------------
// IntegralLattice

IntegralLattice::IntegralLattice(IntMatrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_symmetric()) throw std::invalid_argument("Gram matrix must be symmetric");
}

bool IntegralLattice::is_even() const {
  for (std::size_t i = 0; i < rank(); ++i) {
    if (gram_(i, i) % 2 != 0) return false;
  }
  return true;
}

std::int64_t IntegralLattice::determinant() const { return enriques::determinant(gram_); }

Signature IntegralLattice::signature() const {
  const std::size_t n = rank();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = gram_(i, j);
  }
  Signature sig;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!done[i] && a[i][i] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == n) {
      // zero diagonal: e_i <- e_i + e_j makes a(i,i) = 2 a(i,j) nonzero
      std::size_t pi = n, pj = n;
      for (std::size_t i = 0; i < n && pi == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (!done[i] && !done[j] && a[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi == n) break;
      for (std::size_t k = 0; k < n; ++k) a[pi][k] += a[pj][k];
      for (std::size_t k = 0; k < n; ++k) a[k][pi] += a[k][pj];
      pivot = pi;
    }
    const Rational p = a[pivot][pivot];
    (p > 0 ? sig.positive : sig.negative) += 1;
    done[pivot] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || a[i][pivot] == 0) continue;
      const Rational f = a[i][pivot] / p;
      for (std::size_t j = 0; j < n; ++j) {
        if (!done[j]) a[i][j] -= f * a[pivot][j];
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!done[j]) a[pivot][j] = 0;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!done[i]) a[i][pivot] = 0;
    }
  }
  sig.zero = n - sig.positive - sig.negative;
  return sig;
}

bool IntegralLattice::is_definite() const {
  const Signature s = signature();
  return s.zero == 0 && (s.positive == 0 || s.negative == 0);
}

std::int64_t IntegralLattice::pairing(const std::vector<std::int64_t>& x,
                                      const std::vector<std::int64_t>& y) const {
  if (x.size() != rank() || y.size() != rank()) {
    throw std::invalid_argument("vector length does not match the lattice rank");
  }
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j) {
      sum = add(sum, mul(mul(x[i], gram_(i, j)), y[j]));
    }
  }
  return sum;
}

IntegralLattice e8(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("E8 sign must be +1 or -1");
  IntMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = 2;
  // Dynkin diagram 1-3-4-5-6-7-8 with 2 attached to 4
  constexpr std::size_t edges[][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
  for (const auto& e : edges) {
    g(e[0] - 1, e[1] - 1) = -1;
    g(e[1] - 1, e[0] - 1) = -1;
  }
  return IntegralLattice(g.scaled(sign));
}

IntegralLattice hyperbolic_plane() { return IntegralLattice(IntMatrix{{0, 1}, {1, 0}}); }

IntegralLattice twist(const IntegralLattice& lattice, std::int64_t k) {
  if (k == 0) throw std::invalid_argument("twist by 0");
  return IntegralLattice(lattice.gram().scaled(k));
}

IntegralLattice direct_sum(const std::vector<IntegralLattice>& summands) {
  std::vector<IntMatrix> blocks;
  for (const auto& s : summands) blocks.push_back(s.gram());
  return IntegralLattice(IntMatrix::block_diagonal(blocks));
}

LatticeInvolution::LatticeInvolution(const IntegralLattice& lattice, IntMatrix matrix)
    : matrix_(std::move(matrix)) {
  const std::size_t n = lattice.rank();
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw std::invalid_argument("involution size does not match the lattice");
  }
  if (!(matrix_ * matrix_ == IntMatrix::identity(n))) {
    throw std::invalid_argument("P^2 != 1");
  }
  if (!(matrix_.transpose() * lattice.gram() * matrix_ == lattice.gram())) {
    throw std::invalid_argument("P is not an isometry");
  }
}

K3WithInvolution k3_lattice_with_involution() {
  const IntegralLattice h = hyperbolic_plane();
  IntegralLattice k3 = direct_sum({e8(-1), e8(-1), h, h, h});
  // coordinates: x = 0..7, y = 8..15, z1 = 16..17, z2 = 18..19, z3 = 20..21
  IntMatrix p(22, 22);
  for (std::size_t k = 0; k < 8; ++k) {
    p(8 + k, k) = 1;  // x -> y slot
    p(k, 8 + k) = 1;  // y -> x slot
  }
  p(16, 16) = -1;
  p(17, 17) = -1;
  for (std::size_t k = 0; k < 2; ++k) {
    p(20 + k, 18 + k) = 1;
    p(18 + k, 20 + k) = 1;
  }
  LatticeInvolution iota(k3, std::move(p));
  return {std::move(k3), std::move(iota)};
}

Sublattice eigenlattice(const IntegralLattice& lattice, const LatticeInvolution& involution,
                        int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("eigen sign must be +1 or -1");
  const IntMatrix shifted =
      involution.matrix() - IntMatrix::identity(lattice.rank()).scaled(sign);
  IntMatrix basis = integer_kernel(shifted);
  IntegralLattice sub(basis.transpose() * lattice.gram() * basis);
  return {std::move(basis), std::move(sub)};
}

Sublattice antiinvariant_k3_standard_basis() {
  IntMatrix basis(22, 12);
  for (std::size_t k = 0; k < 8; ++k) {
    basis(k, k) = 1;
    basis(8 + k, k) = -1;
  }
  basis(16, 8) = 1;
  basis(17, 9) = 1;
  basis(18, 10) = 1;
  basis(20, 10) = -1;
  basis(19, 11) = 1;
  basis(21, 11) = -1;
  const IntegralLattice k3 = k3_lattice_with_involution().lattice;
  IntegralLattice sub(basis.transpose() * k3.gram() * basis);
  return {std::move(basis), std::move(sub)};
}

bool same_span(const IntMatrix& basis_a, const IntMatrix& basis_b) {
  if (basis_a.rows() != basis_b.rows()) return false;
  return span_hnf(basis_a) == span_hnf(basis_b);
}

std::vector<std::int64_t> discriminant_group(const IntegralLattice& lattice) {
  if (lattice.rank() == 0) return {};
  const std::vector<std::int64_t> diag = smith_diagonal(lattice.gram());
  if (std::find(diag.begin(), diag.end(), 0) != diag.end()) {
    throw std::invalid_argument("degenerate lattice has no finite discriminant group");
  }
  std::vector<std::int64_t> out;
  for (std::int64_t x : diag) {
    if (x > 1) out.push_back(x);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bounded vector search

namespace {

// Fincke-Pohst enumeration of a positive definite form, exact in rationals.
void definite_search(const IntegralLattice& lattice, int form_sign, std::int64_t target,
                     std::int64_t bound, std::vector<std::vector<std::int64_t>>& out) {
  const std::size_t n = lattice.rank();
  std::vector<std::vector<Rational>> q(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) q[i][j] = form_sign * lattice.gram()(i, j);
  }
  // Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (std::size_t k = i + 1; k < n; ++k) {
      for (std::size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
    }
  }
  std::vector<std::int64_t> x(n, 0);
  const Rational budget_total = target;
  std::function<void(std::size_t, const Rational&)> descend = [&](std::size_t level,
                                                                 const Rational& budget) {
    const std::size_t i = level - 1;
    Rational c = 0;
    for (std::size_t j = i + 1; j < n; ++j) c += q[i][j] * x[j];
    const Rational room = budget / q[i][i];
    // integer range around -c, widened by one on each side and checked exactly
    const double centre = -static_cast<double>(c);
    const double radius = std::sqrt(std::max(0.0, static_cast<double>(room)));
    const auto lo = std::max<std::int64_t>(-bound, static_cast<std::int64_t>(std::floor(centre - radius)) - 1);
    const auto hi = std::min<std::int64_t>(bound, static_cast<std::int64_t>(std::ceil(centre + radius)) + 1);
    for (std::int64_t v = lo; v <= hi; ++v) {
      const Rational t = v + c;
      const Rational used = q[i][i] * t * t;
      if (used > budget) continue;
      x[i] = v;
      if (i == 0) {
        if (used == budget && std::any_of(x.begin(), x.end(), [](auto e) { return e != 0; })) {
          out.push_back(x);
        }
      } else {
        descend(i, budget - used);
      }
    }
    x[i] = 0;
  };
  if (n > 0) descend(n, budget_total);
}

}  // namespace

std::vector<std::vector<std::int64_t>> roots_in_box(const IntegralLattice& lattice,
                                                    std::int64_t norm, std::int64_t bound,
                                                    std::uint64_t max_points) {
  std::vector<std::vector<std::int64_t>> out;
  const std::size_t n = lattice.rank();
  if (bound < 1 || n == 0) return out;

  const Signature sig = lattice.signature();
  if (sig.zero == 0 && (sig.positive == 0 || sig.negative == 0)) {
    const int form_sign = sig.positive > 0 ? 1 : -1;
    if (norm * form_sign > 0) definite_search(lattice, form_sign, norm * form_sign, bound, out);
    std::sort(out.begin(), out.end());
    return out;
  }

  double points = std::pow(static_cast<double>(2 * bound + 1), static_cast<double>(n));
  if (points > static_cast<double>(max_points)) {
    throw std::length_error("box of " + std::to_string(points) +
                            " vectors exceeds the search budget");
  }
  // Odometer over the box, updating G v and v.G.v incrementally.
  const IntMatrix& g = lattice.gram();
  std::vector<std::int64_t> v(n, -bound);
  std::vector<std::int64_t> gv(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) gv[i] += g(i, j) * v[j];
  }
  std::int64_t q = 0;
  for (std::size_t i = 0; i < n; ++i) q += v[i] * gv[i];
  const auto shift = [&](std::size_t i, std::int64_t delta) {
    q += 2 * delta * gv[i] + delta * delta * g(i, i);
    for (std::size_t k = 0; k < n; ++k) gv[k] += delta * g(k, i);
    v[i] += delta;
  };
  while (true) {
    if (q == norm && std::any_of(v.begin(), v.end(), [](auto e) { return e != 0; })) {
      out.push_back(v);
    }
    std::size_t pos = n;
    while (pos > 0 && v[pos - 1] == bound) {
      shift(pos - 1, -2 * bound);
      --pos;
    }
    if (pos == 0) break;
    shift(pos - 1, 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Mukai vectors

std::int64_t mukai_pairing(const MukaiVector& v, const MukaiVector& w,
                           const IntegralLattice& ns) {
  if (v.l.size() != ns.rank() || w.l.size() != ns.rank()) {
    throw std::invalid_argument("Mukai vector l-part does not match the NS rank " +
                                std::to_string(ns.rank()));
  }
  return add(ns.pairing(v.l, w.l), add(-mul(v.r, w.s), -mul(w.r, v.s)));
}

IntegralLattice enriques_ns_model() {
  return twist(direct_sum({e8(-1), hyperbolic_plane()}), 2);
}

bool is_scaled_even(const IntegralLattice& lattice) {
  const IntMatrix& g = lattice.gram();
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    if (g(i, i) % 4 != 0) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (g(i, j) % 2 != 0) return false;
    }
  }
  return true;
}

AdmissibilityReport moduli_admissibility(const MukaiVector& v, const IntegralLattice& ns) {
  AdmissibilityReport rep;
  rep.ns_scaled_even = is_scaled_even(ns);
  std::int64_t g = std::gcd(v.r, v.s);
  for (std::int64_t x : v.l) g = std::gcd(g, x);
  rep.primitive = g == 1;
  rep.chi_odd = v.chi() % 2 != 0;
  rep.square = mukai_pairing(v, v, ns);
  rep.square_nonnegative = rep.square >= 0;
  rep.dimension = rep.square + 2;
  rep.n = rep.dimension / 2;
  rep.n_odd = rep.n % 2 != 0;

  if (!rep.ns_scaled_even) rep.failures.push_back("ns_scaled_even");
  if (!rep.primitive) rep.failures.push_back("primitive");
  if (!rep.chi_odd) rep.failures.push_back("chi_odd");
  if (!rep.square_nonnegative) rep.failures.push_back("square_nonnegative");
  rep.admissible = rep.failures.empty();
  if (rep.admissible && !rep.n_odd) {
    // cannot happen over a scaled-even NS with chi odd
    rep.failures.push_back("n_odd");
    rep.admissible = false;
  }
  return rep;
}

}  // namespace enriques

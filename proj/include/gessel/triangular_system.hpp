#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "gessel/exact_arith.hpp"

namespace gessel {

// Diagonal ordering of N x N: rho(i, j) = binom(i + j + 1, 2) + j.
std::int64_t rho(std::int64_t i, std::int64_t j);
std::pair<std::int64_t, std::int64_t> rho_inv(std::int64_t n);

inline constexpr std::int64_t kRho11 = 4;  // rho(1, 1)

// Coefficient of f(i, j) in equation E(u, v) of the packed linear system.
ExactInt coefficient_c(std::int64_t u, std::int64_t v, std::int64_t i, std::int64_t j);

// a(n, k) = c(rho_inv(n), rho_inv(k))
ExactInt system_entry(std::int64_t n, std::int64_t k);

// Row-major dense integer matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  ExactInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const ExactInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ExactInt> data_;
};

// Decimal strings, row-major, one matrix row per line.
void write_matrix_csv(const DenseMatrix& m, std::ostream& out);
// JSON array of rows of decimal strings.
void write_matrix_json(const DenseMatrix& m, std::ostream& out);

// Leading (size x size) block of the system matrix A.
DenseMatrix system_matrix(std::size_t size);

// A x = b solved by forward substitution for indices 0..k_max, with
// b = e_{rho(1,1)}.
class TriSystem {
 public:
  explicit TriSystem(std::int64_t k_max);

  std::int64_t k_max() const { return static_cast<std::int64_t>(x_.size()) - 1; }
  const std::vector<ExactInt>& x() const { return x_; }
  const ExactInt& x(std::int64_t k) const { return x_.at(static_cast<std::size_t>(k)); }

  ExactInt a(std::int64_t n, std::int64_t k) const { return system_entry(n, k); }
  static int b(std::int64_t n) { return n == kRho11 ? 1 : 0; }

 private:
  std::vector<ExactInt> x_;
};

inline TriSystem solve_forward(std::int64_t k_max) { return TriSystem(k_max); }

// Lower-Hessenberg matrix with unit superdiagonal.
class HessenbergMatrix {
 public:
  // Throws Error unless `m` is square with ones on the superdiagonal and
  // zeros above it.
  explicit HessenbergMatrix(DenseMatrix m);

  std::size_t size() const { return m_.rows(); }
  const ExactInt& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  const DenseMatrix& dense() const { return m_; }

 private:
  DenseMatrix m_;
};

// Rows rho(1,1)+1..k and columns rho(1,1)..k-1 of A; (k - 4) x (k - 4).
HessenbergMatrix hessenberg_for(std::int64_t k);

// Leading-minor recurrence
//   d_0 = 1,  d_r = sum_{c=1..r} (-1)^(r-c) H(r-1, c-1) d_{c-1}.
// The empty matrix has determinant 1.
ExactInt hessenberg_det(const HessenbergMatrix& h);

// x(k) recovered from the Hessenberg determinant: x(k) = (-1)^k det H^(k)
// for k >= rho(1,1); 0 below.
ExactInt solution_via_determinant(std::int64_t k);

// F(2n; 0, 0) = det H^(rho(2n+1, 2n+1)).
ExactInt gessel_via_determinant(int n);

inline constexpr std::size_t kDefaultChainLimit = 16;

// Entry (k, m), k > m, of the inverse of a unit lower-triangular matrix as
// the signed sum over all chains m = l0 < l1 < ... < lj = k of
// prod a(l_i, l_{i-1}). Chains through a zero entry are pruned. Throws
// Error("chain explosion") when k - m exceeds `chain_limit`.
ExactInt inverse_entry_multisum(std::size_t k, std::size_t m, const DenseMatrix& a,
                                std::size_t chain_limit = kDefaultChainLimit);

// Inverse of a unit lower-triangular matrix, column by column through
// forward substitution.
DenseMatrix unit_lower_inverse(const DenseMatrix& a);

// Nonzero segment of f-row 2i - 1 (length 2i, ending in catalan(i - 1)).
std::vector<ExactInt> universal_sequence(int i);

}  // namespace gessel

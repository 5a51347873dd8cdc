#include "gessel/triangular_system.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "json.hpp"

#include "gessel/walk_dp.hpp"

namespace gessel {

std::int64_t rho(std::int64_t i, std::int64_t j) {
  const std::int64_t s = i + j;
  return s * (s + 1) / 2 + j;
}

std::pair<std::int64_t, std::int64_t> rho_inv(std::int64_t n) {
  if (n < 0) throw Error("rho_inv of a negative index");
  auto s = static_cast<std::int64_t>((std::sqrt(8.0 * static_cast<double>(n) + 1.0) - 1.0) / 2.0);
  while (s * (s + 1) / 2 > n) --s;
  while ((s + 1) * (s + 2) / 2 <= n) ++s;
  const std::int64_t j = n - s * (s + 1) / 2;
  return {s - j, j};
}

ExactInt coefficient_c(std::int64_t u, std::int64_t v, std::int64_t i, std::int64_t j) {
  if (((u - i) % 2 + 2) % 2 != 0) return 0;
  const std::int64_t half = (u - i) / 2;
  const std::int64_t second = v - j - half;
  if (half < 0 || second < 0) return 0;
  const ExactInt top = -std::min(i, j);
  return binom_general(top, half) * binom_general(top, second);
}

ExactInt system_entry(std::int64_t n, std::int64_t k) {
  const auto [u, v] = rho_inv(n);
  const auto [i, j] = rho_inv(k);
  return coefficient_c(u, v, i, j);
}

void write_matrix_csv(const DenseMatrix& m, std::ostream& out) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ',';
      out << m(r, c).get_str();
    }
    out << '\n';
  }
}

void write_matrix_json(const DenseMatrix& m, std::ostream& out) {
  auto rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
    rows.push_back(std::move(row));
  }
  out << rows.dump();
}

DenseMatrix system_matrix(std::size_t size) {
  DenseMatrix a(size, size);
  for (std::size_t n = 0; n < size; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      a(n, k) = system_entry(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k));
    }
  }
  return a;
}

TriSystem::TriSystem(std::int64_t k_max) {
  if (k_max < 0) throw Error("k_max must be nonnegative");
  const auto size = static_cast<std::size_t>(k_max) + 1;
  x_.assign(size, 0);
  std::vector<std::pair<std::int64_t, std::int64_t>> coords(size);
  for (std::size_t k = 0; k < size; ++k) coords[k] = rho_inv(static_cast<std::int64_t>(k));

  ExactInt acc;
  for (std::size_t n = 0; n < size; ++n) {
    acc = b(static_cast<std::int64_t>(n));
    const auto [u, v] = coords[n];
    for (std::size_t k = 0; k < n; ++k) {
      if (x_[k] == 0) continue;
      const auto [i, j] = coords[k];
      const ExactInt c = coefficient_c(u, v, i, j);
      if (c != 0) acc -= c * x_[k];
    }
    x_[n] = acc;
  }
}

HessenbergMatrix::HessenbergMatrix(DenseMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw Error("Hessenberg matrix must be square");
  for (std::size_t r = 0; r < m_.rows(); ++r) {
    for (std::size_t c = r + 1; c < m_.cols(); ++c) {
      const int expected = c == r + 1 ? 1 : 0;
      if (m_(r, c) != expected) {
        throw Error("not unit-superdiagonal lower Hessenberg at (" + std::to_string(r) + "," +
                    std::to_string(c) + ")");
      }
    }
  }
}

HessenbergMatrix hessenberg_for(std::int64_t k) {
  if (k < kRho11) throw Error("k=" + std::to_string(k) + " is below rho(1,1)");
  const auto size = static_cast<std::size_t>(k - kRho11);
  DenseMatrix m(size, size);
  for (std::size_t r = 0; r < size; ++r) {
    const auto n = kRho11 + 1 + static_cast<std::int64_t>(r);
    for (std::size_t c = 0; c <= std::min(r + 1, size - 1); ++c) {
      m(r, c) = system_entry(n, kRho11 + static_cast<std::int64_t>(c));
    }
  }
  return HessenbergMatrix(std::move(m));
}

ExactInt hessenberg_det(const HessenbergMatrix& h) {
  const std::size_t s = h.size();
  std::vector<ExactInt> d(s + 1);
  d[0] = 1;
  ExactInt term;
  for (std::size_t r = 1; r <= s; ++r) {
    ExactInt acc = 0;
    for (std::size_t c = 1; c <= r; ++c) {
      const ExactInt& e = h(r - 1, c - 1);
      if (e == 0 || d[c - 1] == 0) continue;
      term = e * d[c - 1];
      if ((r - c) % 2 == 0) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    d[r] = std::move(acc);
  }
  return d[s];
}

ExactInt solution_via_determinant(std::int64_t k) {
  if (k < kRho11) return 0;
  ExactInt det = hessenberg_det(hessenberg_for(k));
  if (k % 2 != 0) det = -det;
  return det;
}

ExactInt gessel_via_determinant(int n) {
  if (n < 0) throw Error("n must be nonnegative");
  return hessenberg_det(hessenberg_for(rho(2 * n + 1, 2 * n + 1)));
}

namespace {

// Signed sum over chains from `from` to `target`, each step contributing
// -a(next, current).
void accumulate_chains(std::size_t from, std::size_t target, const DenseMatrix& a, ExactInt& weight,
                       ExactInt& total) {
  ExactInt step;
  for (std::size_t next = from + 1; next <= target; ++next) {
    const ExactInt& e = a(next, from);
    if (e == 0) continue;
    step = -e;
    step *= weight;
    if (next == target) {
      total += step;
    } else {
      accumulate_chains(next, target, a, step, total);
    }
  }
}

}  // namespace

ExactInt inverse_entry_multisum(std::size_t k, std::size_t m, const DenseMatrix& a,
                                std::size_t chain_limit) {
  if (k <= m) throw Error("inverse_entry_multisum needs k > m");
  if (k >= a.rows() || k >= a.cols()) throw Error("index outside the matrix");
  if (k - m > chain_limit) {
    throw Error("chain explosion: k - m = " + std::to_string(k - m) + " exceeds limit " +
                std::to_string(chain_limit));
  }
  ExactInt weight = 1;
  ExactInt total = 0;
  accumulate_chains(m, k, a, weight, total);
  return total;
}

DenseMatrix unit_lower_inverse(const DenseMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw Error("matrix must be square");
  for (std::size_t r = 0; r < n; ++r) {
    if (a(r, r) != 1) throw Error("diagonal entry is not 1");
    for (std::size_t c = r + 1; c < n; ++c) {
      if (a(r, c) != 0) throw Error("matrix is not lower triangular");
    }
  }
  DenseMatrix inv(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t r = col; r < n; ++r) {
      ExactInt acc = r == col ? 1 : 0;
      for (std::size_t k = col; k < r; ++k) acc -= a(r, k) * inv(k, col);
      inv(r, col) = std::move(acc);
    }
  }
  return inv;
}

std::vector<ExactInt> universal_sequence(int i) {
  if (i < 1) throw Error("universal_sequence needs i >= 1");
  const int row = 2 * i - 1;
  const FMatrix f(3 * i);
  int first = -1;
  int last = -1;
  for (int j = 0; j <= f.size(); ++j) {
    if (f.at(row, j) == 0) continue;
    if (first < 0) first = j;
    last = j;
  }
  if (first < 0) throw Error("f-row " + std::to_string(row) + " is zero");
  std::vector<ExactInt> seq;
  for (int j = first; j <= last; ++j) {
    if (f.at(row, j) == 0) {
      throw Error("zero inside the nonzero segment of f-row " + std::to_string(row));
    }
    seq.push_back(f.at(row, j));
  }
  return seq;
}

}  // namespace gessel

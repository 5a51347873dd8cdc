#pragma once

#include <iosfwd>
#include <memory>
#include <vector>

#include "gessel/exact_arith.hpp"

namespace gessel {

// Necessary conditions for F(m; n1, n2) != 0: m = n1 (mod 2), 0 <= n1 <= m,
// 0 <= n2 <= (n1 + m) / 2.
bool reachable(int m, int n1, int n2);

// Exact counts F(m; n1, n2) for every m <= m_max. Layer m holds the box
// 0 <= n1, n2 <= m, which contains the support of that layer.
class WalkTable {
 public:
  explicit WalkTable(int m_max);

  int m_max() const { return static_cast<int>(layers_.size()) - 1; }

  // Zero outside the support; throws std::out_of_range when m > m_max().
  const ExactInt& at(int m, int n1, int n2) const;

  // Copy of this table grown to `m_max` layers (no-op copy if smaller).
  WalkTable extended(int m_max) const;

  // One JSON object per nonzero entry: {"m":..,"n1":..,"n2":..,"F":"<decimal>"}.
  // Layers above `m_limit` are skipped when it is nonnegative.
  void write_jsonl(std::ostream& out, int m_limit = -1) const;
  static WalkTable read_jsonl(std::istream& in);

 private:
  WalkTable() = default;
  void grow_to(int m_max);

  struct Layer {
    int side = 0;
    std::vector<ExactInt> cells;  // side x side, row n1, column n2
  };
  std::vector<Layer> layers_;
};

// Process-wide table covering at least `m_max`; grown on demand under a lock.
// The returned snapshot is immutable and safe to read concurrently.
std::shared_ptr<const WalkTable> shared_walk_table(int m_max);

// Current process-wide table, or null if none has been built yet.
std::shared_ptr<const WalkTable> peek_shared_walk_table();
// Seeds the process-wide table (e.g. from a cache file); kept only if it
// covers more layers than the current one.
void install_shared_walk_table(std::shared_ptr<const WalkTable> table);

ExactInt count_walks(int m, int n1, int n2);

struct ShortestWalk {
  int length = 0;
  ExactInt count;
};

// Length and number of shortest walks to (n1, n2) from the two closed forms:
// binom(n1, n2) of length n1 when n1 >= n2, otherwise
// (n1+1)/(2n2-n1+1) * binom(2n2-n1+1, n2+1) of length 2n2 - n1.
ShortestWalk shortest_walk(int n1, int n2);

// The two branch formulas on their own; they agree on n1 = n2.
ExactInt shortest_count_east(int n1, int n2);  // E/NE walks, n1 >= n2
ExactInt shortest_count_west(int n1, int n2);  // W/NE walks, n1 <= n2

// Coefficients of H = K G + y z: zero off the two boundary planes.
ExactInt f_tilde(int m, int n1, int n2);

// f(i, j) = F~(i; 0, j - i) for i <= j, F~(j; i - j, 0) for i >= j.
class FMatrix {
 public:
  explicit FMatrix(int size);

  int size() const { return size_; }
  const ExactInt& at(int i, int j) const;

 private:
  int size_;
  std::vector<ExactInt> entries_;
};

inline FMatrix build_f_matrix(int size) { return FMatrix(size); }

// Single entry f(i, j) without materializing the matrix.
ExactInt f_entry(int i, int j);

}  // namespace gessel

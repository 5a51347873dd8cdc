#include "gessel/walk_dp.hpp"

#include <istream>
#include <mutex>
#include <ostream>
#include <algorithm>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace gessel {

bool reachable(int m, int n1, int n2) {
  if (m < 0 || n1 < 0 || n2 < 0) return false;
  if ((m - n1) % 2 != 0) return false;
  if (n1 > m) return false;
  return 2 * n2 <= n1 + m;
}

namespace {
const ExactInt& zero() {
  static const ExactInt z = 0;
  return z;
}
}  // namespace

WalkTable::WalkTable(int m_max) {
  if (m_max < 0) throw Error("m_max must be nonnegative");
  grow_to(m_max);
}

void WalkTable::grow_to(int m_max) {
  if (layers_.empty()) {
    Layer base;
    base.side = 1;
    base.cells.assign(1, 1);
    layers_.push_back(std::move(base));
  }
  while (this->m_max() < m_max) {
    const int m = this->m_max() + 1;
    const Layer& prev = layers_.back();
    auto prev_at = [&](int a, int b) -> const ExactInt& {
      if (a < 0 || b < 0 || a >= prev.side || b >= prev.side) return zero();
      return prev.cells[static_cast<std::size_t>(a) * prev.side + b];
    };
    Layer next;
    next.side = m + 1;
    next.cells.assign(static_cast<std::size_t>(next.side) * next.side, 0);
    for (int n1 = (m % 2); n1 <= m; n1 += 2) {
      for (int n2 = 0; 2 * n2 <= n1 + m; ++n2) {
        ExactInt& cell = next.cells[static_cast<std::size_t>(n1) * next.side + n2];
        cell = prev_at(n1 + 1, n2);
        cell += prev_at(n1 - 1, n2);
        cell += prev_at(n1 + 1, n2 + 1);
        cell += prev_at(n1 - 1, n2 - 1);
      }
    }
    layers_.push_back(std::move(next));
  }
}

const ExactInt& WalkTable::at(int m, int n1, int n2) const {
  if (m > m_max()) {
    throw std::out_of_range("walk table holds m <= " + std::to_string(m_max()) +
                            ", asked for m=" + std::to_string(m));
  }
  if (!reachable(m, n1, n2)) return zero();
  const Layer& l = layers_[static_cast<std::size_t>(m)];
  return l.cells[static_cast<std::size_t>(n1) * l.side + n2];
}

WalkTable WalkTable::extended(int m_max) const {
  WalkTable t = *this;
  t.grow_to(m_max);
  return t;
}

void WalkTable::write_jsonl(std::ostream& out, int m_limit) const {
  const int last = m_limit < 0 ? m_max() : std::min(m_limit, m_max());
  for (int m = 0; m <= last; ++m) {
    const Layer& l = layers_[static_cast<std::size_t>(m)];
    for (int n1 = 0; n1 < l.side; ++n1) {
      for (int n2 = 0; n2 < l.side; ++n2) {
        const ExactInt& v = l.cells[static_cast<std::size_t>(n1) * l.side + n2];
        if (v == 0) continue;
        nlohmann::ordered_json rec;
        rec["m"] = m;
        rec["n1"] = n1;
        rec["n2"] = n2;
        rec["F"] = v.get_str();
        out << rec.dump() << '\n';
      }
    }
  }
}

WalkTable WalkTable::read_jsonl(std::istream& in) {
  struct Entry {
    int m, n1, n2;
    ExactInt value;
  };
  std::vector<Entry> entries;
  int m_max = -1;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const auto rec = nlohmann::json::parse(line);
      Entry e{rec.at("m").get<int>(), rec.at("n1").get<int>(), rec.at("n2").get<int>(),
              ExactInt(rec.at("F").get<std::string>())};
      if (!reachable(e.m, e.n1, e.n2)) throw Error("entry outside the walk support");
      m_max = std::max(m_max, e.m);
      entries.push_back(std::move(e));
    } catch (const std::exception& ex) {
      throw Error("walk table line " + std::to_string(line_no) + ": " + ex.what());
    }
  }
  if (m_max < 0) throw Error("walk table is empty");

  WalkTable t;
  t.layers_.resize(static_cast<std::size_t>(m_max) + 1);
  for (int m = 0; m <= m_max; ++m) {
    Layer& l = t.layers_[static_cast<std::size_t>(m)];
    l.side = m + 1;
    l.cells.assign(static_cast<std::size_t>(l.side) * l.side, 0);
  }
  for (auto& e : entries) {
    Layer& l = t.layers_[static_cast<std::size_t>(e.m)];
    l.cells[static_cast<std::size_t>(e.n1) * l.side + e.n2] = std::move(e.value);
  }
  return t;
}

namespace {

struct SharedTable {
  std::mutex mu;
  std::shared_ptr<const WalkTable> table;
};

SharedTable& shared_state() {
  static SharedTable s;
  return s;
}

}  // namespace

std::shared_ptr<const WalkTable> shared_walk_table(int m_max) {
  auto& s = shared_state();
  std::lock_guard<std::mutex> lock(s.mu);
  if (!s.table) {
    s.table = std::make_shared<const WalkTable>(std::max(m_max, 16));
  } else if (s.table->m_max() < m_max) {
    s.table = std::make_shared<const WalkTable>(s.table->extended(std::max(m_max, 2 * s.table->m_max())));
  }
  return s.table;
}

std::shared_ptr<const WalkTable> peek_shared_walk_table() {
  auto& s = shared_state();
  std::lock_guard<std::mutex> lock(s.mu);
  return s.table;
}

void install_shared_walk_table(std::shared_ptr<const WalkTable> table) {
  if (!table) return;
  auto& s = shared_state();
  std::lock_guard<std::mutex> lock(s.mu);
  if (!s.table || s.table->m_max() < table->m_max()) s.table = std::move(table);
}

ExactInt count_walks(int m, int n1, int n2) {
  if (!reachable(m, n1, n2)) return 0;
  return shared_walk_table(m)->at(m, n1, n2);
}

ExactInt shortest_count_east(int n1, int n2) {
  if (n1 < n2) throw Error("east branch needs n1 >= n2");
  return binom_general(n1, n2);
}

ExactInt shortest_count_west(int n1, int n2) {
  if (n1 > n2) throw Error("west branch needs n1 <= n2");
  const int len = 2 * n2 - n1;
  ExactInt count = binom_general(len + 1, n2 + 1) * (n1 + 1);
  count /= len + 1;
  return count;
}

ShortestWalk shortest_walk(int n1, int n2) {
  if (n1 < 0 || n2 < 0) throw Error("shortest_walk needs a point in the quadrant");
  if (n1 >= n2) return {n1, shortest_count_east(n1, n2)};
  return {2 * n2 - n1, shortest_count_west(n1, n2)};
}

ExactInt f_tilde(int m, int n1, int n2) {
  if (m <= 0 || n1 < 0 || n2 < 0) return 0;
  if (n1 != 0 && n2 != 0) return 0;
  if (n2 == 0) return count_walks(m - 1, n1, 0);
  return count_walks(m - 1, 0, n2) + count_walks(m - 1, 0, n2 - 1);
}

ExactInt f_entry(int i, int j) {
  if (i <= j) return f_tilde(i, 0, j - i);
  return f_tilde(j, i - j, 0);
}

FMatrix::FMatrix(int size) : size_(size) {
  if (size < 0) throw Error("f-matrix size must be nonnegative");
  shared_walk_table(size);
  const auto n = static_cast<std::size_t>(size) + 1;
  entries_.reserve(n * n);
  for (int i = 0; i <= size; ++i) {
    for (int j = 0; j <= size; ++j) entries_.push_back(f_entry(i, j));
  }
}

const ExactInt& FMatrix::at(int i, int j) const {
  if (i < 0 || j < 0 || i > size_ || j > size_) {
    throw std::out_of_range("f-matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside 0.." + std::to_string(size_));
  }
  return entries_[static_cast<std::size_t>(i) * (size_ + 1) + j];
}

}  // namespace gessel

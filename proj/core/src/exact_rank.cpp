#include "symdepth/exact_rank.hpp"

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

namespace symdepth {

namespace {

struct WordOverflow {};

constexpr __int128 kWordBound = static_cast<__int128>(1) << 62;

/// Fraction-free elimination: after step k every entry is a (k+1)x(k+1)
/// minor of the input, so all divisions below are exact.
template <typename T>
int bareiss_rank(std::vector<std::vector<T>> a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  T prev = 1;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == -1) continue;
    std::swap(a[rank], a[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        T num = a[rank][col] * a[r][c] - a[r][col] * a[rank][c];
        a[r][c] = num / prev;
        if constexpr (std::is_same_v<T, __int128>) {
          if (a[r][c] >= kWordBound || a[r][c] <= -kWordBound) throw WordOverflow{};
        }
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

template <typename T>
using SparseRow = std::vector<std::pair<int, T>>;  // sorted by column

/// target += scale * source, keeping columns sorted and dropping zeros.
/// col_nnz tracks how many active rows touch each column.
template <typename T>
void add_scaled_row(SparseRow<T>& target, const SparseRow<T>& source, const T& scale,
                    std::vector<int>& col_nnz) {
  SparseRow<T> merged;
  merged.reserve(target.size() + source.size());
  std::size_t a = 0, b = 0;
  while (a < target.size() || b < source.size()) {
    if (b == source.size() || (a < target.size() && target[a].first < source[b].first)) {
      merged.push_back(target[a++]);
    } else if (a == target.size() || source[b].first < target[a].first) {
      T v;
      if constexpr (std::is_same_v<T, long long>) {
        __int128 wide = static_cast<__int128>(scale) * source[b].second;
        if (wide >= kWordBound || wide <= -kWordBound) throw WordOverflow{};
        v = static_cast<long long>(wide);
      } else {
        v = scale * source[b].second;
      }
      if (v != 0) {
        ++col_nnz[source[b].first];
        merged.emplace_back(source[b].first, v);
      }
      ++b;
    } else {
      T v;
      if constexpr (std::is_same_v<T, long long>) {
        __int128 wide = static_cast<__int128>(target[a].second) +
                        static_cast<__int128>(scale) * source[b].second;
        if (wide >= kWordBound || wide <= -kWordBound) throw WordOverflow{};
        v = static_cast<long long>(wide);
      } else {
        v = target[a].second + scale * source[b].second;
      }
      if (v == 0)
        --col_nnz[target[a].first];
      else
        merged.emplace_back(target[a].first, v);
      ++a;
      ++b;
    }
  }
  target = std::move(merged);
}

template <typename T>
const T* row_entry(const SparseRow<T>& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const std::pair<int, T>& e, int c) { return e.first < c; });
  return it != row.end() && it->first == col ? &it->second : nullptr;
}

/// Rank over Q by integer-preserving sparse elimination. Only pivots of
/// absolute value 1 are used (the row operations then stay over Z); the
/// pivot minimizes the Markowitz fill bound. Whatever remains when unit
/// pivots run out goes through dense fraction-free elimination.
template <typename T>
int sparse_rank_char0(std::vector<SparseRow<T>> rows, int cols) {
  std::vector<int> col_nnz(cols, 0);
  for (const auto& row : rows)
    for (const auto& [c, v] : row) ++col_nnz[c];

  int rank = 0;
  while (true) {
    long long best_cost = -1;
    int best_row = -1, best_col = -1;
    for (std::size_t r = 0; r < rows.size() && best_cost != 0; ++r) {
      for (const auto& [c, v] : rows[r]) {
        if (v != 1 && v != -1) continue;
        long long cost =
            static_cast<long long>(rows[r].size() - 1) * (col_nnz[c] - 1);
        if (best_cost < 0 || cost < best_cost) {
          best_cost = cost;
          best_row = static_cast<int>(r);
          best_col = c;
        }
        if (best_cost == 0) break;
      }
    }
    if (best_row < 0) break;

    SparseRow<T> pivot_row = std::move(rows[best_row]);
    for (const auto& [c, v] : pivot_row) --col_nnz[c];
    rows[best_row] = SparseRow<T>();
    const T pivot_val = *row_entry(pivot_row, best_col);

    if (col_nnz[best_col] > 0) {
      for (auto& row : rows) {
        if (row.empty()) continue;
        const T* entry = row_entry(row, best_col);
        if (entry == nullptr) continue;
        T scale = -(*entry) * pivot_val;  // pivot_val is its own inverse
        add_scaled_row(row, pivot_row, scale, col_nnz);
      }
    }
    ++rank;
  }

  // Dense core: remap the surviving columns and finish fraction-free.
  std::vector<int> col_map(cols, -1);
  int live_cols = 0;
  for (int c = 0; c < cols; ++c)
    if (col_nnz[c] > 0) col_map[c] = live_cols++;
  using Wide = std::conditional_t<std::is_same_v<T, long long>, __int128, T>;
  std::vector<std::vector<Wide>> dense;
  for (const auto& row : rows) {
    if (row.empty()) continue;
    std::vector<Wide> out(live_cols, 0);
    for (const auto& [c, v] : row) out[col_map[c]] = v;
    dense.push_back(std::move(out));
  }
  if (!dense.empty()) rank += bareiss_rank(std::move(dense));
  return rank;
}

long long inverse_mod(long long v, int p) {
  long long t = 0, new_t = 1, r = p, new_r = v;
  while (new_r != 0) {
    long long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return t < 0 ? t + p : t;
}

/// Rank over GF(p) by sparse elimination; every nonzero entry can pivot, so
/// the Markowitz scan is unrestricted and nothing is left for a dense pass.
int sparse_rank_mod_p(std::vector<SparseRow<long long>> rows, int cols, int p) {
  std::vector<int> col_nnz(cols, 0);
  for (const auto& row : rows)
    for (const auto& [c, v] : row) ++col_nnz[c];

  int rank = 0;
  while (true) {
    long long best_cost = -1;
    int best_row = -1, best_col = -1;
    for (std::size_t r = 0; r < rows.size() && best_cost != 0; ++r) {
      for (const auto& [c, v] : rows[r]) {
        long long cost =
            static_cast<long long>(rows[r].size() - 1) * (col_nnz[c] - 1);
        if (best_cost < 0 || cost < best_cost) {
          best_cost = cost;
          best_row = static_cast<int>(r);
          best_col = c;
        }
        if (best_cost == 0) break;
      }
    }
    if (best_row < 0) break;

    SparseRow<long long> pivot_row = std::move(rows[best_row]);
    for (const auto& [c, v] : pivot_row) --col_nnz[c];
    rows[best_row] = SparseRow<long long>();
    const long long inv = inverse_mod(*row_entry(pivot_row, best_col), p);

    if (col_nnz[best_col] > 0) {
      for (auto& row : rows) {
        if (row.empty()) continue;
        const long long* entry = row_entry(row, best_col);
        if (entry == nullptr) continue;
        long long scale = (p - *entry % p) * inv % p;
        SparseRow<long long> merged;
        merged.reserve(row.size() + pivot_row.size());
        std::size_t a = 0, b = 0;
        while (a < row.size() || b < pivot_row.size()) {
          if (b == pivot_row.size() ||
              (a < row.size() && row[a].first < pivot_row[b].first)) {
            merged.push_back(row[a++]);
          } else if (a == row.size() || pivot_row[b].first < row[a].first) {
            long long v = scale * pivot_row[b].second % p;
            if (v != 0) {
              ++col_nnz[pivot_row[b].first];
              merged.emplace_back(pivot_row[b].first, v);
            }
            ++b;
          } else {
            long long v = (row[a].second + scale * pivot_row[b].second) % p;
            if (v == 0)
              --col_nnz[row[a].first];
            else
              merged.emplace_back(row[a].first, v);
            ++a;
            ++b;
          }
        }
        row = std::move(merged);
      }
    }
    ++rank;
  }
  return rank;
}

template <typename T>
std::vector<SparseRow<T>> to_sparse(const DenseMatrix& m, int take_mod = 0) {
  std::vector<SparseRow<T>> rows;
  rows.reserve(m.size());
  for (const auto& dense_row : m) {
    SparseRow<T> row;
    for (int c = 0; c < static_cast<int>(dense_row.size()); ++c) {
      long long v = dense_row[c];
      if (take_mod != 0) {
        v %= take_mod;
        if (v < 0) v += take_mod;
      }
      if (v != 0) row.emplace_back(c, v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

int exact_rank(const DenseMatrix& m, const FieldSpec& field) {
  if (m.empty() || m[0].empty()) return 0;
  for (const auto& row : m) {
    if (row.size() != m[0].size()) throw std::invalid_argument("exact_rank: ragged matrix");
  }
  const int cols = static_cast<int>(m[0].size());
  if (field.characteristic == 0) {
    try {
      return sparse_rank_char0(to_sparse<long long>(m), cols);
    } catch (const WordOverflow&) {
      std::vector<SparseRow<mpz_class>> rows;
      rows.reserve(m.size());
      for (const auto& dense_row : m) {
        SparseRow<mpz_class> row;
        for (int c = 0; c < cols; ++c)
          if (dense_row[c] != 0) row.emplace_back(c, static_cast<long>(dense_row[c]));
        if (!row.empty()) rows.push_back(std::move(row));
      }
      return sparse_rank_char0(std::move(rows), cols);
    }
  }
  if (!FieldSpec::is_prime(field.characteristic))
    throw std::invalid_argument("exact_rank: characteristic must be 0 or prime");
  return sparse_rank_mod_p(to_sparse<long long>(m, field.characteristic), cols,
                           field.characteristic);
}

}  // namespace symdepth

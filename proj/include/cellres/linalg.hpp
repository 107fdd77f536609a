#pragma once

// Sparse exact linear algebra: column reduction over a field, small integer
// matrices for chain maps, and Bareiss determinants for orientation signs.

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cellres/error.hpp"

namespace cellres {

/// Column entries sorted by row index; no stored zeros.
template <class E>
using SparseColumn = std::vector<std::pair<int, E>>;

/// Rank of the matrix whose columns are given, by left-to-right reduction
/// on the lowest nonzero row.
template <class Field>
std::size_t rank(const Field& k, std::vector<SparseColumn<typename Field::Element>> columns) {
  using E = typename Field::Element;
  std::unordered_map<int, std::size_t> pivot_of;  // lowest row -> reduced column
  std::size_t r = 0;
  SparseColumn<E> scratch;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    auto& col = columns[c];
    while (!col.empty()) {
      auto it = pivot_of.find(col.back().first);
      if (it == pivot_of.end()) break;
      const auto& piv = columns[it->second];
      E factor = k.mul(col.back().second, k.inv(piv.back().second));
      scratch.clear();
      std::size_t a = 0, b = 0;
      while (a < col.size() || b < piv.size()) {
        if (b == piv.size() || (a < col.size() && col[a].first < piv[b].first)) {
          scratch.push_back(std::move(col[a++]));
        } else if (a == col.size() || piv[b].first < col[a].first) {
          scratch.emplace_back(piv[b].first, k.neg(k.mul(factor, piv[b].second)));
          ++b;
        } else {
          E v = k.sub(col[a].second, k.mul(factor, piv[b].second));
          if (!Field::is_zero(v)) scratch.emplace_back(col[a].first, std::move(v));
          ++a;
          ++b;
        }
      }
      col.swap(scratch);
    }
    if (!col.empty()) {
      pivot_of.emplace(col.back().first, c);
      ++r;
    }
  }
  return r;
}

/// Rank of a matrix with small integer entries, mapped into the field.
template <class Field>
std::size_t rank_of_integer_columns(const Field& k,
                                    const std::vector<std::vector<std::pair<int, long>>>& columns) {
  std::vector<SparseColumn<typename Field::Element>> cols;
  cols.reserve(columns.size());
  for (const auto& c : columns) {
    SparseColumn<typename Field::Element> out;
    out.reserve(c.size());
    for (const auto& [row, v] : c) {
      auto e = k.from_int(v);
      if (!Field::is_zero(e)) out.emplace_back(row, std::move(e));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    cols.push_back(std::move(out));
  }
  return rank(k, std::move(cols));
}

/// Sparse integer matrix stored by columns (row-sorted, no zeros).
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, long>>> columns;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), columns(static_cast<std::size_t>(c)) {}

  long at(int r, int c) const {
    for (const auto& [row, v] : columns[static_cast<std::size_t>(c)])
      if (row == r) return v;
    return 0;
  }
  void set(int r, int c, long v) {
    auto& col = columns[static_cast<std::size_t>(c)];
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const auto& e, int row) { return e.first < row; });
    if (it != col.end() && it->first == r) {
      if (v == 0) col.erase(it);
      else it->second = v;
    } else if (v != 0) {
      col.insert(it, {r, v});
    }
  }
  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns) n += c.size();
    return n;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

/// a * b, with a: p x q and b: q x r.
inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw Error("matrix shape mismatch in multiply");
  IntMatrix out(a.rows, b.cols);
  std::vector<long> acc(static_cast<std::size_t>(a.rows), 0);
  std::vector<int> touched;
  for (int c = 0; c < b.cols; ++c) {
    touched.clear();
    for (const auto& [k, v] : b.columns[static_cast<std::size_t>(c)])
      for (const auto& [r, w] : a.columns[static_cast<std::size_t>(k)]) {
        if (acc[static_cast<std::size_t>(r)] == 0) touched.push_back(r);
        acc[static_cast<std::size_t>(r)] += v * w;
      }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (int r : touched) {
      long v = acc[static_cast<std::size_t>(r)];
      if (v != 0) out.columns[static_cast<std::size_t>(c)].emplace_back(r, v);
      acc[static_cast<std::size_t>(r)] = 0;
    }
  }
  return out;
}

inline bool is_zero(const IntMatrix& m) {
  for (const auto& c : m.columns)
    if (!c.empty()) return false;
  return true;
}

/// Sign (-1, 0, +1) of the determinant of a square integer matrix given by
/// rows, computed by fraction-free Bareiss elimination.
inline int determinant_sign(std::vector<std::vector<long>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw Error("determinant of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  }
  int sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  __int128 d = a[n - 1][n - 1];
  if (d == 0) return 0;
  return d > 0 ? sign : -sign;
}

/// Rank of a small dense integer matrix (rows of equal length), exact.
inline std::size_t integer_rank(std::vector<std::vector<long>> rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  std::vector<std::vector<__int128>> a(rows.size(), std::vector<__int128>(ncols));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < ncols; ++j) a[i][j] = rows[i][j];
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t s = r;
    while (s < a.size() && a[s][c] == 0) ++s;
    if (s == a.size()) continue;
    std::swap(a[r], a[s]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      const __int128 f = a[i][c], p = a[r][c];
      __int128 g = 0;
      for (std::size_t j = c; j < ncols; ++j) {
        a[i][j] = a[i][j] * p - a[r][j] * f;
        __int128 x = a[i][j] < 0 ? -a[i][j] : a[i][j];
        while (x) {
          __int128 t = g % x;
          g = x;
          x = t;
        }
      }
      if (g > 1)
        for (std::size_t j = c; j < ncols; ++j) a[i][j] /= g;
    }
    ++r;
  }
  return r;
}

}  // namespace cellres

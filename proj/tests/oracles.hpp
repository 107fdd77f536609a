#pragma once

// Independent reference computations used by the tests.  Nothing here calls
// into the library's linear algebra, ideal arithmetic, or resolution code;
// monomials are plain std::vector<int>.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace oracle {

using Mono = std::vector<int>;
using Q = boost::multiprecision::mpq_rational;

inline bool divides(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Mono lcm(const Mono& a, const Mono& b) {
  Mono c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
  return c;
}

inline Mono times(const Mono& a, const Mono& b) {
  Mono c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

/// Divisibility scan: keep the elements not strictly divisible by another.
inline std::set<Mono> minimal(const std::vector<Mono>& gens) {
  std::set<Mono> uniq(gens.begin(), gens.end());
  std::set<Mono> out;
  for (const auto& g : uniq) {
    bool dominated = false;
    for (const auto& h : uniq)
      if (h != g && divides(h, g)) dominated = true;
    if (!dominated) out.insert(g);
  }
  return out;
}

/// Every k-fold product of generators, then a divisibility scan.
inline std::set<Mono> power(const std::vector<Mono>& gens, int k) {
  std::vector<Mono> cur{Mono(gens.at(0).size(), 0)};
  for (int step = 0; step < k; ++step) {
    std::vector<Mono> next;
    for (const auto& a : cur)
      for (const auto& g : gens) next.push_back(times(a, g));
    cur = std::move(next);
  }
  return minimal(cur);
}

/// All monomials of total degree d in n variables.
inline std::vector<Mono> degree(std::size_t n, int d) {
  std::vector<Mono> out;
  Mono m(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      m[i] = left;
      out.push_back(m);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m[i] = e;
      self(self, i + 1, left - e);
    }
  };
  if (n > 0) rec(rec, 0, d);
  return out;
}

/// Dense Gaussian elimination over Q.
inline std::size_t rank(std::vector<std::vector<Q>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Q f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

/// Betti numbers of S/I from the Taylor complex, one multidegree at a
/// time: in degree b the tensor with k keeps the subsets with lcm exactly b
/// and only the boundary entries between them, so
/// beta_{i,b} = n_i(b) - rank D_i^b - rank D_{i+1}^b.
inline std::vector<std::size_t> taylor_betti(const std::vector<Mono>& gens_in) {
  auto mins = minimal(gens_in);
  std::vector<Mono> gens(mins.begin(), mins.end());
  const std::size_t g = gens.size();
  std::map<Mono, std::vector<std::vector<std::uint32_t>>> strands;  // b -> subsets by size
  for (std::uint32_t mask = 0; mask < (1u << g); ++mask) {
    Mono l(gens.empty() ? 0 : gens[0].size(), 0);
    std::size_t size = 0;
    for (std::size_t i = 0; i < g; ++i)
      if (mask & (1u << i)) {
        l = lcm(l, gens[i]);
        ++size;
      }
    auto& s = strands[l];
    if (s.size() <= size) s.resize(size + 1);
    s[size].push_back(mask);
  }
  std::vector<std::size_t> betti(g + 1, 0);
  for (auto& [b, by_size] : strands) {
    by_size.resize(g + 2);
    // D_i: subsets of size i -> subsets of size i-1, sign (-1)^position
    auto d_rank = [&](std::size_t i) -> std::size_t {
      if (i == 0 || by_size[i].empty() || by_size[i - 1].empty()) return 0;
      std::map<std::uint32_t, std::size_t> row;
      for (std::size_t k = 0; k < by_size[i - 1].size(); ++k) row[by_size[i - 1][k]] = k;
      std::vector<std::vector<Q>> m(by_size[i - 1].size(), std::vector<Q>(by_size[i].size(), 0));
      for (std::size_t c = 0; c < by_size[i].size(); ++c) {
        std::uint32_t s = by_size[i][c];
        int pos = 0;
        for (std::size_t v = 0; v < g; ++v)
          if (s & (1u << v)) {
            auto it = row.find(s & ~(1u << v));
            if (it != row.end()) m[it->second][c] = (pos % 2 == 0) ? 1 : -1;
            ++pos;
          }
      }
      return rank(m);
    };
    for (std::size_t i = 0; i <= g; ++i) {
      std::size_t n = by_size[i].size();
      if (n == 0) continue;
      betti[i] += n - d_rank(i) - d_rank(i + 1);
    }
  }
  while (betti.size() > 1 && betti.back() == 0) betti.pop_back();
  return betti;
}

/// Cells kept by the label filter x^label | x^b, given every cell label.
inline std::vector<int> label_filter(const std::vector<Mono>& labels, const Mono& b) {
  std::vector<int> out;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (divides(labels[i], b)) out.push_back(static_cast<int>(i));
  return out;
}

/// Images of vertex-label sets under multiplication by each multiplier.
inline std::set<std::set<Mono>> image_sets(const std::vector<std::set<Mono>>& cells,
                                           const std::vector<Mono>& multipliers) {
  std::set<std::set<Mono>> out;
  for (const auto& m : multipliers)
    for (const auto& c : cells) {
      std::set<Mono> img;
      for (const auto& v : c) img.insert(times(v, m));
      out.insert(img);
    }
  return out;
}

/// Minimal generators of (m_1..m_{j-1}) : m_j, by brute force.
inline std::set<Mono> colon(const std::vector<Mono>& gens, std::size_t j) {
  std::vector<Mono> q;
  for (std::size_t i = 0; i < j; ++i) {
    Mono a(gens[i].size());
    for (std::size_t v = 0; v < a.size(); ++v) a[v] = std::max(0, gens[i][v] - gens[j][v]);
    q.push_back(a);
  }
  return minimal(q);
}

}  // namespace oracle

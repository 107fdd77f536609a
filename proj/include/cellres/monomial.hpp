#pragma once

// Exponent vectors and monomial ideals.  Monomials are dense vectors in N^n;
// variable names live outside the arithmetic and are only used for printing.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "cellres/error.hpp"

namespace cellres {

class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : e_(n, 0) {}
  ExponentVector(std::initializer_list<int> entries) : e_(entries) { check(); }
  explicit ExponentVector(std::vector<int> entries) : e_(std::move(entries)) {
    check();
  }

  std::size_t size() const noexcept { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  int& operator[](std::size_t i) { return e_[i]; }
  auto begin() const noexcept { return e_.begin(); }
  auto end() const noexcept { return e_.end(); }
  const std::vector<int>& values() const noexcept { return e_; }

  int degree() const {
    int d = 0;
    for (int v : e_) d += v;
    return d;
  }
  bool is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](int v) { return v == 0; });
  }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

 private:
  void check() const {
    for (int v : e_)
      if (v < 0) throw Error("exponent vector with negative entry");
  }
  std::vector<int> e_;
};

/// Lex order with x_1 > x_2 > ... > x_n: x^2 precedes xy precedes y^2.
/// Every canonical listing in the library (generators, vertices,
/// multipliers) uses this order.
struct MonomialOrder {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    return a > b;
  }
};

namespace detail {
inline void require_same_length(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size())
    throw Error("exponent vectors of different lengths (" + std::to_string(a.size()) +
                " vs " + std::to_string(b.size()) + ")");
}
}  // namespace detail

inline ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  detail::require_same_length(a, b);
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline ExponentVector gcd(const ExponentVector& a, const ExponentVector& b) {
  detail::require_same_length(a, b);
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

/// a | b, i.e. b - a lies in N^n.
inline bool divides(const ExponentVector& a, const ExponentVector& b) {
  detail::require_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline ExponentVector product(const ExponentVector& a, const ExponentVector& b) {
  detail::require_same_length(a, b);
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

/// b / a; requires a | b.
inline ExponentVector quotient(const ExponentVector& b, const ExponentVector& a) {
  if (!divides(a, b)) throw Error("quotient of non-divisible monomials");
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

inline ExponentVector unit_vector(std::size_t n, std::size_t i) {
  ExponentVector r(n);
  r[i] = 1;
  return r;
}

/// x, y, z, w, t, u, v for up to seven variables, x1..xn beyond that.
inline std::vector<std::string> default_variable_names(std::size_t n) {
  static const char* letters[] = {"x", "y", "z", "w", "t", "u", "v"};
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    names.push_back(n <= 7 ? std::string(letters[i]) : "x" + std::to_string(i + 1));
  return names;
}

inline std::string to_string(const ExponentVector& a, const std::vector<std::string>& names) {
  if (a.is_one()) return "1";
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    s += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
    if (a[i] > 1) s += "^" + std::to_string(a[i]);
  }
  return s;
}

inline std::string to_string(const ExponentVector& a) {
  return to_string(a, default_variable_names(a.size()));
}

/// Monomial ideal with a minimal generating set kept in MonomialOrder.
/// An empty generator list is the zero ideal.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(std::size_t n, std::vector<ExponentVector> generators);

  std::size_t num_variables() const noexcept { return n_; }
  const std::vector<ExponentVector>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool contains(const ExponentVector& m) const {
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const ExponentVector& g) { return divides(g, m); });
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<ExponentVector> gens_;
};

/// Drops every generator divisible by another one; the result generates the
/// same ideal and is sorted in MonomialOrder.
inline std::vector<ExponentVector> minimal_generators(std::vector<ExponentVector> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const ExponentVector& a, const ExponentVector& b) {
              if (a.degree() != b.degree()) return a.degree() < b.degree();
              return MonomialOrder{}(a, b);
            });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<ExponentVector> kept;
  for (const auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const ExponentVector& k) { return divides(k, g); });
    if (!redundant) kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end(), MonomialOrder{});
  return kept;
}

inline MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<ExponentVector> generators)
    : n_(n) {
  for (const auto& g : generators)
    if (g.size() != n) throw Error("generator length does not match the variable count");
  gens_ = minimal_generators(std::move(generators));
}

inline MonomialIdeal minimalize_generators(std::size_t n, std::vector<ExponentVector> gens) {
  return MonomialIdeal(n, std::move(gens));
}

/// Minimal generators of I^k.
inline MonomialIdeal ideal_power_generators(const MonomialIdeal& ideal, int k) {
  if (k < 1) throw Error("ideal power exponent must be positive");
  std::vector<ExponentVector> current = ideal.generators();
  for (int step = 1; step < k; ++step) {
    std::vector<ExponentVector> next;
    next.reserve(current.size() * ideal.size());
    for (const auto& a : current)
      for (const auto& g : ideal.generators()) next.push_back(product(a, g));
    current = minimal_generators(std::move(next));
  }
  return MonomialIdeal(ideal.num_variables(), std::move(current));
}

/// All exponent vectors of total degree d in n variables, in MonomialOrder.
inline std::vector<ExponentVector> monomials_of_degree(std::size_t n, int d) {
  std::vector<ExponentVector> out;
  ExponentVector cur(n);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
  };
  if (n == 0) return out;
  rec(0, d);
  return out;
}

}  // namespace cellres

template <>
struct std::hash<cellres::ExponentVector> {
  std::size_t operator()(const cellres::ExponentVector& a) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : a) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};

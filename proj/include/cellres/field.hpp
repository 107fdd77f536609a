#pragma once

// Exact coefficient fields.  Rationals are backed by GMP through
// boost::multiprecision; the prime field stores residues in 64-bit words.

#include <cstdint>
#include <string>
#include <variant>

#include <boost/multiprecision/gmp.hpp>

#include "cellres/error.hpp"

namespace cellres {

struct Rationals {
  using Element = boost::multiprecision::mpq_rational;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long v) const { return Element(v); }
  static bool is_zero(const Element& a) { return a == 0; }
  static bool is_one(const Element& a) { return a == 1; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const {
    if (a == 0) throw Error("division by zero in Q");
    return Element(1) / a;
  }
  static std::string to_string(const Element& a) { return a.str(); }
  std::string name() const { return "Q"; }
};

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

struct PrimeField {
  using Element = std::uint64_t;

  explicit PrimeField(std::uint64_t prime = 32003) : p(prime) {
    if (!is_prime(p) || p > (1ull << 31)) throw Error("PrimeField needs a prime below 2^31");
  }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long v) const {
    long r = v % static_cast<long>(p);
    return static_cast<Element>(r < 0 ? r + static_cast<long>(p) : r);
  }
  static bool is_zero(Element a) { return a == 0; }
  static bool is_one(Element a) { return a == 1; }
  Element add(Element a, Element b) const { return (a + b) % p; }
  Element sub(Element a, Element b) const { return (a + p - b) % p; }
  Element mul(Element a, Element b) const { return (a * b) % p; }
  Element neg(Element a) const { return a == 0 ? 0 : p - a; }
  Element inv(Element a) const {
    if (a == 0) throw Error("division by zero in F_p");
    Element result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
  /// Symmetric representative, so -1 prints as -1.
  std::string to_string(Element a) const {
    if (a > p / 2) return std::to_string(-static_cast<long long>(p - a));
    return std::to_string(a);
  }
  std::string name() const { return "F_" + std::to_string(p); }

  std::uint64_t p;
};

using FieldChoice = std::variant<Rationals, PrimeField>;

inline std::string field_name(const FieldChoice& f) {
  return std::visit([](const auto& k) { return k.name(); }, f);
}

/// Parses the command-line spelling: "q" for rationals, "p<prime>" for F_p.
inline FieldChoice parse_field(const std::string& s) {
  if (s == "q" || s == "Q") return Rationals{};
  if (s.size() > 1 && (s[0] == 'p' || s[0] == 'P')) {
    std::uint64_t p = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw InputError("bad field: " + s);
      p = p * 10 + static_cast<std::uint64_t>(s[i] - '0');
      if (p > (1ull << 31)) throw InputError("prime too large: " + s);
    }
    if (!is_prime(p)) throw InputError("not a prime: " + s);
    return PrimeField(p);
  }
  throw InputError("unknown field '" + s + "' (expected q or p<prime>)");
}

}  // namespace cellres

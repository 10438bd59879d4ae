#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gpd/bigint.hpp"

namespace gpd {

// A variable in the global alphabet, totally ordered as
//   A < B < t < x1 < x2 < ... < y1 < y2 < ... < z1 < z2 < ...
// The packed key preserves this order numerically.
class VarId {
 public:
  enum class Kind : uint8_t { A = 0, B = 1, T = 2, X = 3, Y = 4, Z = 5 };

  static VarId a() { return VarId(Kind::A, 0); }
  static VarId b() { return VarId(Kind::B, 0); }
  static VarId t() { return VarId(Kind::T, 0); }
  static VarId x(int i) { return VarId(Kind::X, i); }
  static VarId y(int i) { return VarId(Kind::Y, i); }
  static VarId z(int i) { return VarId(Kind::Z, i); }

  Kind kind() const { return static_cast<Kind>(key_ >> 24); }
  int index() const { return static_cast<int>(key_ & 0xffffffu); }
  uint32_t key() const { return key_; }

  // "A", "B", "t", "x3", "y12", "z5"
  std::string name() const;
  static std::optional<VarId> from_name(std::string_view s);

  friend bool operator==(VarId lhs, VarId rhs) = default;
  friend std::strong_ordering operator<=>(VarId lhs, VarId rhs) = default;

 private:
  VarId(Kind k, int i);
  uint32_t key_;
};

// Sparse exponent vector: (variable, exponent) pairs sorted by variable, no
// zero exponents stored.  Exponents may be negative (Laurent monomials).
class Monomial {
 public:
  Monomial() = default;
  static Monomial var(VarId v, int e = 1);

  const std::vector<std::pair<VarId, int>>& exps() const { return e_; }
  int exponent(VarId v) const;
  long long degree() const;  // sum of exponents
  bool is_one() const { return e_.empty(); }
  bool has_negative_exponent() const;

  Monomial operator*(const Monomial& o) const;
  // Raise to an integer power (exponents scaled); p may be negative or zero.
  Monomial pow(int p) const;
  // Componentwise quotient a/b when every resulting exponent is >= 0;
  // nullopt otherwise.  This is divisibility of honest monomials, which is
  // what exact polynomial division needs.
  static std::optional<Monomial> divide(const Monomial& a, const Monomial& b);

  // Graded lexicographic comparison in the global variable order: higher
  // total degree first, ties broken by the first variable (in VarId order)
  // carrying a larger exponent.  Returns <0, 0, >0.
  static int cmp_grlex(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& lhs, const Monomial& rhs) = default;

 private:
  std::vector<std::pair<VarId, int>> e_;
};

// Map comparator placing grlex-larger monomials first, so term-map iteration
// order is the canonical printing order.
struct GrlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::cmp_grlex(a, b) > 0;
  }
};

// Exact sparse multivariate (Laurent) polynomial over arbitrary-precision
// integers.  Canonical form: no zero coefficients; equal polynomials have
// identical term maps.  Immutable value semantics; all operations are pure.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, BigInt, GrlexDesc>;

  Polynomial() = default;  // zero
  Polynomial(int c) : Polynomial(BigInt(c)) {}
  Polynomial(long long c) : Polynomial(BigInt(c)) {}
  Polynomial(BigInt c);
  static Polynomial variable(VarId v);
  static Polynomial term(BigInt c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  bool has_negative_exponent() const;
  long long total_degree() const;  // max term degree; 0 for the zero polynomial

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator*=(const Polynomial& o);

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) = default;

 private:
  TermMap terms_;
};

inline Polynomial operator+(long long c, const Polynomial& p) {
  return Polynomial(c) + p;
}
inline Polynomial operator-(long long c, const Polynomial& p) {
  return Polynomial(c) - p;
}
inline Polynomial operator*(long long c, const Polynomial& p) {
  return Polynomial(c) * p;
}

Polynomial pow(const Polynomial& p, unsigned e);

// Ring homomorphism extending sigma; variables absent from sigma map to
// themselves.  A negative exponent on v requires sigma(v) to be a monomial
// with coefficient +-1 (so the inverse stays integral); otherwise
// ValidationError.
Polynomial substitute(const Polynomial& p,
                      const std::map<VarId, Polynomial>& sigma);

// (d, c) where d is the maximum exponent of v across terms of p and c is the
// sum of those terms with v^d divided out.  ValidationError on p = 0.
std::pair<long long, Polynomial> leading_form(const Polynomial& p, VarId v);

// Exact quotient r with r*q = p, both honest polynomials (no negative
// exponents anywhere, including in r).  NotDivisible if no such r exists;
// ValidationError if an input is Laurent or q = 0.
Polynomial exact_div(const Polynomial& p, const Polynomial& q);

// Exact integer value of p under a total assignment of its variables.
// A variable missing from sigma is ValidationError; value 0 on a negative
// exponent is ValidationError.
BigInt evaluate_int(const Polynomial& p, const std::map<VarId, BigInt>& sigma);

// Homogeneous components by total degree, ascending; zero components omitted.
std::vector<std::pair<long long, Polynomial>> homogeneous_components(
    const Polynomial& p);

// Deterministic rendering: terms in descending grlex order, "^" powers,
// "*" products, e.g. "A^2*x1 - 3*B*y2 + 1"; the zero polynomial is "0".
// parse_polynomial inverts it (ParseError on malformed input).
std::string canonical_string(const Polynomial& p);
Polynomial parse_polynomial(std::string_view s);

// {"terms":[{"coeff":"-3","monomial":{"A":2,"x1":1}},...]} with terms in
// canonical order and coefficients as decimal strings.
nlohmann::ordered_json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

// Numerator/denominator pair, deliberately never reduced to lowest terms.
// Equality is by cross-multiplication.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool equals(const RationalFunction& o) const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator*(const Polynomial& p) const;

 private:
  Polynomial num_, den_;
};

std::string canonical_string(const RationalFunction& f);
nlohmann::ordered_json to_json(const RationalFunction& f);

}  // namespace gpd

#pragma once

// Sparse multivariate polynomials over Q in the 2k variables
// x1..xk (indices 0..k-1) and l1..lk (indices k..2k-1, the lambdas).
//
// Representation: integer numerators over one common positive denominator,
// kept reduced so that gcd(numerators, denominator) == 1. Terms are stored
// strictly decreasing in graded-lex order (total degree first, then
// lexicographic with x1 > x2 > ... > xk > l1 > ... > lk), which is also the
// serialization order.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "compdet/exactnum.hpp"

namespace compdet {

inline constexpr std::size_t kMaxVariables = 32;
inline constexpr std::size_t kMaxExponent = 255;

class Monomial {
 public:
  Monomial() = default;

  static Monomial unit(std::size_t var);
  /// exponents[v] for v < exponents.size(); throws DomainError above kMaxExponent.
  static Monomial from_exponents(std::span<const std::uint32_t> exponents);

  std::uint32_t degree() const { return degree_; }
  std::uint32_t operator[](std::size_t var) const {
    return static_cast<std::uint32_t>((words_[var / 8] >> shift(var)) & 0xffU);
  }

  /// True when this monomial divides `other`.
  bool divides(const Monomial& other) const;

  /// Throws DomainError when an exponent would exceed kMaxExponent.
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) = default;
  /// Graded lexicographic.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
    for (std::size_t w = 0; w < kWords; ++w) {
      if (a.words_[w] != b.words_[w]) return a.words_[w] <=> b.words_[w];
    }
    return std::strong_ordering::equal;
  }

 private:
  static constexpr std::size_t kWords = kMaxVariables / 8;
  // One byte per exponent, variable 0 in the most significant byte of word 0,
  // so comparing words as integers is lexicographic on the exponents.
  static constexpr unsigned shift(std::size_t var) { return static_cast<unsigned>(8 * (7 - var % 8)); }

  std::uint32_t degree_ = 0;
  std::array<std::uint64_t, kWords> words_{};
};

/// "x3" for index 2 or "l1" for index k, given k = num_variables / 2.
std::string variable_name(std::size_t index, std::size_t num_variables);
/// Inverse of variable_name; throws ParameterError for unknown names.
std::size_t parse_variable(std::string_view name, std::size_t num_variables);

/// Partial map from variable index to a rational value.
class Assignment {
 public:
  explicit Assignment(std::size_t num_variables) : values_(num_variables) {}

  std::size_t num_variables() const { return values_.size(); }
  void set(std::size_t var, Rational value);
  /// Accepts variable names "x1".."xk", "l1".."lk".
  void set(std::string_view name, Rational value);
  const std::optional<Rational>& get(std::size_t var) const { return values_.at(var); }
  bool is_complete() const;

 private:
  std::vector<std::optional<Rational>> values_;
};

class Polynomial {
 public:
  explicit Polynomial(std::size_t num_variables = 0);

  static Polynomial constant(std::size_t num_variables, const Rational& value);
  static Polynomial variable(std::size_t num_variables, std::size_t var);

  std::size_t num_variables() const { return nvars_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  const Monomial& monomial(std::size_t i) const { return terms_[i].monomial; }
  Rational coefficient(std::size_t i) const;
  Rational coefficient_of(const Monomial& m) const;

  /// Maximum total degree over terms; -1 for the zero polynomial.
  int total_degree() const;
  /// Sum of the terms of total degree exactly `degree`.
  Polynomial homogeneous_component(std::uint32_t degree) const;

  /// Throws ContextError if a variable occurring in the polynomial is unassigned.
  Rational evaluate(const Assignment& assignment) const;
  /// Replaces every assigned variable by its value; others stay symbolic.
  Polynomial partial_evaluate(const Assignment& assignment) const;
  /// Replaces variable v by images[v]; all images share one context.
  Polynomial substitute(std::span<const Polynomial> images) const;

  Polynomial pow(std::uint64_t exponent) const;

  /// Canonical dump, e.g. "1/2*x1^2 + -1/2*x1".
  std::string to_string() const;
  /// Leading term in the same format, "0" for the zero polynomial.
  std::string leading_term_string() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Quotient when b divides a exactly, nullopt otherwise. Throws on b == 0.
  friend std::optional<Polynomial> try_exact_div(const Polynomial& a, const Polynomial& b);

 private:
  struct Term {
    Monomial monomial;
    Integer numerator;
    friend bool operator==(const Term&, const Term&) = default;
  };

  void normalize();
  void check_context(const Polynomial& other) const;
  std::string term_string(std::size_t i) const;
  Polynomial add_scaled(const Polynomial& other, int sign) const;
  static bool multiply_packed(const Polynomial& a, const Polynomial& b, Polynomial& out);
  enum class DivideResult { Exact, Inexact, Unsupported };
  static DivideResult divide_packed(const std::vector<Term>& a, const std::vector<Term>& d, std::size_t nvars,
                                    std::vector<Term>& q);
  static bool divide_heap(const std::vector<Term>& a, const std::vector<Term>& d, std::vector<Term>& q);

  std::size_t nvars_;
  std::vector<Term> terms_;
  Integer den_ = 1;
};

/// Throws InternalError when the division leaves a remainder.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

/// p (p-1) ... (p-m+1); 1 for m == 0.
Polynomial falling_factorial(const Polynomial& p, std::uint64_t m);
/// falling_factorial(p, m) / m!.
Polynomial poly_binomial(const Polynomial& p, std::uint64_t m);

/// Parses the canonical dump format back into a polynomial over 2k variables.
Polynomial parse_polynomial(std::string_view text, std::size_t num_variables);

}  // namespace compdet

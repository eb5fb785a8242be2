#pragma once

// Right-hand sides of the composition-determinant identities, kept in
// factored form, plus the objects used to certify them: the linear factors
// T, the kernel vectors v_eps, the multivariate Chu-Vandermonde sums and the
// product of beta! over a composition set.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "compdet/combinatorics.hpp"
#include "compdet/matrix.hpp"
#include "compdet/polynomial.hpp"

namespace compdet {

enum class TheoremId {
  THM1,   // det(alpha^beta), a number
  THM3,   // det((x + alpha)^beta)
  THM4,   // det(C(x + l alpha, beta)), the general binomial determinant
  THM4B,  // det(C(x + l alpha + beta, beta))
  COR2,   // THM4 with all l_t equal
  COR2B,  // THM4B with all l_t equal
  COR5A,  // det((x + l alpha)^beta)
  COR1A,  // COR5A with all l_t equal
  DP,     // THM4 over positive compositions
  DP2,    // THM4B over positive compositions
  COR1B,  // COR5A over positive compositions
  CONJ1,  // det((x + alpha)^beta) with a single x
  CONJ2,  // det(C(x + alpha + beta, beta)) with a single x
};

inline constexpr TheoremId kAllTheorems[] = {
    TheoremId::THM1,  TheoremId::THM3, TheoremId::THM4, TheoremId::THM4B, TheoremId::COR2,
    TheoremId::COR2B, TheoremId::COR5A, TheoremId::COR1A, TheoremId::DP,  TheoremId::DP2,
    TheoremId::COR1B, TheoremId::CONJ1, TheoremId::CONJ2,
};

std::string_view to_string(TheoremId id);
TheoremId parse_theorem(std::string_view text);

/// The matrix whose determinant the identity evaluates. Scalar-lambda and
/// single-x variables are l1 and x1 of the 2k-variable context.
struct TheoremConfig {
  EntryFamily family;
  Domain domain;
  Substitution substitution;
};

TheoremConfig theorem_config(TheoremId id);

/// Throws ParameterError unless n >= 1, k >= 1 and, for positive-part ids, n >= k.
void check_theorem_parameters(TheoremId id, std::int64_t n, std::int64_t k);

struct Factor {
  Polynomial base;
  std::uint64_t exponent;
};

/// scalar * prod base^exponent. Exponent-0 factors are dropped and constant
/// bases are folded into the scalar on insertion.
class FactoredForm {
 public:
  explicit FactoredForm(std::size_t num_variables, Rational scalar = 1)
      : nvars_(num_variables), scalar_(std::move(scalar)) {}

  std::size_t num_variables() const { return nvars_; }
  const Rational& scalar() const { return scalar_; }
  std::span<const Factor> factors() const { return factors_; }
  std::vector<Factor>& mutable_factors() { return factors_; }

  void multiply_scalar(const Rational& s) { scalar_ *= s; }
  void add_factor(Polynomial base, std::uint64_t exponent);

  Polynomial expand() const;
  Rational evaluate(const Assignment& assignment) const;
  /// Sum of exponent * degree(base); equals expand().total_degree() because
  /// Q[x, l] has no zero divisors. -1 when the form is zero.
  int total_degree() const;
  FactoredForm substitute(std::span<const Polynomial> images) const;

  /// "1/2 * (1*x1 + 1*l1)^2 * (...)^1"
  std::string to_string() const;

 private:
  std::size_t nvars_;
  Rational scalar_;
  std::vector<Factor> factors_;
};

FactoredForm rhs(TheoremId id, std::int64_t n, std::int64_t k);

/// T(n, k, x, l, eps) = n prod_j l_j + sum_t (x_t - eps_t) prod_{j != t} l_j.
Polynomial linear_factor_T(std::int64_t n, std::int64_t k, const Composition& eps);

/// sum_t c_t prod_{j != t} l_j + n prod_j l_j, the lambda-cleared form of
/// n + sum_t c_t / l_t.
Polynomial cleared_linear_factor(std::int64_t n, std::int64_t k, std::span<const Polynomial> c);

/// v_eps scaled by prod_j l_j; coefficients keyed by compositions of n in
/// canonical order.
struct KernelVector {
  std::int64_t n;
  std::int64_t k;
  std::int64_t i;
  Composition eps;
  std::vector<std::pair<Composition, Polynomial>> coefficients;

  /// Dense coefficient vector aligned with enumerate(n, k, Domain::All).
  std::vector<Polynomial> dense() const;
};

KernelVector kernel_vector(std::int64_t n, std::int64_t k, std::int64_t i, const Composition& eps);

/// C(x + l alpha, eps) * T * C(|x + l alpha| - (n - i) - 1, i - 1), the
/// alpha-coefficient of M(n,k) v_eps with the same prod l_j scaling.
Polynomial kernel_action_expected(std::int64_t n, std::int64_t k, std::int64_t i, const Composition& eps,
                                  const Composition& alpha);

/// sum over delta in C(n,k) of prod_t C(x_t, delta_t).
Polynomial chu_vandermonde_lhs(std::int64_t n, std::int64_t k);
/// C(x_1 + ... + x_k, n).
Polynomial chu_vandermonde_rhs(std::int64_t n, std::int64_t k);

/// prod over beta in C(n,k) of beta_1! ... beta_k!, by enumeration.
Integer factorial_product(std::int64_t n, std::int64_t k);
/// prod_{i=1}^{n} i^(k * C(n+k-i-1, k-1)).
Integer factorial_product_closed(std::int64_t n, std::int64_t k);

}  // namespace compdet

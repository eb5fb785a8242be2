#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "compdet/combinatorics.hpp"
#include "compdet/exactnum.hpp"
#include "compdet/polynomial.hpp"

namespace compdet {

/// Entry at (row alpha, column beta), as a product over t = 1..k of
///   Binomial:      C(x_t + l_t alpha_t, beta_t)
///   BinomialBeta:  C(x_t + l_t alpha_t + beta_t, beta_t)
///   Power:         (x_t + l_t alpha_t)^beta_t       (0^0 = 1)
enum class EntryFamily { Binomial, BinomialBeta, Power };

std::string_view to_string(EntryFamily family);
/// Accepts "binomial", "binomial_beta", "power" in any case.
EntryFamily parse_family(std::string_view text);

/// Dense row-major square matrix.
template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  SquareMatrix(std::size_t order, const T& fill) : order_(order), data_(order * order, fill) {}

  std::size_t order() const { return order_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * order_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * order_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < order_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

 private:
  std::size_t order_ = 0;
  std::vector<T> data_;
};

/// Rows and columns share `index`, the canonical composition order.
struct SymbolicMatrix {
  EntryFamily family;
  Domain domain;
  std::int64_t n;
  std::int64_t k;
  std::vector<Composition> index;
  SquareMatrix<Polynomial> entries;

  std::size_t order() const { return entries.order(); }
};

/// The single matrix entry for (alpha, beta), as a polynomial over 2k variables.
Polynomial matrix_entry(EntryFamily family, const Composition& alpha, const Composition& beta);

SymbolicMatrix build_matrix(EntryFamily family, Domain domain, std::int64_t n, std::int64_t k);

/// Entrywise value of build_matrix at a complete assignment, computed on
/// numbers directly. Throws ContextError if any variable is unassigned.
SquareMatrix<Rational> build_numeric_matrix(EntryFamily family, Domain domain, std::int64_t n, std::int64_t k,
                                            const Assignment& assignment);

/// Variable maps used to specialize the general families.
enum class Substitution {
  None,              // x_t, l_t free
  ScalarLambda,      // l_t -> l1
  UnitLambda,        // l_t -> 1
  UnitLambdaSingleX, // l_t -> 1, x_t -> x1
  ScalarLambdaSingleX, // l_t -> l1, x_t -> x1 (unused by theorem ids, handy for checks)
  ZeroXUnitLambda,   // x_t -> 0, l_t -> 1
};

/// One image per variable for Polynomial::substitute, over 2k variables.
std::vector<Polynomial> substitution_images(Substitution s, std::int64_t k);

/// Pushes a complete assignment through the substitution, e.g. under
/// ScalarLambda every l_t takes the value drawn for l1.
Assignment apply_substitution(Substitution s, const Assignment& assignment);

/// Applies the substitution to every entry.
SquareMatrix<Polynomial> substitute_entries(const SquareMatrix<Polynomial>& m, Substitution s, std::int64_t k);

/// Polynomial x_t (t is 1-based) or l_t in a 2k-variable context.
Polynomial x_var(std::int64_t k, std::int64_t t);
Polynomial lambda_var(std::int64_t k, std::int64_t t);

}  // namespace compdet

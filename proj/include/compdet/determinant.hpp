#pragma once

// Exact determinants over Q and over Q[x, l].
//
// det_bareiss is the production backend: fraction-free elimination where
// each update (pivot * a_ij - a_ik * a_kj) is divided exactly by the
// previous pivot. det_laplace is an independent cofactor-expansion oracle,
// capped at order 8.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "compdet/errors.hpp"
#include "compdet/matrix.hpp"

namespace compdet {

inline constexpr std::size_t kLaplaceMaxOrder = 8;

namespace detail {

inline bool is_zero(const Rational& v) { return v == 0; }
inline bool is_zero(const Polynomial& v) { return v.is_zero(); }

inline Rational divide_exact(const Rational& a, const Rational& b) { return a / b; }
inline Polynomial divide_exact(const Polynomial& a, const Polynomial& b) { return exact_div(a, b); }

inline Rational zero_like(const Rational&) { return 0; }
inline Polynomial zero_like(const Polynomial& p) { return Polynomial(p.num_variables()); }
inline Rational one_like(const Rational&) { return 1; }
inline Polynomial one_like(const Polynomial& p) { return Polynomial::constant(p.num_variables(), 1); }

template <class T>
T laplace_rec(const SquareMatrix<T>& m, std::size_t row, std::uint32_t used_cols) {
  const std::size_t order = m.order();
  if (row == order) return one_like(m(0, 0));
  T sum = zero_like(m(0, 0));
  bool negative = false;
  for (std::size_t c = 0; c < order; ++c) {
    if (used_cols & (1U << c)) continue;
    if (!is_zero(m(row, c))) {
      T term = m(row, c) * laplace_rec(m, row + 1, used_cols | (1U << c));
      if (negative) {
        sum -= term;
      } else {
        sum += term;
      }
    }
    negative = !negative;
  }
  return sum;
}

}  // namespace detail

/// Cofactor expansion along the first row. Throws SizeError above order 8.
template <class T>
T det_laplace(const SquareMatrix<T>& m) {
  if (m.order() > kLaplaceMaxOrder) {
    throw SizeError("Laplace oracle is limited to order " + std::to_string(kLaplaceMaxOrder));
  }
  if (m.order() == 0) throw ParameterError("determinant of an empty matrix");
  return detail::laplace_rec(m, 0, 0);
}

/// Fraction-free Gaussian elimination. Pivot is the first nonzero entry in
/// the column (row exchange flips the sign); an all-zero pivot column gives 0.
template <class T>
T det_bareiss(SquareMatrix<T> m) {
  const std::size_t order = m.order();
  if (order == 0) throw ParameterError("determinant of an empty matrix");
  bool negative = false;
  T previous = detail::one_like(m(0, 0));
  for (std::size_t p = 0; p + 1 < order; ++p) {
    if (detail::is_zero(m(p, p))) {
      std::size_t r = p + 1;
      while (r < order && detail::is_zero(m(r, p))) ++r;
      if (r == order) return detail::zero_like(m(0, 0));
      m.swap_rows(p, r);
      negative = !negative;
    }
    for (std::size_t i = p + 1; i < order; ++i) {
      for (std::size_t j = p + 1; j < order; ++j) {
        T cross = m(p, p) * m(i, j);
        if (!detail::is_zero(m(i, p)) && !detail::is_zero(m(p, j))) cross -= m(i, p) * m(p, j);
        m(i, j) = detail::divide_exact(cross, previous);
      }
    }
    previous = m(p, p);
  }
  T result = std::move(m(order - 1, order - 1));
  if (negative) result = -result;
  return result;
}

/// det_bareiss over the numeric matrix; never expands polynomials.
Rational det_numeric(EntryFamily family, Domain domain, std::int64_t n, std::int64_t k, const Assignment& assignment);

}  // namespace compdet

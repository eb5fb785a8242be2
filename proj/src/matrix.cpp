#include "compdet/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "compdet/errors.hpp"

namespace compdet {

std::string_view to_string(EntryFamily family) {
  switch (family) {
    case EntryFamily::Binomial:
      return "BINOMIAL";
    case EntryFamily::BinomialBeta:
      return "BINOMIAL_BETA";
    case EntryFamily::Power:
      return "POWER";
  }
  return "?";
}

EntryFamily parse_family(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "binomial") return EntryFamily::Binomial;
  if (lower == "binomial_beta") return EntryFamily::BinomialBeta;
  if (lower == "power") return EntryFamily::Power;
  throw ParameterError("unknown family '" + std::string(text) + "' (expected binomial, binomial_beta or power)");
}

namespace {

std::size_t num_vars(std::int64_t k) {
  if (2 * static_cast<std::size_t>(k) > kMaxVariables) {
    throw ParameterError("symbolic computations support k <= " + std::to_string(kMaxVariables / 2));
  }
  return 2 * static_cast<std::size_t>(k);
}

}  // namespace

Polynomial x_var(std::int64_t k, std::int64_t t) {
  return Polynomial::variable(num_vars(k), static_cast<std::size_t>(t - 1));
}

Polynomial lambda_var(std::int64_t k, std::int64_t t) {
  return Polynomial::variable(num_vars(k), static_cast<std::size_t>(k + t - 1));
}

Polynomial matrix_entry(EntryFamily family, const Composition& alpha, const Composition& beta) {
  const auto k = static_cast<std::int64_t>(alpha.size());
  const std::size_t nv = num_vars(k);
  Polynomial entry = Polynomial::constant(nv, 1);
  for (std::int64_t t = 1; t <= k; ++t) {
    const auto a = alpha[static_cast<std::size_t>(t - 1)];
    const auto b = beta[static_cast<std::size_t>(t - 1)];
    if (b == 0) continue;  // every family gives the factor 1
    Polynomial top = x_var(k, t) + lambda_var(k, t) * Rational(a);
    switch (family) {
      case EntryFamily::Binomial:
        entry *= poly_binomial(top, b);
        break;
      case EntryFamily::BinomialBeta:
        entry *= poly_binomial(top + Polynomial::constant(nv, b), b);
        break;
      case EntryFamily::Power:
        entry *= top.pow(b);
        break;
    }
  }
  return entry;
}

SymbolicMatrix build_matrix(EntryFamily family, Domain domain, std::int64_t n, std::int64_t k) {
  SymbolicMatrix m{family, domain, n, k, enumerate(n, k, domain), {}};
  const std::size_t order = m.index.size();
  m.entries = SquareMatrix<Polynomial>(order, Polynomial(num_vars(k)));
  for (std::size_t r = 0; r < order; ++r) {
    for (std::size_t c = 0; c < order; ++c) m.entries(r, c) = matrix_entry(family, m.index[r], m.index[c]);
  }
  return m;
}

namespace {

Rational numeric_binomial(const Rational& top, std::uint32_t m) {
  Rational r = 1;
  for (std::uint32_t i = 0; i < m; ++i) r *= top - i;
  return r / Rational(factorial(m));
}

}  // namespace

SquareMatrix<Rational> build_numeric_matrix(EntryFamily family, Domain domain, std::int64_t n, std::int64_t k,
                                            const Assignment& assignment) {
  const auto vars = enumerate(n, k, domain);
  const auto kk = static_cast<std::size_t>(k);
  if (assignment.num_variables() != 2 * kk) throw ContextError("assignment must cover x1..xk and l1..lk");
  std::vector<Rational> x(kk);
  std::vector<Rational> lam(kk);
  for (std::size_t t = 0; t < kk; ++t) {
    const auto& xv = assignment.get(t);
    const auto& lv = assignment.get(kk + t);
    if (!xv) throw ContextError("no value assigned to x" + std::to_string(t + 1));
    if (!lv) throw ContextError("no value assigned to l" + std::to_string(t + 1));
    x[t] = *xv;
    lam[t] = *lv;
  }
  const std::size_t order = vars.size();
  SquareMatrix<Rational> out(order, Rational(0));
  for (std::size_t r = 0; r < order; ++r) {
    for (std::size_t c = 0; c < order; ++c) {
      Rational entry = 1;
      for (std::size_t t = 0; t < kk && entry != 0; ++t) {
        const Rational top = x[t] + lam[t] * vars[r][t];
        const std::uint32_t b = vars[c][t];
        switch (family) {
          case EntryFamily::Binomial:
            entry *= numeric_binomial(top, b);
            break;
          case EntryFamily::BinomialBeta:
            entry *= numeric_binomial(top + b, b);
            break;
          case EntryFamily::Power:
            entry *= pow(top, b);  // pow(0, 0) == 1
            break;
        }
      }
      out(r, c) = entry;
    }
  }
  return out;
}

std::vector<Polynomial> substitution_images(Substitution s, std::int64_t k) {
  const std::size_t nv = num_vars(k);
  std::vector<Polynomial> images;
  images.reserve(nv);
  for (std::int64_t t = 1; t <= k; ++t) {
    switch (s) {
      case Substitution::UnitLambdaSingleX:
      case Substitution::ScalarLambdaSingleX:
        images.push_back(x_var(k, 1));
        break;
      case Substitution::ZeroXUnitLambda:
        images.push_back(Polynomial(nv));
        break;
      default:
        images.push_back(x_var(k, t));
    }
  }
  for (std::int64_t t = 1; t <= k; ++t) {
    switch (s) {
      case Substitution::None:
        images.push_back(lambda_var(k, t));
        break;
      case Substitution::ScalarLambda:
      case Substitution::ScalarLambdaSingleX:
        images.push_back(lambda_var(k, 1));
        break;
      case Substitution::UnitLambda:
      case Substitution::UnitLambdaSingleX:
      case Substitution::ZeroXUnitLambda:
        images.push_back(Polynomial::constant(nv, 1));
        break;
    }
  }
  return images;
}

Assignment apply_substitution(Substitution s, const Assignment& assignment) {
  const std::size_t nv = assignment.num_variables();
  const std::size_t k = nv / 2;
  Assignment out(nv);
  for (std::size_t t = 0; t < k; ++t) {
    auto pick = [&](std::size_t v) -> Rational {
      const auto& value = assignment.get(v);
      if (!value) throw ContextError("no value assigned to " + variable_name(v, nv));
      return *value;
    };
    switch (s) {
      case Substitution::None:
        out.set(t, pick(t));
        out.set(k + t, pick(k + t));
        break;
      case Substitution::ScalarLambda:
        out.set(t, pick(t));
        out.set(k + t, pick(k));
        break;
      case Substitution::UnitLambda:
        out.set(t, pick(t));
        out.set(k + t, Rational(1));
        break;
      case Substitution::UnitLambdaSingleX:
        out.set(t, pick(0));
        out.set(k + t, Rational(1));
        break;
      case Substitution::ScalarLambdaSingleX:
        out.set(t, pick(0));
        out.set(k + t, pick(k));
        break;
      case Substitution::ZeroXUnitLambda:
        out.set(t, Rational(0));
        out.set(k + t, Rational(1));
        break;
    }
  }
  return out;
}

SquareMatrix<Polynomial> substitute_entries(const SquareMatrix<Polynomial>& m, Substitution s, std::int64_t k) {
  if (s == Substitution::None) return m;
  const auto images = substitution_images(s, k);
  SquareMatrix<Polynomial> out(m.order(), Polynomial(num_vars(k)));
  for (std::size_t r = 0; r < m.order(); ++r) {
    for (std::size_t c = 0; c < m.order(); ++c) out(r, c) = m(r, c).substitute(images);
  }
  return out;
}

}  // namespace compdet

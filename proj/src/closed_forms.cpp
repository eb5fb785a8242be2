#include "compdet/closed_forms.hpp"

#include <algorithm>
#include <cctype>

#include "compdet/errors.hpp"

namespace compdet {

namespace {

struct TheoremEntry {
  TheoremId id;
  std::string_view name;
  TheoremConfig config;
};

constexpr TheoremEntry kTheoremTable[] = {
    {TheoremId::THM1, "THM1", {EntryFamily::Power, Domain::All, Substitution::ZeroXUnitLambda}},
    {TheoremId::THM3, "THM3", {EntryFamily::Power, Domain::All, Substitution::UnitLambda}},
    {TheoremId::THM4, "THM4", {EntryFamily::Binomial, Domain::All, Substitution::None}},
    {TheoremId::THM4B, "THM4B", {EntryFamily::BinomialBeta, Domain::All, Substitution::None}},
    {TheoremId::COR2, "COR2", {EntryFamily::Binomial, Domain::All, Substitution::ScalarLambda}},
    {TheoremId::COR2B, "COR2B", {EntryFamily::BinomialBeta, Domain::All, Substitution::ScalarLambda}},
    {TheoremId::COR5A, "COR5A", {EntryFamily::Power, Domain::All, Substitution::None}},
    {TheoremId::COR1A, "COR1A", {EntryFamily::Power, Domain::All, Substitution::ScalarLambda}},
    {TheoremId::DP, "DP", {EntryFamily::Binomial, Domain::Positive, Substitution::None}},
    {TheoremId::DP2, "DP2", {EntryFamily::BinomialBeta, Domain::Positive, Substitution::None}},
    {TheoremId::COR1B, "COR1B", {EntryFamily::Power, Domain::Positive, Substitution::None}},
    {TheoremId::CONJ1, "CONJ1", {EntryFamily::Power, Domain::All, Substitution::UnitLambdaSingleX}},
    {TheoremId::CONJ2, "CONJ2", {EntryFamily::BinomialBeta, Domain::All, Substitution::UnitLambdaSingleX}},
};

const TheoremEntry& entry_for(TheoremId id) {
  for (const auto& e : kTheoremTable) {
    if (e.id == id) return e;
  }
  throw ParameterError("unknown theorem id");
}

std::size_t nvars(std::int64_t k) { return 2 * static_cast<std::size_t>(k); }

Polynomial constant(std::int64_t k, const Rational& c) { return Polynomial::constant(nvars(k), c); }

Polynomial sum_x(std::int64_t k) {
  Polynomial s(nvars(k));
  for (std::int64_t t = 1; t <= k; ++t) s += x_var(k, t);
  return s;
}

Integer ipow(std::int64_t base, const Integer& exponent) { return pow(Integer(base), to_u64(exponent)); }

/// prod_{i=1}^{upper} i^(multiplier * C(top_offset - i, k_bottom)), counting convention.
Integer power_product(std::int64_t upper, std::int64_t multiplier, std::int64_t top_offset, std::int64_t bottom) {
  Integer out = 1;
  for (std::int64_t i = 2; i <= upper; ++i) {
    out *= ipow(i, multiplier * counting_binomial(top_offset - i, bottom));
  }
  return out;
}

/// Appends one factor per eps with |eps| < bound, each the cleared form of
/// n + sum_t (x_t + shift + sign * eps_t) / l_t.
void add_eps_factors(FactoredForm& form, std::int64_t n, std::int64_t k, std::int64_t bound, std::int64_t shift,
                     int sign) {
  std::vector<Polynomial> c(static_cast<std::size_t>(k), Polynomial(nvars(k)));
  for (std::int64_t m = 0; m < bound; ++m) {
    for_each_composition(m, k, Domain::All, [&](std::span<const std::uint32_t> eps) {
      for (std::int64_t t = 1; t <= k; ++t) {
        const std::int64_t e = eps[static_cast<std::size_t>(t - 1)];
        c[static_cast<std::size_t>(t - 1)] = x_var(k, t) + constant(k, Rational(shift + sign * e));
      }
      form.add_factor(cleared_linear_factor(n, k, c), 1);
    });
  }
}

/// prod_{t=1}^{k} prod_{j=1}^{n-k+1} (x_t + j l_t + shift)^{e_j}, with e_j the
/// number of compositions of n-k-j+1 into k-1 parts. Returns prod_j j^{k e_j},
/// the divisor contributed by the /j inside each base of the binomial forms.
Integer add_positive_prefactor(FactoredForm& form, std::int64_t n, std::int64_t k, std::int64_t shift) {
  Integer divisor = 1;
  for (std::int64_t j = 1; j <= n - k + 1; ++j) {
    const Integer e = composition_count(n - k - j + 1, k - 1);
    if (e == 0) continue;
    for (std::int64_t t = 1; t <= k; ++t) {
      form.add_factor(x_var(k, t) + lambda_var(k, t) * Rational(j) + constant(k, Rational(shift)), to_u64(e));
    }
    divisor *= ipow(j, k * e);
  }
  return divisor;
}

}  // namespace

std::string_view to_string(TheoremId id) { return entry_for(id).name; }

TheoremId parse_theorem(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
  for (const auto& e : kTheoremTable) {
    if (e.name == upper) return e.id;
  }
  throw ParameterError("unknown theorem id '" + std::string(text) + "'");
}

TheoremConfig theorem_config(TheoremId id) { return entry_for(id).config; }

void check_theorem_parameters(TheoremId id, std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1) {
    throw ParameterError(std::string(to_string(id)) + " needs positive n and k (got n = " + std::to_string(n) +
                         ", k = " + std::to_string(k) + ")");
  }
  check_parameters(n, k, theorem_config(id).domain);
}

// ---------------------------------------------------------------- FactoredForm

void FactoredForm::add_factor(Polynomial base, std::uint64_t exponent) {
  if (base.num_variables() != nvars_) throw ContextError("factor base has a different variable context");
  if (exponent == 0) return;
  if (base.is_constant()) {
    const Rational c = base.is_zero() ? Rational(0) : base.coefficient(0);
    scalar_ *= pow(c, exponent);
    return;
  }
  factors_.push_back({std::move(base), exponent});
}

Polynomial FactoredForm::expand() const {
  Polynomial out = Polynomial::constant(nvars_, scalar_);
  for (const auto& f : factors_) {
    if (out.is_zero()) break;
    out *= f.base.pow(f.exponent);
  }
  return out;
}

Rational FactoredForm::evaluate(const Assignment& assignment) const {
  Rational out = scalar_;
  for (const auto& f : factors_) {
    if (out == 0) break;
    out *= pow(f.base.evaluate(assignment), f.exponent);
  }
  return out;
}

int FactoredForm::total_degree() const {
  if (scalar_ == 0) return -1;
  std::int64_t d = 0;
  for (const auto& f : factors_) d += static_cast<std::int64_t>(f.exponent) * f.base.total_degree();
  return static_cast<int>(d);
}

FactoredForm FactoredForm::substitute(std::span<const Polynomial> images) const {
  const std::size_t target = images.empty() ? nvars_ : images.front().num_variables();
  FactoredForm out(target, scalar_);
  for (const auto& f : factors_) out.add_factor(f.base.substitute(images), f.exponent);
  return out;
}

std::string FactoredForm::to_string() const {
  std::string s = compdet::to_string(scalar_);
  for (const auto& f : factors_) s += " * (" + f.base.to_string() + ")^" + std::to_string(f.exponent);
  return s;
}

// ---------------------------------------------------------------- factors

Polynomial cleared_linear_factor(std::int64_t n, std::int64_t k, std::span<const Polynomial> c) {
  if (c.size() != static_cast<std::size_t>(k)) throw ParameterError("need one numerator per part");
  Polynomial all = constant(k, Rational(n));
  for (std::int64_t j = 1; j <= k; ++j) all *= lambda_var(k, j);
  Polynomial out = all;
  for (std::int64_t t = 1; t <= k; ++t) {
    Polynomial others = c[static_cast<std::size_t>(t - 1)];
    for (std::int64_t j = 1; j <= k; ++j) {
      if (j != t) others *= lambda_var(k, j);
    }
    out += others;
  }
  return out;
}

Polynomial linear_factor_T(std::int64_t n, std::int64_t k, const Composition& eps) {
  if (eps.size() != static_cast<std::size_t>(k)) throw ParameterError("eps must have k parts");
  std::vector<Polynomial> c;
  c.reserve(eps.size());
  for (std::int64_t t = 1; t <= k; ++t) {
    c.push_back(x_var(k, t) - constant(k, Rational(eps[static_cast<std::size_t>(t - 1)])));
  }
  return cleared_linear_factor(n, k, c);
}

// ---------------------------------------------------------------- rhs

FactoredForm rhs(TheoremId id, std::int64_t n, std::int64_t k) {
  check_theorem_parameters(id, n, k);
  FactoredForm form(nvars(k));
  const Integer eps_count = counting_binomial(n + k - 1, k);  // #{eps : |eps| < n}
  const Polynomial lam = lambda_var(k, 1);
  const Polynomial x1 = x_var(k, 1);
  // prod_{i=1}^{n} i^{C(n+k-i-1, k-1)}
  const Integer binomial_denominator = power_product(n, 1, n + k - 1, k - 1);
  // prod_{i=1}^{n} i^{(k-1) C(n+k-i-1, k-1)}
  const Integer power_constant = power_product(n, k - 1, n + k - 1, k - 1);

  switch (id) {
    case TheoremId::THM1:
    case TheoremId::CONJ1: {
      // n^{k-1} prod_{i=1}^{n-1} i^{(n-i+1) C(n+k-i-1, k-2)}
      Integer c = pow(Integer(n), static_cast<std::uint64_t>(k - 1));
      for (std::int64_t i = 2; i <= n - 1; ++i) c *= ipow(i, (n - i + 1) * counting_binomial(n + k - i - 1, k - 2));
      form.multiply_scalar(Rational(c));
      if (id == TheoremId::THM1) {
        form.multiply_scalar(Rational(ipow(n, eps_count)));
      } else {
        form.add_factor(x1 * Rational(k) + constant(k, Rational(n)), to_u64(eps_count));
      }
      break;
    }
    case TheoremId::THM3:
      form.multiply_scalar(Rational(power_constant));
      form.add_factor(sum_x(k) + constant(k, Rational(n)), to_u64(eps_count));
      break;
    case TheoremId::THM4:
      form.multiply_scalar(Rational(Integer(1), binomial_denominator));
      add_eps_factors(form, n, k, n, 0, -1);
      break;
    case TheoremId::THM4B:
      form.multiply_scalar(Rational(Integer(1), binomial_denominator));
      add_eps_factors(form, n, k, n, 1, +1);
      break;
    case TheoremId::COR2:
    case TheoremId::COR2B: {
      form.multiply_scalar(Rational(Integer(1), binomial_denominator));
      form.add_factor(lam, to_u64((k - 1) * eps_count));
      for (std::int64_t i = 1; i <= n; ++i) {
        // |x| + (l - 1) n + i   or   |x| + (l + 1) n + k - i
        Polynomial base = id == TheoremId::COR2
                              ? sum_x(k) + lam * Rational(n) + constant(k, Rational(i - n))
                              : sum_x(k) + lam * Rational(n) + constant(k, Rational(n + k - i));
        form.add_factor(std::move(base), to_u64(counting_binomial(n + k - i - 1, k - 1)));
      }
      break;
    }
    case TheoremId::CONJ2:
      form.multiply_scalar(Rational(Integer(1), binomial_denominator));
      for (std::int64_t i = 0; i <= n - 1; ++i) {
        form.add_factor(x1 * Rational(k) + constant(k, Rational(n + k + i)), to_u64(counting_binomial(k + i - 1, k - 1)));
      }
      break;
    case TheoremId::COR5A:
      form.multiply_scalar(Rational(power_constant));
      form.add_factor(linear_factor_T(n, k, Composition(std::vector<std::uint32_t>(static_cast<std::size_t>(k), 0))),
                      to_u64(eps_count));
      break;
    case TheoremId::COR1A:
      form.multiply_scalar(Rational(power_constant));
      form.add_factor(lam, to_u64((k - 1) * eps_count));
      form.add_factor(sum_x(k) + lam * Rational(n), to_u64(eps_count));
      break;
    case TheoremId::DP:
    case TheoremId::DP2: {
      const std::int64_t shift = id == TheoremId::DP ? 0 : 1;
      const Integer divisor = add_positive_prefactor(form, n, k, shift);
      // prod_{i=1}^{n} i^{C(n-i-1, k-1)}
      const Integer denominator = power_product(n, 1, n - 1, k - 1);
      form.multiply_scalar(Rational(Integer(1), divisor * denominator));
      if (id == TheoremId::DP) {
        add_eps_factors(form, n, k, n - k, -1, -1);
      } else {
        add_eps_factors(form, n, k, n - k, 2, +1);
      }
      break;
    }
    case TheoremId::COR1B: {
      add_positive_prefactor(form, n, k, 0);
      form.add_factor(linear_factor_T(n, k, Composition(std::vector<std::uint32_t>(static_cast<std::size_t>(k), 0))),
                      to_u64(counting_binomial(n - 1, k)));
      // prod_{i=1}^{n-k} i^{(k-1) C(n-i-1, k-1)}
      form.multiply_scalar(Rational(power_product(n - k, k - 1, n - 1, k - 1)));
      break;
    }
  }
  return form;
}

// ---------------------------------------------------------------- kernel

std::vector<Polynomial> KernelVector::dense() const {
  std::vector<Polynomial> out(count(n, k, Domain::All), Polynomial(nvars(k)));
  for (const auto& [c, p] : coefficients) out[index_of(c, n, k, Domain::All)] = p;
  return out;
}

namespace {

void check_kernel_parameters(std::int64_t n, std::int64_t k, std::int64_t i, const Composition& eps) {
  check_parameters(n, k, Domain::All);
  if (i < 1 || i > n) throw ParameterError("kernel index i must satisfy 1 <= i <= n");
  if (eps.size() != static_cast<std::size_t>(k) || eps.sum() != static_cast<std::uint64_t>(n - i)) {
    throw ParameterError("eps = " + eps.to_string() + " is not a composition of n - i = " + std::to_string(n - i) +
                         " into " + std::to_string(k) + " parts");
  }
}

}  // namespace

KernelVector kernel_vector(std::int64_t n, std::int64_t k, std::int64_t i, const Composition& eps) {
  check_kernel_parameters(n, k, i, eps);
  KernelVector v{n, k, i, eps, {}};
  for (const auto& delta : enumerate(i, k, Domain::All)) {
    // (sum_t delta_t / l_t) * prod_j l_j = sum_t delta_t prod_{j != t} l_j
    Polynomial weight(nvars(k));
    Integer multinomial = 1;
    for (std::int64_t t = 1; t <= k; ++t) {
      const auto d = delta[static_cast<std::size_t>(t - 1)];
      const auto e = eps[static_cast<std::size_t>(t - 1)];
      multinomial *= counting_binomial(d + e, d);
      if (d == 0) continue;
      Polynomial term = constant(k, Rational(d));
      for (std::int64_t j = 1; j <= k; ++j) {
        if (j != t) term *= lambda_var(k, j);
      }
      weight += term;
    }
    v.coefficients.emplace_back(delta + eps, weight * Rational(multinomial));
  }
  std::sort(v.coefficients.begin(), v.coefficients.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

Polynomial kernel_action_expected(std::int64_t n, std::int64_t k, std::int64_t i, const Composition& eps,
                                  const Composition& alpha) {
  check_kernel_parameters(n, k, i, eps);
  if (alpha.size() != static_cast<std::size_t>(k) || alpha.sum() != static_cast<std::uint64_t>(n)) {
    throw ParameterError("alpha = " + alpha.to_string() + " is not a composition of n");
  }
  const Polynomial binomial_eps = matrix_entry(EntryFamily::Binomial, alpha, eps);
  Polynomial shifted_sum = constant(k, Rational(-(n - i) - 1));
  for (std::int64_t t = 1; t <= k; ++t) {
    shifted_sum += x_var(k, t) + lambda_var(k, t) * Rational(alpha[static_cast<std::size_t>(t - 1)]);
  }
  return binomial_eps * linear_factor_T(n, k, eps) * poly_binomial(shifted_sum, static_cast<std::uint64_t>(i - 1));
}

// ---------------------------------------------------------------- lemma objects

Polynomial chu_vandermonde_lhs(std::int64_t n, std::int64_t k) {
  check_parameters(n, k, Domain::All);
  std::vector<std::vector<Polynomial>> binomials(static_cast<std::size_t>(k));
  for (std::int64_t t = 1; t <= k; ++t) {
    for (std::int64_t m = 0; m <= n; ++m) binomials[t - 1].push_back(poly_binomial(x_var(k, t), m));
  }
  Polynomial sum(nvars(k));
  for_each_composition(n, k, Domain::All, [&](std::span<const std::uint32_t> delta) {
    Polynomial term = constant(k, 1);
    for (std::size_t t = 0; t < delta.size(); ++t) term *= binomials[t][delta[t]];
    sum += term;
  });
  return sum;
}

Polynomial chu_vandermonde_rhs(std::int64_t n, std::int64_t k) {
  check_parameters(n, k, Domain::All);
  return poly_binomial(sum_x(k), static_cast<std::uint64_t>(n));
}

Integer factorial_product(std::int64_t n, std::int64_t k) {
  check_parameters(n, k, Domain::All);
  Integer out = 1;
  for_each_composition(n, k, Domain::All, [&](std::span<const std::uint32_t> beta) {
    for (auto b : beta) {
      if (b > 1) out *= factorial(b);
    }
  });
  return out;
}

Integer factorial_product_closed(std::int64_t n, std::int64_t k) {
  check_parameters(n, k, Domain::All);
  return power_product(n, k, n + k - 1, k - 1);
}

}  // namespace compdet

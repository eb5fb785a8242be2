#include "compdet/verifier.hpp"

#include <algorithm>
#include <cctype>
#include <atomic>
#include <random>
#include <thread>

#include "compdet/determinant.hpp"
#include "compdet/errors.hpp"

namespace compdet {

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::Symbolic:
      return "SYMBOLIC";
    case Mode::Numeric:
      return "NUMERIC";
    case Mode::Kernel:
      return "KERNEL";
    case Mode::Specialization:
      return "SPECIALIZATION";
  }
  return "?";
}

std::string_view to_string(Status status) { return status == Status::Pass ? "PASS" : "FAIL"; }

Mode parse_mode(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "symbolic") return Mode::Symbolic;
  if (lower == "numeric") return Mode::Numeric;
  if (lower == "kernel") return Mode::Kernel;
  if (lower == "specialization") return Mode::Specialization;
  throw ParameterError("unknown mode '" + std::string(text) + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
 public:
  Stopwatch() : start_(Clock::now()) {}
  std::chrono::duration<double, std::milli> elapsed() const { return Clock::now() - start_; }

 private:
  Clock::time_point start_;
};

VerificationReport make_report(std::string subject, std::int64_t n, std::int64_t k, Mode mode) {
  VerificationReport r;
  r.subject = std::move(subject);
  r.n = n;
  r.k = k;
  r.mode = mode;
  return r;
}

void fail(VerificationReport& r, std::string detail) {
  r.status = Status::Fail;
  if (!r.detail.empty()) r.detail += "; ";
  r.detail += std::move(detail);
}

/// p/q with p in [-9, 9] and q in [1, 9]. Modulo reduction of 64-bit draws
/// keeps the stream identical across standard libraries.
Rational draw_rational(std::mt19937_64& rng, bool nonzero) {
  while (true) {
    const auto p = static_cast<std::int64_t>(rng() % 19) - 9;
    const auto q = static_cast<std::int64_t>(rng() % 9) + 1;
    if (nonzero && p == 0) continue;
    Rational r(p, q);
    r.canonicalize();
    return r;
  }
}

}  // namespace

// ---------------------------------------------------------------- symbolic

Polynomial theorem_determinant(TheoremId id, std::int64_t n, std::int64_t k) {
  check_theorem_parameters(id, n, k);
  const TheoremConfig cfg = theorem_config(id);
  const SymbolicMatrix m = build_matrix(cfg.family, cfg.domain, n, k);
  const SquareMatrix<Polynomial> entries = substitute_entries(m.entries, cfg.substitution, k);
  // Columns in reverse composition order: the first pivots then involve the
  // fewest variables, which keeps intermediate minors small.
  const std::size_t order = entries.order();
  SquareMatrix<Polynomial> reversed(order, Polynomial(entries(0, 0).num_variables()));
  for (std::size_t r = 0; r < order; ++r) {
    for (std::size_t c = 0; c < order; ++c) reversed(r, c) = entries(r, order - 1 - c);
  }
  Polynomial det = det_bareiss(std::move(reversed));
  if ((order * (order - 1) / 2) % 2 != 0) det = -det;
  return det;
}

VerificationReport verify_symbolic_against(TheoremId id, std::int64_t n, std::int64_t k, const FactoredForm& expected,
                                           const SymbolicOptions& options) {
  check_theorem_parameters(id, n, k);
  const std::uint64_t order = count(n, k, theorem_config(id).domain);
  if (order > options.max_order) {
    throw SizeError(std::string(to_string(id)) + " at n = " + std::to_string(n) + ", k = " + std::to_string(k) +
                    " has order " + std::to_string(order) + " above the symbolic cap " +
                    std::to_string(options.max_order) + "; use numeric mode");
  }
  Stopwatch clock;
  VerificationReport r = make_report(std::string(to_string(id)), n, k, Mode::Symbolic);
  const Polynomial lhs = theorem_determinant(id, n, k);
  const Polynomial difference = lhs - expected.expand();
  if (!difference.is_zero()) {
    r.leading_term = difference.leading_term_string();
    fail(r, "determinant minus closed form is nonzero");
  }
  r.detail = r.detail.empty() ? "order " + std::to_string(order) + ", degree " + std::to_string(lhs.total_degree())
                              : r.detail;
  r.elapsed = clock.elapsed();
  return r;
}

VerificationReport verify_symbolic(TheoremId id, std::int64_t n, std::int64_t k, const SymbolicOptions& options) {
  check_theorem_parameters(id, n, k);
  return verify_symbolic_against(id, n, k, rhs(id, n, k), options);
}

// ---------------------------------------------------------------- numeric

VerificationReport verify_numeric_against(TheoremId id, std::int64_t n, std::int64_t k, std::uint64_t trials,
                                          std::uint64_t seed, const FactoredForm& expected) {
  check_theorem_parameters(id, n, k);
  if (trials < 1) throw ParameterError("numeric verification needs at least one trial");
  Stopwatch clock;
  const TheoremConfig cfg = theorem_config(id);
  VerificationReport r = make_report(std::string(to_string(id)), n, k, Mode::Numeric);
  r.trials = trials;
  r.seed = seed;
  const std::size_t nv = 2 * static_cast<std::size_t>(k);
  std::mt19937_64 rng(seed);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    Assignment drawn(nv);
    for (std::size_t v = 0; v < nv; ++v) drawn.set(v, draw_rational(rng, v >= nv / 2));
    const Assignment point = apply_substitution(cfg.substitution, drawn);
    const Rational lhs = det_numeric(cfg.family, cfg.domain, n, k, point);
    const Rational value = expected.evaluate(point);
    r.lhs = to_string(lhs);
    r.rhs = to_string(value);
    if (lhs != value) {
      for (std::size_t v = 0; v < nv; ++v) r.witness.emplace_back(variable_name(v, nv), to_string(*point.get(v)));
      fail(r, "trial " + std::to_string(trial + 1) + " of " + std::to_string(trials) + " differs");
      break;
    }
  }
  r.elapsed = clock.elapsed();
  return r;
}

VerificationReport verify_numeric(TheoremId id, std::int64_t n, std::int64_t k, std::uint64_t trials,
                                  std::uint64_t seed) {
  check_theorem_parameters(id, n, k);
  return verify_numeric_against(id, n, k, trials, seed, rhs(id, n, k));
}

// ---------------------------------------------------------------- kernel

VerificationReport verify_kernel_against(std::int64_t n, std::int64_t k, std::int64_t i, const Composition& eps,
                                         const KernelExpectation& expected) {
  Stopwatch clock;
  const KernelVector v = kernel_vector(n, k, i, eps);
  VerificationReport r = make_report("KERNEL", n, k, Mode::Kernel);
  r.detail = "i = " + std::to_string(i) + ", eps = " + eps.to_string();
  const SymbolicMatrix m = build_matrix(EntryFamily::Binomial, Domain::All, n, k);
  const std::vector<Polynomial> dense = v.dense();
  const Polynomial t_factor = linear_factor_T(n, k, eps);

  // T at x = 0, l = 1 must be the nonzero integer n - |eps| = i.
  Assignment unit(2 * static_cast<std::size_t>(k));
  for (std::int64_t t = 0; t < k; ++t) {
    unit.set(static_cast<std::size_t>(t), Rational(0));
    unit.set(static_cast<std::size_t>(k + t), Rational(1));
  }
  if (t_factor.evaluate(unit) != Rational(i)) fail(r, "T does not specialize to n - |eps|");

  for (std::size_t row = 0; row < m.order() && r.passed(); ++row) {
    Polynomial product(2 * static_cast<std::size_t>(k));
    for (std::size_t col = 0; col < m.order(); ++col) {
      if (!dense[col].is_zero()) product += m.entries(row, col) * dense[col];
    }
    const Polynomial want = expected(m.index[row]);
    const Polynomial difference = product - want;
    if (!difference.is_zero()) {
      r.leading_term = difference.leading_term_string();
      fail(r, "row " + m.index[row].to_string() + " of M v differs from the expected action");
    } else if (!want.is_zero() && !try_exact_div(want, t_factor)) {
      fail(r, "row " + m.index[row].to_string() + " is not divisible by T");
    }
  }
  r.elapsed = clock.elapsed();
  return r;
}

VerificationReport verify_kernel(std::int64_t n, std::int64_t k, std::int64_t i, const Composition& eps) {
  return verify_kernel_against(n, k, i, eps, [&](const Composition& alpha) {
    return kernel_action_expected(n, k, i, eps, alpha);
  });
}

std::vector<VerificationReport> verify_kernel_all(std::int64_t n, std::int64_t k) {
  std::vector<VerificationReport> out;
  for (std::int64_t i = 1; i <= n; ++i) {
    for (const auto& eps : enumerate(n - i, k, Domain::All)) out.push_back(verify_kernel(n, k, i, eps));
  }
  return out;
}

// ---------------------------------------------------------------- lemmas

VerificationReport check_chu_vandermonde(std::int64_t n, std::int64_t k) {
  Stopwatch clock;
  VerificationReport r = make_report("CHU_VANDERMONDE", n, k, Mode::Symbolic);
  const Polynomial difference = chu_vandermonde_lhs(n, k) - chu_vandermonde_rhs(n, k);
  if (!difference.is_zero()) {
    r.leading_term = difference.leading_term_string();
    fail(r, "sum over C(n,k) of C(x, delta) differs from C(|x|, n)");
  }
  r.elapsed = clock.elapsed();
  return r;
}

VerificationReport check_factorial_product(std::int64_t n, std::int64_t k) {
  Stopwatch clock;
  VerificationReport r = make_report("FACTORIAL_PRODUCT", n, k, Mode::Symbolic);
  const Integer direct = factorial_product(n, k);
  const Integer closed = factorial_product_closed(n, k);
  r.lhs = to_string(direct);
  r.rhs = to_string(closed);
  if (direct != closed) fail(r, "product of beta! differs from the closed form");
  r.elapsed = clock.elapsed();
  return r;
}

VerificationReport check_eps_count(std::int64_t n_max, std::int64_t k_max) {
  Stopwatch clock;
  VerificationReport r = make_report("EPS_COUNT", n_max, k_max, Mode::Symbolic);
  for (std::int64_t k = 1; k <= k_max; ++k) {
    for (std::int64_t n = 0; n <= n_max; ++n) {
      std::uint64_t enumerated = 0;
      for (std::int64_t m = 0; m < n; ++m) {
        for_each_composition(m, k, Domain::All, [&](std::span<const std::uint32_t>) { ++enumerated; });
      }
      if (Integer(enumerated) != counting_binomial(n + k - 1, k)) {
        fail(r, "n = " + std::to_string(n) + ", k = " + std::to_string(k) + ": " + std::to_string(enumerated) +
                    " != C(n+k-1, k)");
      }
    }
  }
  r.elapsed = clock.elapsed();
  return r;
}

VerificationReport check_degree_identity(std::int64_t n_max, std::int64_t k_max, std::uint64_t form_limit) {
  Stopwatch clock;
  VerificationReport r = make_report("DEGREE", n_max, k_max, Mode::Symbolic);
  std::uint64_t forms_checked = 0;
  for (std::int64_t k = 1; k <= k_max; ++k) {
    for (std::int64_t n = 1; n <= n_max; ++n) {
      const Integer rhs_degree = k * counting_binomial(n + k - 1, k);
      const Integer bound = n * Integer(static_cast<unsigned long>(count(n, k, Domain::All)));
      const std::string where = "n = " + std::to_string(n) + ", k = " + std::to_string(k);
      if (rhs_degree != bound) fail(r, where + ": k C(n+k-1,k) != n |C(n,k)|");
      if (counting_binomial(n + k - 1, k) <= form_limit && 2 * k <= static_cast<std::int64_t>(kMaxVariables)) {
        ++forms_checked;
        if (Integer(rhs(TheoremId::THM4, n, k).total_degree()) != rhs_degree) {
          fail(r, where + ": degree of the THM4 closed form");
        }
      }
    }
  }
  r.detail += (r.detail.empty() ? "" : "; ") + std::to_string(forms_checked) + " closed forms degree-checked";
  r.elapsed = clock.elapsed();
  return r;
}

VerificationReport check_exponent_identity(std::int64_t n_max, std::int64_t k_max) {
  Stopwatch clock;
  VerificationReport r = make_report("EXPONENT", n_max, k_max, Mode::Symbolic);
  for (std::int64_t k = 1; k <= k_max; ++k) {
    for (std::int64_t n = 1; n <= n_max; ++n) {
      const std::string where = "n = " + std::to_string(n) + ", k = " + std::to_string(k);
      for (std::int64_t i = 1; i <= n - 1; ++i) {
        const Integer a = (k - 1) * counting_binomial(n + k - i - 1, k - 1);
        const Integer b = (n - i + 1) * counting_binomial(n + k - i - 1, k - 2);
        if (a != b) fail(r, where + ", i = " + std::to_string(i));
      }
      if ((k - 1) * counting_binomial(k - 1, k - 1) != k - 1) fail(r, where + ": i = n term");
      // THM3 at x = 0 against THM1.
      Assignment zero(2 * static_cast<std::size_t>(k));
      for (std::size_t v = 0; v < zero.num_variables(); ++v) zero.set(v, Rational(0));
      if (rhs(TheoremId::THM3, n, k).evaluate(zero) != rhs(TheoremId::THM1, n, k).scalar()) {
        fail(r, where + ": THM3 at x = 0 differs from THM1");
      }
    }
  }
  r.elapsed = clock.elapsed();
  return r;
}

VerificationReport check_parity(std::int64_t n_max, std::int64_t k_max) {
  Stopwatch clock;
  VerificationReport r = make_report("PARITY", n_max, k_max, Mode::Symbolic);
  for (std::int64_t k = 1; k <= k_max; ++k) {
    for (std::int64_t n = 1; n <= n_max; ++n) {
      const Integer total =
          n * Integer(static_cast<unsigned long>(count(n, k, Domain::All))) + k * counting_binomial(n + k - 1, k);
      if (mpz_odd_p(total.get_mpz_t())) {
        fail(r, "n = " + std::to_string(n) + ", k = " + std::to_string(k) + " gives an odd sign exponent");
      }
    }
  }
  r.elapsed = clock.elapsed();
  return r;
}

std::vector<VerificationReport> verify_lemmas(std::int64_t n_max, std::int64_t k_max) {
  if (n_max < 0 || k_max < 1) throw ParameterError("lemma bounds need n_max >= 0 and k_max >= 1");
  std::vector<VerificationReport> out;
  for (std::int64_t k = 1; k <= k_max; ++k) {
    for (std::int64_t n = 0; n <= n_max; ++n) out.push_back(check_chu_vandermonde(n, k));
  }
  for (std::int64_t k = 1; k <= k_max; ++k) {
    for (std::int64_t n = 0; n <= n_max; ++n) out.push_back(check_factorial_product(n, k));
  }
  out.push_back(check_eps_count(n_max, k_max));
  out.push_back(check_degree_identity(n_max, k_max));
  out.push_back(check_exponent_identity(n_max, k_max));
  out.push_back(check_parity(n_max, k_max));
  return out;
}

// ---------------------------------------------------------------- specializations

VerificationReport check_specialization(std::string name, std::int64_t n, std::int64_t k, const FactoredForm& general,
                                        std::span<const Polynomial> images, const FactoredForm& special) {
  Stopwatch clock;
  VerificationReport r = make_report(std::move(name), n, k, Mode::Specialization);
  const Polynomial difference = general.substitute(images).expand() - special.expand();
  if (!difference.is_zero()) {
    r.leading_term = difference.leading_term_string();
    fail(r, "specialized closed form differs");
  }
  r.elapsed = clock.elapsed();
  return r;
}

std::vector<Polynomial> reflection_images(std::int64_t k) {
  std::vector<Polynomial> images;
  const std::size_t nv = 2 * static_cast<std::size_t>(k);
  for (std::int64_t t = 1; t <= k; ++t) images.push_back(-x_var(k, t) - Polynomial::constant(nv, 1));
  for (std::int64_t t = 1; t <= k; ++t) images.push_back(-lambda_var(k, t));
  return images;
}

std::vector<VerificationReport> verify_specializations(std::int64_t n, std::int64_t k) {
  check_parameters(n, k, Domain::All);
  if (n < 1) throw ParameterError("specializations need n >= 1");
  using S = Substitution;
  std::vector<VerificationReport> out;
  const auto chain = [&](TheoremId from, S s, TheoremId to) {
    const std::string name = std::string(to_string(from)) + "->" + std::string(to_string(to));
    out.push_back(check_specialization(name, n, k, rhs(from, n, k), substitution_images(s, k), rhs(to, n, k)));
  };
  chain(TheoremId::THM4, S::ScalarLambda, TheoremId::COR2);
  chain(TheoremId::THM4B, S::ScalarLambda, TheoremId::COR2B);
  chain(TheoremId::COR2B, S::UnitLambdaSingleX, TheoremId::CONJ2);
  chain(TheoremId::COR5A, S::ScalarLambda, TheoremId::COR1A);
  chain(TheoremId::COR1A, S::UnitLambda, TheoremId::THM3);
  chain(TheoremId::THM3, S::UnitLambdaSingleX, TheoremId::CONJ1);
  chain(TheoremId::CONJ1, S::ZeroXUnitLambda, TheoremId::THM1);

  // Reflection x -> -x - 1, l -> -l: every entry picks up (-1)^n, so the
  // general form maps onto the beta-shifted one times (-1)^(n * order).
  const auto reflect = [&](TheoremId from, TheoremId to, Domain domain) {
    FactoredForm target = rhs(to, n, k);
    if ((n * static_cast<std::int64_t>(count(n, k, domain))) % 2 != 0) target.multiply_scalar(Rational(-1));
    const std::string name = std::string(to_string(from)) + "->" + std::string(to_string(to));
    out.push_back(check_specialization(name, n, k, rhs(from, n, k), reflection_images(k), target));
  };
  reflect(TheoremId::THM4, TheoremId::THM4B, Domain::All);
  if (n >= k) reflect(TheoremId::DP, TheoremId::DP2, Domain::Positive);

  // Top homogeneous component of THM4 times prod beta! gives COR5A.
  {
    Stopwatch clock;
    VerificationReport r = make_report("THM4->COR5A", n, k, Mode::Specialization);
    const auto degree = static_cast<std::uint32_t>(to_u64(k * counting_binomial(n + k - 1, k)));
    const Polynomial top = rhs(TheoremId::THM4, n, k).expand().homogeneous_component(degree);
    const Polynomial difference = top * Rational(factorial_product(n, k)) - rhs(TheoremId::COR5A, n, k).expand();
    if (!difference.is_zero()) {
      r.leading_term = difference.leading_term_string();
      fail(r, "top homogeneous component differs");
    }
    r.elapsed = clock.elapsed();
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------- suite

std::vector<VerificationReport> run_suite(const SuiteOptions& options) {
  using Item = std::function<std::vector<VerificationReport>()>;
  std::vector<Item> items;
  const auto single = [](auto fn) -> Item { return [fn] { return std::vector<VerificationReport>{fn()}; }; };

  for (std::int64_t n = 1; n <= options.n_max; ++n) {
    for (std::int64_t k = 1; k <= options.k_max; ++k) {
      for (TheoremId id : kAllTheorems) {
        const Domain domain = theorem_config(id).domain;
        if (domain == Domain::Positive && n < k) continue;
        if (count(n, k, domain) <= options.max_order) {
          const SymbolicOptions sym{options.max_order};
          items.push_back(single([=] { return verify_symbolic(id, n, k, sym); }));
        }
        items.push_back(single([=, &options] { return verify_numeric(id, n, k, options.trials, options.seed); }));
      }
      items.push_back([=] { return verify_kernel_all(n, k); });
      items.push_back([=] { return verify_specializations(n, k); });
    }
  }
  items.push_back([&options] { return verify_lemmas(options.n_max, options.k_max); });

  std::vector<std::vector<VerificationReport>> results(items.size());
  unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(items.size()));
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) results[i] = items[i]();
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::vector<VerificationReport> out;
  for (auto& batch : results) {
    for (auto& r : batch) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace compdet

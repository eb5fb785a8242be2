#pragma once

// Identity checks that compare determinants against their closed forms,
// exhibit kernel vectors, and confirm the supporting lemmas. Every check
// is exact: PASS means an exact polynomial or rational equality.

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "compdet/closed_forms.hpp"

namespace compdet {

enum class Mode { Symbolic, Numeric, Kernel, Specialization };
enum class Status { Pass, Fail };

std::string_view to_string(Mode mode);
std::string_view to_string(Status status);
Mode parse_mode(std::string_view text);

struct VerificationReport {
  std::string subject;  // theorem id, lemma tag, or "A->B" for specializations
  std::int64_t n = 0;
  std::int64_t k = 0;
  Mode mode = Mode::Symbolic;
  Status status = Status::Pass;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::chrono::duration<double, std::milli> elapsed{};
  /// Numeric FAIL: the substitution that separates the two sides.
  std::vector<std::pair<std::string, std::string>> witness;
  /// Symbolic FAIL: leading term of (lhs - rhs).
  std::string leading_term;
  /// Values of both sides (numeric mode: last or failing trial).
  std::string lhs;
  std::string rhs;
  std::string detail;

  bool passed() const { return status == Status::Pass; }
};

struct SymbolicOptions {
  /// Largest matrix order attempted symbolically.
  std::size_t max_order = 15;
};

/// Polynomial determinant of the id's matrix after its substitution.
Polynomial theorem_determinant(TheoremId id, std::int64_t n, std::int64_t k);

/// Throws SizeError (pointing to numeric mode) when the order exceeds the cap.
VerificationReport verify_symbolic(TheoremId id, std::int64_t n, std::int64_t k, const SymbolicOptions& options = {});
VerificationReport verify_symbolic_against(TheoremId id, std::int64_t n, std::int64_t k, const FactoredForm& expected,
                                           const SymbolicOptions& options = {});

/// Draws x_t, l_t as p/q with p in [-9, 9], q in [1, 9] (l_t != 0) from a
/// mt19937_64 seeded with `seed`, pushes the draw through the id's
/// substitution, and compares det_numeric with the closed form exactly.
VerificationReport verify_numeric(TheoremId id, std::int64_t n, std::int64_t k, std::uint64_t trials,
                                  std::uint64_t seed);
VerificationReport verify_numeric_against(TheoremId id, std::int64_t n, std::int64_t k, std::uint64_t trials,
                                          std::uint64_t seed, const FactoredForm& expected);

using KernelExpectation = std::function<Polynomial(const Composition& alpha)>;

/// Checks M(n,k) v_eps row by row against kernel_action_expected and that
/// every expected entry is divisible by T(n,k,eps).
VerificationReport verify_kernel(std::int64_t n, std::int64_t k, std::int64_t i, const Composition& eps);
VerificationReport verify_kernel_against(std::int64_t n, std::int64_t k, std::int64_t i, const Composition& eps,
                                         const KernelExpectation& expected);

/// Every (i, eps) with 1 <= i <= n and eps in C(n-i, k).
std::vector<VerificationReport> verify_kernel_all(std::int64_t n, std::int64_t k);

// Lemma-level checks.
VerificationReport check_chu_vandermonde(std::int64_t n, std::int64_t k);
VerificationReport check_factorial_product(std::int64_t n, std::int64_t k);
/// #{eps in N^k : |eps| < n} by enumeration equals C(n+k-1, k), for all n, k <= bounds.
VerificationReport check_eps_count(std::int64_t n_max, std::int64_t k_max);
/// k C(n+k-1, k) = n |C(n,k)|, and equals the degree of the THM4 closed form
/// (summed over factors) wherever that form has at most `form_limit` factors.
VerificationReport check_degree_identity(std::int64_t n_max, std::int64_t k_max, std::uint64_t form_limit = 100);
/// (k-1) C(n+k-i-1, k-1) = (n-i+1) C(n+k-i-1, k-2) for 1 <= i < n, the i = n
/// factor is n^(k-1), and THM3's closed form at x = 0 equals THM1's.
VerificationReport check_exponent_identity(std::int64_t n_max, std::int64_t k_max);
/// n |C(n,k)| + k C(n+k-1, k) is even.
VerificationReport check_parity(std::int64_t n_max, std::int64_t k_max);

/// Chu-Vandermonde and factorial product for all n <= n_max, 1 <= k <= k_max,
/// then the four counting identities over the same bounds.
std::vector<VerificationReport> verify_lemmas(std::int64_t n_max, std::int64_t k_max);

/// Named specialization: general closed form pushed through `images` must
/// expand to the same polynomial as `special`.
VerificationReport check_specialization(std::string name, std::int64_t n, std::int64_t k, const FactoredForm& general,
                                        std::span<const Polynomial> images, const FactoredForm& special);

/// x_t -> -x_t - 1, l_t -> -l_t: the transform relating the C(x + l alpha, beta)
/// and C(x + l alpha + beta, beta) families.
std::vector<Polynomial> reflection_images(std::int64_t k);

/// The six RHS specialization chains, the two reflection equivalences
/// (THM4 -> THM4B, DP -> DP2), CONJ1 at x = 0 -> THM1, and the top
/// homogeneous component of THM4 times prod beta! -> COR5A.
std::vector<VerificationReport> verify_specializations(std::int64_t n, std::int64_t k);

struct SuiteOptions {
  std::int64_t n_max = 3;
  std::int64_t k_max = 3;
  std::uint64_t trials = 20;
  std::uint64_t seed = 0;
  std::size_t max_order = 15;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Every theorem id symbolically (within the order cap) and numerically at
/// each valid 1 <= n <= n_max, 1 <= k <= k_max; all kernel vectors, the
/// lemma checks and the specializations on the same grid. Items may run
/// concurrently; the result order is fixed by the item order.
std::vector<VerificationReport> run_suite(const SuiteOptions& options);

}  // namespace compdet

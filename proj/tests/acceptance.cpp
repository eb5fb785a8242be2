// Acceptance suite: one PASS/FAIL line per criterion.
//
//   compdet_acceptance               all eight criteria
//   compdet_acceptance --only 3      a single criterion
//
// Exit status is the number of failing criteria.

#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "compdet/closed_forms.hpp"
#include "compdet/combinatorics.hpp"
#include "compdet/determinant.hpp"
#include "compdet/errors.hpp"
#include "compdet/verifier.hpp"

namespace {

using namespace compdet;
using Clock = std::chrono::steady_clock;

constexpr double kSymbolicBudgetSeconds = 300.0;
constexpr double kNumericBudgetSeconds = 120.0;
constexpr std::size_t kSymbolicMaxOrder = 10;
constexpr std::int64_t kSweepBound = 12;
constexpr std::uint64_t kTrials = 20;
constexpr std::uint64_t kSeed = 0;
constexpr int kRandomMatrices = 200;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool positive(TheoremId id) { return theorem_config(id).domain == Domain::Positive; }

// ---------------------------------------------------------------- criterion 1

struct SymbolicItem {
  TheoremId id;
  std::int64_t n;
  std::int64_t k;
};

// The explicitly listed (n,k) come first, then the remaining valid (n,k)
// in the sweep box by increasing order. `listed` receives the prefix length.
std::vector<SymbolicItem> symbolic_items(std::size_t& listed) {
  using NK = std::pair<std::int64_t, std::int64_t>;
  const std::vector<NK> listed_all{{1, 1}, {2, 1}, {1, 3}, {2, 2}, {3, 2}, {2, 3}, {3, 3}};
  const std::vector<NK> listed_positive{{2, 2}, {3, 2}, {4, 2}, {3, 3}, {4, 3}};

  std::vector<SymbolicItem> items;
  std::set<std::tuple<TheoremId, std::int64_t, std::int64_t>> seen;
  auto add = [&](TheoremId id, std::int64_t n, std::int64_t k) {
    if (seen.insert({id, n, k}).second) items.push_back({id, n, k});
  };
  for (TheoremId id : kAllTheorems) {
    for (const auto& [n, k] : positive(id) ? listed_positive : listed_all) add(id, n, k);
  }
  listed = items.size();

  std::vector<SymbolicItem> rest;
  for (TheoremId id : kAllTheorems) {
    const Domain domain = theorem_config(id).domain;
    for (std::int64_t n = 1; n <= kSweepBound; ++n) {
      for (std::int64_t k = 1; k <= kSweepBound; ++k) {
        if (domain == Domain::Positive && n < k) continue;
        if (count(n, k, domain) > kSymbolicMaxOrder) continue;
        rest.push_back({id, n, k});
      }
    }
  }
  std::stable_sort(rest.begin(), rest.end(), [](const SymbolicItem& a, const SymbolicItem& b) {
    return count(a.n, a.k, theorem_config(a.id).domain) < count(b.n, b.k, theorem_config(b.id).domain);
  });
  for (const auto& item : rest) add(item.id, item.n, item.k);
  return items;
}

std::string describe(const SymbolicItem& item) {
  return std::string(to_string(item.id)) + " n=" + std::to_string(item.n) + " k=" + std::to_string(item.k);
}

// Runs every item in a child process that reports one line per finished
// item; the child is killed once the wall-clock budget is spent.
Outcome criterion_symbolic() {
  std::size_t listed = 0;
  const auto items = symbolic_items(listed);
  int fds[2];
  if (pipe(fds) != 0) return {false, "pipe() failed"};
  std::fflush(nullptr);
  const pid_t child = fork();
  if (child < 0) return {false, "fork() failed"};
  if (child == 0) {
    close(fds[0]);
    FILE* out = fdopen(fds[1], "w");
    for (std::size_t i = 0; i < items.size(); ++i) {
      const auto& item = items[i];
      int ok = 0;
      try {
        ok = verify_symbolic(item.id, item.n, item.k, {.max_order = kSymbolicMaxOrder}).passed() ? 1 : 0;
      } catch (const std::exception&) {
        ok = 0;
      }
      std::fprintf(out, "%zu %d\n", i, ok);
      std::fflush(out);
    }
    std::fclose(out);
    _exit(0);
  }
  close(fds[1]);

  const auto start = Clock::now();
  std::size_t finished = 0;
  double listed_seconds = 0;
  std::vector<std::size_t> failed;
  std::string buffer;
  bool timed_out = false;
  while (true) {
    const double left = kSymbolicBudgetSeconds - seconds_since(start);
    if (left <= 0) {
      timed_out = true;
      break;
    }
    pollfd pfd{fds[0], POLLIN, 0};
    const int ready = poll(&pfd, 1, static_cast<int>(left * 1000) + 1);
    if (ready == 0) continue;
    char chunk[4096];
    const ssize_t got = read(fds[0], chunk, sizeof chunk);
    if (got <= 0) break;
    buffer.append(chunk, static_cast<std::size_t>(got));
    std::size_t eol;
    while ((eol = buffer.find('\n')) != std::string::npos) {
      std::istringstream line(buffer.substr(0, eol));
      buffer.erase(0, eol + 1);
      std::size_t index = 0;
      int ok = 0;
      line >> index >> ok;
      ++finished;
      if (finished == listed) listed_seconds = seconds_since(start);
      if (!ok) failed.push_back(index);
    }
  }
  if (timed_out) kill(child, SIGKILL);
  close(fds[0]);
  waitpid(child, nullptr, 0);

  Outcome o;
  std::ostringstream detail;
  detail << "listed " << std::min(finished, listed) << "/" << listed;
  if (finished >= listed) detail << " in " << static_cast<int>(listed_seconds + 0.5) << " s";
  detail << ", all " << finished << "/" << items.size() << " in " << static_cast<int>(seconds_since(start)) << " s";
  if (!failed.empty()) o.fail(detail.str() + "; mismatch at " + describe(items[failed.front()]));
  if (timed_out) {
    o.fail(detail.str() + "; budget of " + std::to_string(static_cast<int>(kSymbolicBudgetSeconds)) +
           " s exhausted at " + describe(items[finished]));
  } else if (finished < items.size()) {
    o.fail(detail.str() + "; worker stopped at " + describe(items[finished]));
  }
  if (o.pass) o.detail = detail.str();
  return o;
}

// ---------------------------------------------------------------- criteria 2-8

Outcome criterion_numeric() {
  Outcome o;
  const auto start = Clock::now();
  int checked = 0;
  for (TheoremId id : {TheoremId::THM4, TheoremId::THM4B, TheoremId::COR5A}) {
    for (auto [n, k] : {std::pair{4, 3}, std::pair{3, 4}, std::pair{5, 2}, std::pair{4, 4}}) {
      const auto r = verify_numeric(id, n, k, kTrials, kSeed);
      ++checked;
      if (!r.passed() || r.trials != kTrials) o.fail(describe({id, n, k}) + " numeric mismatch");
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed > kNumericBudgetSeconds) o.fail("took " + std::to_string(elapsed) + " s");
  if (o.pass) o.detail = std::to_string(checked) + " identities x " + std::to_string(kTrials) + " trials";
  return o;
}

Assignment zero_x_unit_lambda(std::int64_t k) {
  Assignment at(static_cast<std::size_t>(2 * k));
  for (std::int64_t t = 0; t < k; ++t) {
    at.set(static_cast<std::size_t>(t), Rational(0));
    at.set(static_cast<std::size_t>(k + t), Rational(1));
  }
  return at;
}

Outcome criterion_point_values() {
  Outcome o;
  const std::pair<std::int64_t, long> cases[] = {{2, 16}, {3, 8748}};
  for (auto [n, expected] : cases) {
    const auto m = build_numeric_matrix(EntryFamily::Power, Domain::All, n, 2, zero_x_unit_lambda(2));
    const Rational laplace = det_laplace(m);
    const Rational formula = rhs(TheoremId::THM1, n, 2).evaluate(zero_x_unit_lambda(2));
    if (laplace != expected) o.fail("Laplace det at n=" + std::to_string(n) + " is " + laplace.get_str());
    if (formula != expected) o.fail("closed form at n=" + std::to_string(n) + " is " + formula.get_str());
  }
  for (std::int64_t n = 1; n <= 5; ++n) {
    for (std::int64_t k = 1; k <= 5; ++k) {
      if (det_numeric(EntryFamily::Binomial, Domain::All, n, k, zero_x_unit_lambda(k)) != 1) {
        o.fail("BINOMIAL det at n=" + std::to_string(n) + " k=" + std::to_string(k) + " is not 1");
      }
    }
  }
  if (o.pass) o.detail = "16, 8748 and 25 unit determinants";
  return o;
}

Outcome criterion_kernel() {
  Outcome o;
  std::size_t checked = 0;
  for (auto [n, k] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
    for (const auto& r : verify_kernel_all(n, k)) {
      ++checked;
      if (!r.passed()) o.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + " " + r.detail);
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " kernel vectors";
  return o;
}

Outcome criterion_lemmas() {
  Outcome o;
  std::vector<VerificationReport> reports;
  for (std::int64_t n = 0; n <= 4; ++n) {
    for (std::int64_t k = 1; k <= 4; ++k) reports.push_back(check_chu_vandermonde(n, k));
  }
  for (std::int64_t n = 0; n <= 6; ++n) {
    for (std::int64_t k = 1; k <= 4; ++k) reports.push_back(check_factorial_product(n, k));
  }
  reports.push_back(check_eps_count(12, 12));
  reports.push_back(check_degree_identity(12, 12));
  reports.push_back(check_exponent_identity(12, 12));
  reports.push_back(check_parity(12, 12));
  for (const auto& r : reports) {
    if (!r.passed()) o.fail(r.subject + " n=" + std::to_string(r.n) + " k=" + std::to_string(r.k) + " " + r.detail);
  }
  if (o.pass) o.detail = std::to_string(reports.size()) + " checks";
  return o;
}

Outcome criterion_specializations() {
  const std::set<std::string> required{"THM4->COR2",  "THM4B->COR2B", "COR2B->CONJ2",
                                       "COR5A->COR1A", "COR1A->THM3",  "THM3->CONJ1"};
  Outcome o;
  std::size_t checked = 0;
  for (auto [n, k] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}}) {
    std::set<std::string> seen;
    for (const auto& r : verify_specializations(n, k)) {
      ++checked;
      if (!r.passed()) o.fail(r.subject + " at n=" + std::to_string(n) + " k=" + std::to_string(k));
      seen.insert(r.subject);
    }
    for (const auto& name : required) {
      if (!seen.count(name)) o.fail(name + " missing at n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " specializations";
  return o;
}

Outcome criterion_oracle() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  for (int trial = 0; trial < kRandomMatrices; ++trial) {
    const std::size_t order = 2 + static_cast<std::size_t>(trial % 5);
    SquareMatrix<Rational> m(order, Rational(0));
    for (std::size_t r = 0; r < order; ++r) {
      for (std::size_t c = 0; c < order; ++c) {
        m(r, c) = rng() % 4 == 0 ? Rational(0) : Rational(static_cast<long>(rng() % 21) - 10);
      }
    }
    if (det_bareiss(m) != det_laplace(m)) o.fail("random matrix " + std::to_string(trial));
  }
  struct Kind {
    EntryFamily family;
    Domain domain;
    Substitution substitution;
  };
  const Kind kinds[] = {
      {EntryFamily::Power, Domain::All, Substitution::ZeroXUnitLambda},
      {EntryFamily::Power, Domain::All, Substitution::UnitLambda},
      {EntryFamily::Binomial, Domain::All, Substitution::None},
      {EntryFamily::BinomialBeta, Domain::All, Substitution::None},
      {EntryFamily::Power, Domain::All, Substitution::None},
      {EntryFamily::Binomial, Domain::Positive, Substitution::None},
  };
  int symbolic = 0;
  for (const auto& kind : kinds) {
    for (auto [n, k] : {std::pair{1, 1}, std::pair{2, 2}, std::pair{1, 3}}) {
      if (kind.domain == Domain::Positive && n < k) continue;
      const auto m = substitute_entries(build_matrix(kind.family, kind.domain, n, k).entries, kind.substitution, k);
      ++symbolic;
      if (det_bareiss(m) != det_laplace(m)) {
        o.fail(std::string(to_string(kind.family)) + " n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(kRandomMatrices) + " random + " + std::to_string(symbolic) + " symbolic";
  return o;
}

FactoredForm bump_exponent(FactoredForm form) {
  form.mutable_factors().at(0).exponent += 1;
  return form;
}

Outcome criterion_negative_controls() {
  Outcome o;
  const auto symbolic = verify_symbolic_against(TheoremId::THM4, 2, 2, bump_exponent(rhs(TheoremId::THM4, 2, 2)));
  if (symbolic.passed() || symbolic.leading_term.empty()) o.fail("symbolic control not rejected with a witness");

  const auto numeric =
      verify_numeric_against(TheoremId::THM4B, 3, 2, kTrials, kSeed, bump_exponent(rhs(TheoremId::THM4B, 3, 2)));
  if (numeric.passed() || numeric.witness.empty()) o.fail("numeric control not rejected with a witness");

  const Composition eps{1, 0};
  const auto kernel = verify_kernel_against(2, 2, 1, eps, [&](const Composition& alpha) {
    return kernel_action_expected(2, 2, 1, eps, alpha) * linear_factor_T(2, 2, eps);
  });
  if (kernel.passed() || kernel.leading_term.empty()) o.fail("kernel control not rejected with a witness");

  const auto specialization =
      check_specialization("THM4->COR2", 2, 2, rhs(TheoremId::THM4, 2, 2),
                           substitution_images(Substitution::ScalarLambda, 2), bump_exponent(rhs(TheoremId::COR2, 2, 2)));
  if (specialization.passed() || specialization.leading_term.empty()) {
    o.fail("specialization control not rejected with a witness");
  }
  if (o.pass) o.detail = "4 perturbed variants rejected";
  return o;
}

struct Criterion {
  const char* name;
  Outcome (*run)();
};

constexpr Criterion kCriteria[] = {
    {"symbolic identities, order <= 10, 5 min", criterion_symbolic},
    {"numeric identities, 20 trials, 2 min", criterion_numeric},
    {"point values", criterion_point_values},
    {"kernel membership", criterion_kernel},
    {"lemma suite", criterion_lemmas},
    {"specialization chain", criterion_specializations},
    {"oracle equivalence", criterion_oracle},
    {"negative controls", criterion_negative_controls},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compdet acceptance suite"};
  int only = 0;
  app.add_option("--only", only, "Run a single criterion (1-8)")->check(CLI::Range(1, 8));
  CLI11_PARSE(app, argc, argv);

  int failures = 0;
  for (int c = 1; c <= 8; ++c) {
    if (only != 0 && c != only) continue;
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = kCriteria[c - 1].run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.1f s", seconds_since(start));
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " C" << c << " " << kCriteria[c - 1].name << " [" << elapsed
              << "] " << outcome.detail << std::endl;
    if (!outcome.pass) ++failures;
  }
  return failures;
}

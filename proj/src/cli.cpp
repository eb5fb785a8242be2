#include "compdet/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "compdet/determinant.hpp"
#include "compdet/errors.hpp"
#include "compdet/serialize.hpp"
#include "compdet/verifier.hpp"

namespace compdet {

namespace {

using nlohmann::ordered_json;

struct Config {
  std::string format = "text";
  std::string output;
  bool timing = false;

  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t i = 0;
  bool positive = false;
  std::string family;
  std::string domain = "all";
  std::vector<std::string> assign;
  std::string backend = "bareiss";
  std::string theorem;
  std::string mode = "symbolic";
  std::uint64_t trials = 20;
  std::uint64_t seed = 0;
  std::size_t cap = 15;
  std::string eps;
  std::int64_t n_max = 3;
  std::int64_t k_max = 3;
  unsigned threads = 0;
};

bool json_output(const Config& cfg) { return cfg.format == "json"; }

Assignment parse_assignments(const std::vector<std::string>& items, std::int64_t k) {
  Assignment a(static_cast<std::size_t>(2 * k));
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParameterError("expected var=value, got '" + item + "'");
    a.set(std::string_view(item).substr(0, eq), parse_rational(std::string_view(item).substr(eq + 1)));
  }
  return a;
}

Composition parse_composition(const std::string& text) {
  std::vector<std::uint32_t> parts;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    std::size_t used = 0;
    long long value = -1;
    try {
      value = std::stoll(piece, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != piece.size() || value < 0) throw ParameterError("bad composition part '" + piece + "'");
    parts.push_back(static_cast<std::uint32_t>(value));
  }
  return Composition(std::move(parts));
}

void print_report(std::ostream& out, const VerificationReport& r, const Config& cfg) {
  if (json_output(cfg)) {
    out << report_to_json(r, cfg.timing).dump() << '\n';
    return;
  }
  out << to_string(r.status) << ' ' << r.subject << " n=" << r.n << " k=" << r.k << ' ' << to_string(r.mode);
  if (r.mode == Mode::Numeric) out << " trials=" << r.trials << " seed=" << r.seed;
  if (cfg.timing) out << " elapsed_ms=" << std::fixed << std::setprecision(3) << r.elapsed.count();
  if (!r.lhs.empty()) out << " lhs=" << r.lhs;
  if (!r.rhs.empty()) out << " rhs=" << r.rhs;
  for (const auto& [name, value] : r.witness) out << ' ' << name << '=' << value;
  if (!r.leading_term.empty()) out << " leading_term=" << r.leading_term;
  if (!r.detail.empty()) out << " (" << r.detail << ')';
  out << '\n';
}

int print_reports(std::ostream& out, const std::vector<VerificationReport>& reports, const Config& cfg) {
  bool ok = true;
  for (const auto& r : reports) {
    print_report(out, r, cfg);
    ok = ok && r.passed();
  }
  return ok ? 0 : 1;
}

int cmd_list(std::ostream& out, const Config& cfg) {
  const Domain domain = cfg.positive ? Domain::Positive : Domain::All;
  const auto cs = enumerate(cfg.n, cfg.k, domain);
  if (json_output(cfg)) {
    ordered_json j;
    j["n"] = cfg.n;
    j["k"] = cfg.k;
    j["domain"] = std::string(to_string(domain));
    j["count"] = cs.size();
    j["compositions"] = compositions_to_json(cs);
    out << j.dump() << '\n';
    return 0;
  }
  for (std::size_t i = 0; i < cs.size(); ++i) out << (i ? " " : "") << cs[i].to_string();
  out << '\n';
  return 0;
}

SymbolicMatrix assigned_matrix(const Config& cfg) {
  SymbolicMatrix m = build_matrix(parse_family(cfg.family), parse_domain(cfg.domain), cfg.n, cfg.k);
  if (!cfg.assign.empty()) {
    const Assignment a = parse_assignments(cfg.assign, cfg.k);
    for (std::size_t r = 0; r < m.order(); ++r) {
      for (std::size_t c = 0; c < m.order(); ++c) m.entries(r, c) = m.entries(r, c).partial_evaluate(a);
    }
  }
  return m;
}

int cmd_matrix(std::ostream& out, const Config& cfg) {
  const SymbolicMatrix m = assigned_matrix(cfg);
  if (json_output(cfg)) {
    out << matrix_to_json(m).dump() << '\n';
    return 0;
  }
  out << to_string(m.family) << ' ' << to_string(m.domain) << " n=" << m.n << " k=" << m.k << " order=" << m.order()
      << '\n';
  out << "rows:";
  for (const auto& c : m.index) out << ' ' << c.to_string();
  out << '\n';
  for (std::size_t r = 0; r < m.order(); ++r) {
    out << m.index[r].to_string() << ':';
    for (std::size_t c = 0; c < m.order(); ++c) out << (c ? " | " : " ") << m.entries(r, c).to_string();
    out << '\n';
  }
  return 0;
}

int cmd_det(std::ostream& out, const Config& cfg) {
  if (cfg.backend != "bareiss" && cfg.backend != "laplace") throw ParameterError("unknown backend '" + cfg.backend + "'");
  const EntryFamily family = parse_family(cfg.family);
  const Domain domain = parse_domain(cfg.domain);
  check_parameters(cfg.n, cfg.k, domain);
  const Assignment a = parse_assignments(cfg.assign, cfg.k);
  std::string value;
  if (a.is_complete()) {
    const auto m = build_numeric_matrix(family, domain, cfg.n, cfg.k, a);
    value = to_string(cfg.backend == "laplace" ? det_laplace(m) : det_bareiss(m));
  } else {
    const SymbolicMatrix m = assigned_matrix(cfg);
    value = (cfg.backend == "laplace" ? det_laplace(m.entries) : det_bareiss(m.entries)).to_string();
  }
  if (json_output(cfg)) {
    ordered_json j;
    j["family"] = std::string(to_string(family));
    j["domain"] = std::string(to_string(domain));
    j["n"] = cfg.n;
    j["k"] = cfg.k;
    j["backend"] = cfg.backend;
    j["determinant"] = value;
    out << j.dump() << '\n';
  } else {
    out << value << '\n';
  }
  return 0;
}

int cmd_rhs(std::ostream& out, const Config& cfg) {
  const TheoremId id = parse_theorem(cfg.theorem);
  const FactoredForm f = rhs(id, cfg.n, cfg.k);
  if (json_output(cfg)) {
    ordered_json j;
    j["theorem"] = std::string(to_string(id));
    j["n"] = cfg.n;
    j["k"] = cfg.k;
    const ordered_json form = factored_to_json(f);
    for (const auto& [key, value] : form.items()) j[key] = value;
    out << j.dump() << '\n';
  } else {
    out << "scalar " << to_string(f.scalar()) << '\n';
    for (const auto& factor : f.factors()) out << '(' << factor.base.to_string() << ")^" << factor.exponent << '\n';
  }
  return 0;
}

int cmd_verify(std::ostream& out, const Config& cfg) {
  const TheoremId id = parse_theorem(cfg.theorem);
  const Mode mode = parse_mode(cfg.mode);
  VerificationReport r;
  if (mode == Mode::Symbolic) {
    r = verify_symbolic(id, cfg.n, cfg.k, SymbolicOptions{cfg.cap});
  } else if (mode == Mode::Numeric) {
    if (cfg.trials == 0) throw ParameterError("--trials must be at least 1");
    r = verify_numeric(id, cfg.n, cfg.k, cfg.trials, cfg.seed);
  } else {
    throw ParameterError("verify supports --mode symbolic or numeric");
  }
  return print_reports(out, {r}, cfg);
}

int cmd_kernel(std::ostream& out, const Config& cfg) {
  return print_reports(out, {verify_kernel(cfg.n, cfg.k, cfg.i, parse_composition(cfg.eps))}, cfg);
}

int cmd_suite(std::ostream& out, const Config& cfg) {
  SuiteOptions options;
  options.n_max = cfg.n_max;
  options.k_max = cfg.k_max;
  options.trials = cfg.trials;
  options.seed = cfg.seed;
  options.max_order = cfg.cap;
  options.threads = cfg.threads;
  return print_reports(out, run_suite(options), cfg);
}

int cmd_bench(std::ostream& out, const Config& cfg) {
  const EntryFamily family = parse_family(cfg.family);
  const Domain domain = parse_domain(cfg.domain);
  const SymbolicMatrix m = build_matrix(family, domain, cfg.n, cfg.k);
  using Ms = std::chrono::duration<double, std::milli>;
  const auto time = [](auto&& fn) {
    const auto start = std::chrono::steady_clock::now();
    auto value = fn();
    return std::pair{value, Ms(std::chrono::steady_clock::now() - start).count()};
  };
  const auto [bareiss, bareiss_ms] = time([&] { return det_bareiss(m.entries); });
  std::optional<double> laplace_ms;
  bool agree = true;
  if (m.order() <= kLaplaceMaxOrder) {
    const auto [laplace, ms] = time([&] { return det_laplace(m.entries); });
    laplace_ms = ms;
    agree = laplace == bareiss;
  }
  if (json_output(cfg)) {
    ordered_json j;
    j["family"] = std::string(to_string(family));
    j["domain"] = std::string(to_string(domain));
    j["n"] = cfg.n;
    j["k"] = cfg.k;
    j["order"] = m.order();
    j["terms"] = bareiss.num_terms();
    j["bareiss_ms"] = bareiss_ms;
    j["laplace_ms"] = laplace_ms ? ordered_json(*laplace_ms) : ordered_json(nullptr);
    j["agree"] = agree;
    out << j.dump() << '\n';
  } else {
    out << std::left << std::setw(10) << "backend" << std::setw(8) << "order" << std::setw(10) << "terms"
        << "ms\n";
    out << std::fixed << std::setprecision(3);
    out << std::setw(10) << "bareiss" << std::setw(8) << m.order() << std::setw(10) << bareiss.num_terms()
        << bareiss_ms << '\n';
    out << std::setw(10) << "laplace" << std::setw(8) << m.order() << std::setw(10) << bareiss.num_terms();
    if (laplace_ms) {
      out << *laplace_ms << '\n';
    } else {
      out << "- (order above " << kLaplaceMaxOrder << ")\n";
    }
    if (!agree) out << "MISMATCH between backends\n";
  }
  return agree ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Composition-indexed determinants: enumeration, closed forms and identity checks", "compdet"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", cfg.output, "Write results to this file instead of stdout");
  app.add_flag("--timing", cfg.timing, "Include elapsed times in reports");

  const auto add_nk = [&](CLI::App* sub) {
    sub->add_option("n", cfg.n, "Composition sum")->required();
    sub->add_option("k", cfg.k, "Number of parts")->required();
  };
  const auto add_matrix_flags = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "binomial | binomial_beta | power")->required();
    sub->add_option("--domain", cfg.domain, "all | positive");
    add_nk(sub);
    sub->add_option("--assign", cfg.assign, "Variable values such as x1=1/2 l2=3");
  };

  auto* list = app.add_subcommand("list", "Enumerate compositions of n into k parts");
  add_nk(list);
  list->add_flag("--positive", cfg.positive, "Only compositions with positive parts");

  auto* matrix = app.add_subcommand("matrix", "Dump a matrix");
  add_matrix_flags(matrix);

  auto* det = app.add_subcommand("det", "Determinant of a matrix");
  add_matrix_flags(det);
  det->add_option("--backend", cfg.backend, "bareiss | laplace");

  auto* rhs_cmd = app.add_subcommand("rhs", "Closed form of a theorem id, in factored shape");
  rhs_cmd->add_option("--id", cfg.theorem, "Theorem id")->required();
  add_nk(rhs_cmd);

  auto* verify = app.add_subcommand("verify", "Compare a determinant with its closed form");
  verify->add_option("--id", cfg.theorem, "Theorem id")->required();
  add_nk(verify);
  verify->add_option("--mode", cfg.mode, "symbolic | numeric");
  verify->add_option("--trials", cfg.trials, "Numeric trials");
  verify->add_option("--seed", cfg.seed, "Numeric seed");
  verify->add_option("--cap", cfg.cap, "Largest order attempted symbolically");

  auto* kernel = app.add_subcommand("kernel", "Check one kernel vector");
  add_nk(kernel);
  kernel->add_option("i", cfg.i, "Index 1 <= i <= n")->required();
  kernel->add_option("--eps", cfg.eps, "Composition e1,...,ek of n - i")->required();

  auto* suite = app.add_subcommand("suite", "Run the full verification sweep");
  suite->add_option("--nmax", cfg.n_max, "Largest n");
  suite->add_option("--kmax", cfg.k_max, "Largest k");
  suite->add_option("--trials", cfg.trials, "Numeric trials");
  suite->add_option("--seed", cfg.seed, "Numeric seed");
  suite->add_option("--cap", cfg.cap, "Largest order attempted symbolically");
  suite->add_option("--threads", cfg.threads, "Worker threads (0 = hardware)");

  auto* bench = app.add_subcommand("bench", "Time Bareiss against Laplace");
  bench->add_option("--family", cfg.family, "binomial | binomial_beta | power")->required();
  bench->add_option("--domain", cfg.domain, "all | positive");
  add_nk(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code != 0 && e.get_name() != "CallForHelp") err << app.help();
    return code;
  }

  if (const char* env = std::getenv("COMPDET_SEED"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      cfg.seed = std::stoull(env, &used);
      if (env[used] != '\0') throw std::invalid_argument(env);
    } catch (const std::exception&) {
      err << "error: COMPDET_SEED must be a non-negative integer\n";
      return 2;
    }
  }

  std::ofstream file;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      err << "error: cannot open " << cfg.output << '\n';
      return 2;
    }
  }
  std::ostream& sink = cfg.output.empty() ? out : file;

  try {
    if (list->parsed()) return cmd_list(sink, cfg);
    if (matrix->parsed()) return cmd_matrix(sink, cfg);
    if (det->parsed()) return cmd_det(sink, cfg);
    if (rhs_cmd->parsed()) return cmd_rhs(sink, cfg);
    if (verify->parsed()) return cmd_verify(sink, cfg);
    if (kernel->parsed()) return cmd_kernel(sink, cfg);
    if (suite->parsed()) return cmd_suite(sink, cfg);
    if (bench->parsed()) return cmd_bench(sink, cfg);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace compdet

#include "compdet/exactnum.hpp"

#include <cctype>

#include "compdet/errors.hpp"

namespace compdet {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw ParameterError("malformed rational '" + std::string(text) + "'");
  }
  Integer p(strip_plus(num), 10);
  Integer q(std::string(den), 10);
  if (q == 0) throw ParameterError("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

Integer factorial(std::uint64_t m) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), m);
  return r;
}

Integer counting_binomial(std::int64_t m, std::int64_t r) {
  if (m < 0 || r < 0 || r > m) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(r));
  return out;
}

Integer composition_count(std::int64_t m, std::int64_t p) {
  if (m < 0 || p < 0) return 0;
  if (p == 0) return m == 0 ? 1 : 0;
  return counting_binomial(m + p - 1, p - 1);
}

std::uint64_t to_u64(const Integer& value) {
  if (value < 0 || mpz_sizeinbase(value.get_mpz_t(), 2) > 64) {
    throw ParameterError("value " + value.get_str() + " does not fit an unsigned 64-bit exponent");
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value.get_mpz_t());
  return out;
}

Integer pow(const Integer& base, std::uint64_t exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
  return r;
}

Rational pow(const Rational& base, std::uint64_t exponent) {
  Rational r(pow(base.get_num(), exponent), pow(base.get_den(), exponent));
  // Powers of a reduced fraction stay reduced; sign lives in the numerator.
  return r;
}

}  // namespace compdet

#include "compdet/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <sstream>
#include <utility>

#include "compdet/errors.hpp"
#include "packed.hpp"

namespace compdet {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::unit(std::size_t var) {
  if (var >= kMaxVariables) throw ParameterError("variable index out of range");
  Monomial m;
  m.words_[var / 8] = std::uint64_t{1} << shift(var);
  m.degree_ = 1;
  return m;
}

Monomial Monomial::from_exponents(std::span<const std::uint32_t> exponents) {
  if (exponents.size() > kMaxVariables) throw ParameterError("too many variables");
  Monomial m;
  for (std::size_t v = 0; v < exponents.size(); ++v) {
    if (exponents[v] > kMaxExponent) throw DomainError("monomial exponent exceeds 255");
    m.words_[v / 8] |= std::uint64_t{exponents[v]} << shift(v);
    m.degree_ += exponents[v];
  }
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t v = 0; v < kMaxVariables; ++v) {
    if ((*this)[v] > other[v]) return false;
  }
  return true;
}

// Byte-wise addition without carries between lanes; a carry out of any lane
// means an exponent passed 255.
Monomial operator*(const Monomial& a, const Monomial& b) {
  constexpr std::uint64_t high = 0x8080808080808080ULL;
  Monomial out;
  std::uint64_t overflow = 0;
  for (std::size_t w = 0; w < Monomial::kWords; ++w) {
    const std::uint64_t x = a.words_[w];
    const std::uint64_t y = b.words_[w];
    const std::uint64_t sum = ((x & ~high) + (y & ~high)) ^ ((x ^ y) & high);
    overflow |= ((x & y) | ((x | y) & ~sum)) & high;
    out.words_[w] = sum;
  }
  if (overflow != 0) throw DomainError("monomial exponent exceeds 255");
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

// No lane borrows because b divides a.
Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (std::size_t w = 0; w < Monomial::kWords; ++w) out.words_[w] = a.words_[w] - b.words_[w];
  out.degree_ = a.degree_ - b.degree_;
  return out;
}

// ---------------------------------------------------------------- naming

std::string variable_name(std::size_t index, std::size_t num_variables) {
  const std::size_t k = num_variables / 2;
  if (index >= num_variables) throw ParameterError("variable index out of range");
  return index < k ? "x" + std::to_string(index + 1) : "l" + std::to_string(index - k + 1);
}

std::size_t parse_variable(std::string_view name, std::size_t num_variables) {
  const std::size_t k = num_variables / 2;
  if (name.size() < 2 || (name[0] != 'x' && name[0] != 'l')) {
    throw ParameterError("unknown variable '" + std::string(name) + "'");
  }
  std::size_t t = 0;
  const auto* first = name.data() + 1;
  const auto* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, t);
  if (ec != std::errc{} || ptr != last || t < 1 || t > k) {
    throw ParameterError("unknown variable '" + std::string(name) + "' for k = " + std::to_string(k));
  }
  return name[0] == 'x' ? t - 1 : k + t - 1;
}

// ---------------------------------------------------------------- Assignment

void Assignment::set(std::size_t var, Rational value) {
  if (var >= values_.size()) throw ParameterError("variable index out of range");
  value.canonicalize();
  values_[var] = std::move(value);
}

void Assignment::set(std::string_view name, Rational value) {
  set(parse_variable(name, values_.size()), std::move(value));
}

bool Assignment::is_complete() const {
  return std::all_of(values_.begin(), values_.end(), [](const auto& v) { return v.has_value(); });
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::size_t num_variables) : nvars_(num_variables) {
  if (num_variables > kMaxVariables) {
    throw ParameterError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
}

Polynomial Polynomial::constant(std::size_t num_variables, const Rational& value) {
  Polynomial p(num_variables);
  if (value != 0) {
    Rational v = value;
    v.canonicalize();
    p.terms_.push_back({Monomial{}, v.get_num()});
    p.den_ = v.get_den();
  }
  return p;
}

Polynomial Polynomial::variable(std::size_t num_variables, std::size_t var) {
  if (var >= num_variables) throw ParameterError("variable index out of range");
  Polynomial p(num_variables);
  p.terms_.push_back({Monomial::unit(var), Integer(1)});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.degree() == 0);
}

Rational Polynomial::coefficient(std::size_t i) const {
  Rational r(terms_.at(i).numerator, den_);
  r.canonicalize();
  return r;
}

Rational Polynomial::coefficient_of(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.monomial > key; });
  if (it == terms_.end() || it->monomial != m) return 0;
  Rational r(it->numerator, den_);
  r.canonicalize();
  return r;
}

int Polynomial::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().monomial.degree());
}

Polynomial Polynomial::homogeneous_component(std::uint32_t degree) const {
  Polynomial out(nvars_);
  for (const auto& t : terms_) {
    if (t.monomial.degree() == degree) out.terms_.push_back(t);
  }
  out.den_ = den_;
  out.normalize();
  return out;
}

void Polynomial::check_context(const Polynomial& other) const {
  if (nvars_ != other.nvars_) {
    throw ContextError("polynomials over " + std::to_string(nvars_) + " and " +
                       std::to_string(other.nvars_) + " variables cannot be combined");
  }
}

void Polynomial::normalize() {
  std::erase_if(terms_, [](const Term& t) { return t.numerator == 0; });
  if (terms_.empty()) {
    den_ = 1;
    return;
  }
  Integer g = den_;
  for (const auto& t : terms_) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.numerator.get_mpz_t());
  }
  if (g != 1) {
    for (auto& t : terms_) mpz_divexact(t.numerator.get_mpz_t(), t.numerator.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Polynomial Polynomial::add_scaled(const Polynomial& other, int sign) const {
  check_context(other);
  Polynomial out(nvars_);
  Integer l;
  mpz_lcm(l.get_mpz_t(), den_.get_mpz_t(), other.den_.get_mpz_t());
  const Integer fa = l / den_;
  const Integer fb = l / other.den_;
  out.terms_.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    std::strong_ordering c = std::strong_ordering::equal;
    if (i == terms_.size()) {
      c = std::strong_ordering::less;
    } else if (j == other.terms_.size()) {
      c = std::strong_ordering::greater;
    } else {
      c = terms_[i].monomial <=> other.terms_[j].monomial;
    }
    if (c > 0) {
      out.terms_.push_back({terms_[i].monomial, terms_[i].numerator * fa});
      ++i;
    } else if (c < 0) {
      Integer v = other.terms_[j].numerator * fb;
      if (sign < 0) v = -v;
      out.terms_.push_back({other.terms_[j].monomial, std::move(v)});
      ++j;
    } else {
      Integer v = terms_[i].numerator * fa;
      if (sign < 0) {
        mpz_submul(v.get_mpz_t(), other.terms_[j].numerator.get_mpz_t(), fb.get_mpz_t());
      } else {
        mpz_addmul(v.get_mpz_t(), other.terms_[j].numerator.get_mpz_t(), fb.get_mpz_t());
      }
      if (v != 0) out.terms_.push_back({terms_[i].monomial, std::move(v)});
      ++i;
      ++j;
    }
  }
  out.den_ = l;
  out.normalize();
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) { return *this = add_scaled(other, +1); }
Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this = add_scaled(other, -1); }

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.numerator = -t.numerator;
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    den_ = 1;
    return *this;
  }
  for (auto& t : terms_) t.numerator *= scalar.get_num();
  den_ *= scalar.get_den();
  normalize();
  return *this;
}

namespace {

struct HeapEntry {
  Monomial monomial;
  std::uint32_t i;
  std::uint32_t j;
};

struct HeapLess {
  bool operator()(const HeapEntry& a, const HeapEntry& b) const { return a.monomial < b.monomial; }
};

std::size_t bit_length(std::uint64_t v) {
  std::size_t bits = 0;
  for (; v != 0; v >>= 1) ++bits;
  return bits;
}

template <class V, class TermT>
bool encode_terms(const std::vector<TermT>& terms, const packed::KeyCodec& codec, packed::Encoded<V>& out) {
  out.keys.resize(terms.size());
  out.coeffs.resize(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    out.keys[i] = codec.encode(terms[i].monomial);
    if (!packed::Ops<V>::load(terms[i].numerator, out.coeffs[i])) return false;
  }
  return true;
}

template <class V, class TermT>
std::optional<std::vector<std::pair<std::uint64_t, Integer>>> multiply_with(const std::vector<TermT>& a,
                                                                            const std::vector<TermT>& b,
                                                                            const packed::KeyCodec& codec) {
  packed::Encoded<V> ea;
  packed::Encoded<V> eb;
  if (!encode_terms(a, codec, ea) || !encode_terms(b, codec, eb)) return std::nullopt;
  return packed::multiply(ea, eb);
}

template <class V, class TermT, class Accept>
packed::Division divide_with(const std::vector<TermT>& a, const std::vector<TermT>& d, const packed::KeyCodec& codec,
                             Accept&& accept, std::vector<std::pair<std::uint64_t, Integer>>& quotient) {
  packed::Encoded<V> ea;
  packed::Encoded<V> ed;
  if (!encode_terms(a, codec, ea) || !encode_terms(d, codec, ed)) return packed::Division::Overflow;
  quotient.clear();
  return packed::divide(ea, ed, accept, quotient);
}

}  // namespace

bool Polynomial::multiply_packed(const Polynomial& a, const Polynomial& b, Polynomial& out) {
  const std::size_t nv = a.nvars_;
  std::vector<std::uint32_t> top(nv, 0);
  for (const auto* p : {&a, &b}) {
    std::vector<std::uint32_t> local(nv, 0);
    for (const auto& t : p->terms_) {
      for (std::size_t v = 0; v < nv; ++v) local[v] = std::max(local[v], t.monomial[v]);
    }
    for (std::size_t v = 0; v < nv; ++v) top[v] += local[v];
  }
  const auto codec =
      packed::KeyCodec::make(top, a.terms_.front().monomial.degree() + b.terms_.front().monomial.degree());
  if (!codec) return false;

  std::optional<std::vector<std::pair<std::uint64_t, Integer>>> product;
  std::size_t bits_a = 0;
  std::size_t bits_b = 0;
  for (const auto& t : a.terms_) bits_a = std::max(bits_a, mpz_sizeinbase(t.numerator.get_mpz_t(), 2));
  for (const auto& t : b.terms_) bits_b = std::max(bits_b, mpz_sizeinbase(t.numerator.get_mpz_t(), 2));
  if (bits_a + bits_b + bit_length(std::min(a.terms_.size(), b.terms_.size())) <= 126) {
    product = multiply_with<__int128>(a.terms_, b.terms_, *codec);
  }
  if (!product) product = multiply_with<Integer>(a.terms_, b.terms_, *codec);

  std::vector<std::uint32_t> exps;
  out.terms_.reserve(product->size());
  for (auto& [key, coeff] : *product) {
    codec->decode(key, exps);
    out.terms_.push_back({Monomial::from_exponents(exps), std::move(coeff)});
  }
  return true;
}

// Heap-based product: one stream per term of the shorter operand, merged in
// decreasing monomial order so the output comes out sorted.
Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_context(b);
  Polynomial out(a.nvars_);
  if (a.is_zero() || b.is_zero()) return out;
  if (a.terms_.size() * b.terms_.size() > 64 && Polynomial::multiply_packed(a, b, out)) {
    out.den_ = a.den_ * b.den_;
    out.normalize();
    return out;
  }
  const Polynomial& s = a.terms_.size() <= b.terms_.size() ? a : b;
  const Polynomial& l = &s == &a ? b : a;

  std::vector<HeapEntry> heap;
  heap.reserve(s.terms_.size());
  for (std::uint32_t i = 0; i < s.terms_.size(); ++i) {
    heap.push_back({s.terms_[i].monomial * l.terms_[0].monomial, i, 0});
  }
  std::make_heap(heap.begin(), heap.end(), HeapLess{});

  Integer acc;
  while (!heap.empty()) {
    const Monomial current = heap.front().monomial;
    acc = 0;
    while (!heap.empty() && heap.front().monomial == current) {
      std::pop_heap(heap.begin(), heap.end(), HeapLess{});
      HeapEntry& e = heap.back();
      mpz_addmul(acc.get_mpz_t(), s.terms_[e.i].numerator.get_mpz_t(), l.terms_[e.j].numerator.get_mpz_t());
      if (e.j + 1 < l.terms_.size()) {
        ++e.j;
        e.monomial = s.terms_[e.i].monomial * l.terms_[e.j].monomial;
        std::push_heap(heap.begin(), heap.end(), HeapLess{});
      } else {
        heap.pop_back();
      }
    }
    if (acc != 0) out.terms_.push_back({current, acc});
  }
  out.den_ = a.den_ * b.den_;
  out.normalize();
  return out;
}

// In an exact division deg_v(q) = deg_v(a) - deg_v(d) for every variable, so a
// quotient term exceeding that bound proves inexactness; this also keeps every
// generated monomial inside the digit ranges of `a`.
Polynomial::DivideResult Polynomial::divide_packed(const std::vector<Term>& a, const std::vector<Term>& d,
                                                   std::size_t nvars, std::vector<Term>& q) {
  std::vector<std::uint32_t> top_a(nvars, 0);
  std::vector<std::uint32_t> top_d(nvars, 0);
  for (const auto& t : a) {
    for (std::size_t v = 0; v < nvars; ++v) top_a[v] = std::max(top_a[v], t.monomial[v]);
  }
  for (const auto& t : d) {
    for (std::size_t v = 0; v < nvars; ++v) top_d[v] = std::max(top_d[v], t.monomial[v]);
  }
  for (std::size_t v = 0; v < nvars; ++v) {
    if (top_d[v] > top_a[v]) return DivideResult::Inexact;
  }
  const std::uint32_t deg_a = a.front().monomial.degree();
  const std::uint32_t deg_d = d.front().monomial.degree();
  if (deg_d > deg_a) return DivideResult::Inexact;
  const auto codec = packed::KeyCodec::make(top_a, deg_a);
  if (!codec) return DivideResult::Unsupported;

  const Monomial& lead = d.front().monomial;
  std::vector<std::uint32_t> exps;
  std::vector<std::uint32_t> current;
  // The candidate is key - lead; it is a genuine monomial only when no digit
  // of the key falls below the corresponding digit of the lead.
  const auto accept = [&](std::uint64_t, std::uint64_t qkey) {
    codec->decode(qkey + codec->encode(lead), current);
    std::uint32_t sum = 0;
    for (std::size_t v = 0; v < nvars; ++v) {
      if (current[v] < lead[v] || current[v] - lead[v] > top_a[v] - top_d[v]) return false;
      sum += current[v] - lead[v];
    }
    return sum == codec->degree(qkey) && sum <= deg_a - deg_d;
  };

  std::vector<std::pair<std::uint64_t, Integer>> quotient;
  packed::Division result = divide_with<__int128>(a, d, *codec, accept, quotient);
  if (result == packed::Division::Overflow) result = divide_with<Integer>(a, d, *codec, accept, quotient);
  if (result == packed::Division::Inexact) return DivideResult::Inexact;

  q.reserve(quotient.size());
  for (auto& [qkey, coeff] : quotient) {
    codec->decode(qkey, exps);
    q.push_back({Monomial::from_exponents(exps), std::move(coeff)});
  }
  return DivideResult::Exact;
}

// Heap of pending quotient-times-divisor products, one stream per quotient term.
bool Polynomial::divide_heap(const std::vector<Term>& a, const std::vector<Term>& divisor, std::vector<Term>& q) {
  const Monomial& lead = divisor.front().monomial;
  const Integer& lead_coeff = divisor.front().numerator;
  std::vector<HeapEntry> heap;
  std::size_t next_a = 0;
  Integer acc;
  Integer rem;
  while (next_a < a.size() || !heap.empty()) {
    Monomial current;
    if (heap.empty() || (next_a < a.size() && a[next_a].monomial >= heap.front().monomial)) {
      current = a[next_a].monomial;
    } else {
      current = heap.front().monomial;
    }
    acc = 0;
    if (next_a < a.size() && a[next_a].monomial == current) {
      acc = a[next_a].numerator;
      ++next_a;
    }
    while (!heap.empty() && heap.front().monomial == current) {
      std::pop_heap(heap.begin(), heap.end(), HeapLess{});
      HeapEntry& e = heap.back();
      mpz_submul(acc.get_mpz_t(), q[e.i].numerator.get_mpz_t(), divisor[e.j].numerator.get_mpz_t());
      if (e.j + 1 < divisor.size()) {
        ++e.j;
        e.monomial = q[e.i].monomial * divisor[e.j].monomial;
        std::push_heap(heap.begin(), heap.end(), HeapLess{});
      } else {
        heap.pop_back();
      }
    }
    if (acc == 0) continue;
    if (!lead.divides(current)) return false;
    mpz_tdiv_r(rem.get_mpz_t(), acc.get_mpz_t(), lead_coeff.get_mpz_t());
    if (rem != 0) return false;
    Integer coeff;
    mpz_divexact(coeff.get_mpz_t(), acc.get_mpz_t(), lead_coeff.get_mpz_t());
    q.push_back({current / lead, std::move(coeff)});
    if (divisor.size() > 1) {
      const auto idx = static_cast<std::uint32_t>(q.size() - 1);
      heap.push_back({q[idx].monomial * divisor[1].monomial, idx, 1});
      std::push_heap(heap.begin(), heap.end(), HeapLess{});
    }
  }
  return true;
}

// The divisor is made primitive first; by Gauss's lemma the quotient of an
// integer polynomial by a primitive one is then integral, so every
// coefficient division is exact over Z or the division is inexact.
std::optional<Polynomial> try_exact_div(const Polynomial& a, const Polynomial& b) {
  a.check_context(b);
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  Polynomial q(a.nvars_);
  if (a.is_zero()) return q;

  Integer content = 0;
  for (const auto& t : b.terms_) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), t.numerator.get_mpz_t());
    if (content == 1) break;
  }
  std::vector<Polynomial::Term> divisor = b.terms_;
  if (content != 1) {
    for (auto& t : divisor) mpz_divexact(t.numerator.get_mpz_t(), t.numerator.get_mpz_t(), content.get_mpz_t());
  }

  using Result = Polynomial::DivideResult;
  Result result = Result::Unsupported;
  if (a.terms_.size() * divisor.size() > 64) result = Polynomial::divide_packed(a.terms_, divisor, a.nvars_, q.terms_);
  if (result == Result::Inexact) return std::nullopt;
  if (result == Result::Unsupported) {
    q.terms_.clear();
    if (!Polynomial::divide_heap(a.terms_, divisor, q.terms_)) return std::nullopt;
  }

  // a / b = (A / da) / (content * B' / db) = (A / B') * db / (da * content)
  for (auto& t : q.terms_) t.numerator *= b.den_;
  q.den_ = a.den_ * content;
  if (q.den_ < 0) {
    q.den_ = -q.den_;
    for (auto& t : q.terms_) t.numerator = -t.numerator;
  }
  q.normalize();
  return q;
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  auto q = try_exact_div(a, b);
  if (!q) throw InternalError("polynomial division is not exact");
  return std::move(*q);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.nvars_ == b.nvars_ && a.den_ == b.den_ && a.terms_ == b.terms_;
}

Polynomial Polynomial::pow(std::uint64_t exponent) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

namespace {

// powers[v][e] = value_v^e, filled lazily up to the needed exponent.
template <class T, class One>
const T& cached_power(std::vector<std::vector<T>>& powers, std::size_t v, std::uint32_t e, const T& base,
                      One one) {
  auto& row = powers[v];
  if (row.empty()) row.push_back(one());
  while (row.size() <= e) row.push_back(row.back() * base);
  return row[e];
}

}  // namespace

Rational Polynomial::evaluate(const Assignment& assignment) const {
  if (assignment.num_variables() != nvars_) throw ContextError("assignment context does not match polynomial");
  std::vector<std::vector<Rational>> powers(nvars_);
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational term(t.numerator);
    for (std::size_t v = 0; v < nvars_; ++v) {
      const std::uint32_t e = t.monomial[v];
      if (e == 0) continue;
      const auto& value = assignment.get(v);
      if (!value) throw ContextError("no value assigned to variable " + variable_name(v, nvars_));
      term *= cached_power(powers, v, e, *value, [] { return Rational(1); });
    }
    sum += term;
  }
  sum /= den_;
  return sum;
}

Polynomial Polynomial::partial_evaluate(const Assignment& assignment) const {
  if (assignment.num_variables() != nvars_) throw ContextError("assignment context does not match polynomial");
  std::vector<Polynomial> images;
  images.reserve(nvars_);
  for (std::size_t v = 0; v < nvars_; ++v) {
    const auto& value = assignment.get(v);
    images.push_back(value ? constant(nvars_, *value) : variable(nvars_, v));
  }
  return substitute(images);
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != nvars_) throw ContextError("substitution needs one image per variable");
  const std::size_t target = images.empty() ? nvars_ : images.front().nvars_;
  for (const auto& img : images) {
    if (img.nvars_ != target) throw ContextError("substitution images use different contexts");
  }
  std::vector<std::vector<Polynomial>> powers(nvars_);
  Polynomial out(target);
  for (const auto& t : terms_) {
    Polynomial term = constant(target, Rational(t.numerator));
    for (std::size_t v = 0; v < nvars_; ++v) {
      const std::uint32_t e = t.monomial[v];
      if (e == 0) continue;
      term *= cached_power(powers, v, e, images[v], [target] { return constant(target, 1); });
    }
    out += term;
  }
  out *= Rational(Integer(1), den_);
  return out;
}

std::string Polynomial::term_string(std::size_t i) const {
  std::string s = compdet::to_string(coefficient(i));
  const Monomial& m = terms_[i].monomial;
  for (std::size_t v = 0; v < nvars_; ++v) {
    const std::uint32_t e = m[v];
    if (e == 0) continue;
    s += '*';
    s += variable_name(v, nvars_);
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0) s += " + ";
    s += term_string(i);
  }
  return s;
}

std::string Polynomial::leading_term_string() const { return terms_.empty() ? "0" : term_string(0); }

// ---------------------------------------------------------------- free functions

Polynomial falling_factorial(const Polynomial& p, std::uint64_t m) {
  Polynomial result = Polynomial::constant(p.num_variables(), 1);
  for (std::uint64_t i = 0; i < m; ++i) {
    result *= p - Polynomial::constant(p.num_variables(), Rational(Integer(i)));
  }
  return result;
}

Polynomial poly_binomial(const Polynomial& p, std::uint64_t m) {
  return falling_factorial(p, m) * Rational(Integer(1), factorial(m));
}

Polynomial parse_polynomial(std::string_view text, std::size_t num_variables) {
  Polynomial out(num_variables);
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.empty()) throw ParameterError("empty polynomial string");
  if (compact == "0") return out;

  // Terms are separated by '+' or a binary '-'; a sign directly after '+' or
  // at the start belongs to the coefficient.
  std::vector<std::string> terms;
  std::string current;
  for (std::size_t i = 0; i < compact.size(); ++i) {
    const char c = compact[i];
    const bool binary = !current.empty() && current.back() != '*' && current.back() != '/' && current.back() != '^';
    if (c == '+' && !current.empty()) {
      terms.push_back(current);
      current.clear();
    } else if (c == '-' && binary) {
      terms.push_back(current);
      current = "-";
    } else {
      current += c;
    }
  }
  if (current.empty()) throw ParameterError("dangling '+' in polynomial string");
  terms.push_back(current);

  for (std::string_view term : terms) {
    Polynomial t = Polynomial::constant(num_variables, 1);
    if (term.size() > 1 && term[0] == '-' && (term[1] == 'x' || term[1] == 'l')) {
      t = Polynomial::constant(num_variables, -1);
      term.remove_prefix(1);
    }
    std::stringstream ss{std::string(term)};
    std::string factor;
    while (std::getline(ss, factor, '*')) {
      if (factor.empty()) throw ParameterError("empty factor in '" + std::string(term) + "'");
      if (factor[0] == 'x' || factor[0] == 'l') {
        const auto caret = factor.find('^');
        const std::size_t var = parse_variable(factor.substr(0, caret), num_variables);
        std::uint64_t e = 1;
        if (caret != std::string::npos) {
          const std::string digits = factor.substr(caret + 1);
          auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), e);
          if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
            throw ParameterError("bad exponent in '" + factor + "'");
          }
        }
        t *= Polynomial::variable(num_variables, var).pow(e);
      } else {
        t *= parse_rational(factor);
      }
    }
    out += t;
  }
  return out;
}

}  // namespace compdet

#pragma once

// Hash-based kernels for sparse products and exact quotients. Monomials are
// encoded as 64-bit keys whose integer order is graded-lex order and whose
// addition is monomial multiplication; coefficients accumulate either in
// overflow-checked 128-bit integers or in GMP integers.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "compdet/exactnum.hpp"
#include "compdet/polynomial.hpp"

namespace compdet::packed {

template <class V>
struct Ops;

template <>
struct Ops<__int128> {
  static bool load(const Integer& v, __int128& out) {
    if (mpz_sizeinbase(v.get_mpz_t(), 2) > 126) return false;
    Integer magnitude = abs(v);
    const Integer high = magnitude >> 64;
    magnitude -= high << 64;
    unsigned __int128 u = static_cast<unsigned __int128>(mpz_get_ui(high.get_mpz_t())) << 64;
    u |= mpz_get_ui(magnitude.get_mpz_t());
    out = v < 0 ? -static_cast<__int128>(u) : static_cast<__int128>(u);
    return true;
  }
  static Integer store(__int128 v) {
    const bool negative = v < 0;
    const unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    Integer out(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    out <<= 64;
    out += static_cast<unsigned long>(static_cast<std::uint64_t>(u));
    if (negative) out = -out;
    return out;
  }
  static bool product(__int128 a, __int128 b, __int128& p) {
    const auto a64 = static_cast<std::int64_t>(a);
    const auto b64 = static_cast<std::int64_t>(b);
    if (a64 == a && b64 == b) {
      p = static_cast<__int128>(a64) * b64;
      return true;
    }
    return !__builtin_mul_overflow(a, b, &p);
  }
  static bool add_product(__int128& acc, __int128 a, __int128 b) {
    __int128 p = 0;
    return product(a, b, p) && !__builtin_add_overflow(acc, p, &acc);
  }
  static bool sub_product(__int128& acc, __int128 a, __int128 b) {
    __int128 p = 0;
    return product(a, b, p) && !__builtin_sub_overflow(acc, p, &acc);
  }
  static bool is_zero(__int128 v) { return v == 0; }
  /// a / b when b divides a.
  static std::optional<__int128> quotient(__int128 a, __int128 b) {
    if (a % b != 0) return std::nullopt;
    return a / b;
  }
};

template <>
struct Ops<Integer> {
  static bool load(const Integer& v, Integer& out) {
    out = v;
    return true;
  }
  static Integer store(const Integer& v) { return v; }
  static bool add_product(Integer& acc, const Integer& a, const Integer& b) {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return true;
  }
  static bool sub_product(Integer& acc, const Integer& a, const Integer& b) {
    mpz_submul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return true;
  }
  static bool is_zero(const Integer& v) { return v == 0; }
  static std::optional<Integer> quotient(const Integer& a, const Integer& b) {
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return std::nullopt;
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
};

/// Mixed-radix encoding: a degree digit above one digit per variable.
class KeyCodec {
 public:
  /// nullopt when the key space exceeds 62 bits.
  static std::optional<KeyCodec> make(std::span<const std::uint32_t> top_exponent, std::uint32_t top_degree) {
    KeyCodec codec;
    codec.radix_.assign(top_exponent.begin(), top_exponent.end());
    codec.weight_.assign(top_exponent.size(), 0);
    unsigned __int128 span = 1;
    constexpr unsigned __int128 limit = std::uint64_t{1} << 62;
    for (std::size_t v = top_exponent.size(); v-- > 0;) {
      ++codec.radix_[v];
      codec.weight_[v] = static_cast<std::uint64_t>(span);
      span *= codec.radix_[v];
      if (span > limit) return std::nullopt;
    }
    codec.degree_weight_ = static_cast<std::uint64_t>(span);
    span *= top_degree + 1;
    if (span > limit) return std::nullopt;
    return codec;
  }

  std::uint64_t encode(const Monomial& m) const {
    std::uint64_t key = m.degree() * degree_weight_;
    for (std::size_t v = 0; v < weight_.size(); ++v) key += m[v] * weight_[v];
    return key;
  }

  std::uint32_t degree(std::uint64_t key) const { return static_cast<std::uint32_t>(key / degree_weight_); }

  void decode(std::uint64_t key, std::vector<std::uint32_t>& exps) const {
    exps.resize(weight_.size());
    std::uint64_t rest = key % degree_weight_;
    for (std::size_t v = 0; v < weight_.size(); ++v) {
      exps[v] = static_cast<std::uint32_t>(rest / weight_[v]);
      rest %= weight_[v];
    }
  }

 private:
  std::vector<std::uint32_t> radix_;
  std::vector<std::uint64_t> weight_;
  std::uint64_t degree_weight_ = 1;
};

/// Open-addressing map from keys to accumulators.
template <class V>
class KeyTable {
 public:
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

  explicit KeyTable(std::size_t expected) {
    std::size_t capacity = 16;
    while (capacity < 2 * expected) capacity <<= 1;
    slots_.resize(capacity);
  }

  /// Accumulator for `key`, inserting a zero entry when absent.
  V& at(std::uint64_t key, bool& inserted) {
    std::size_t h = probe(key);
    inserted = slots_[h].key == kEmpty;
    if (inserted) {
      if (2 * (used_ + 1) > slots_.size()) {
        grow();
        h = probe(key);
      }
      slots_[h].key = key;
      ++used_;
    }
    return slots_[h].value;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (const auto& s : slots_) {
      if (s.key != kEmpty) fn(s.key, s.value);
    }
  }

 private:
  struct Slot {
    std::uint64_t key = kEmpty;
    V value{};
  };

  std::size_t probe(std::uint64_t key) const {
    const std::size_t mask = slots_.size() - 1;
    std::size_t h = static_cast<std::size_t>((key * 0x9E3779B97F4A7C15ULL) >> 17) & mask;
    while (slots_[h].key != kEmpty && slots_[h].key != key) h = (h + 1) & mask;
    return h;
  }

  void grow() {
    std::vector<Slot> old(slots_.size() * 2);
    old.swap(slots_);
    for (auto& s : old) {
      if (s.key != kEmpty) slots_[probe(s.key)] = std::move(s);
    }
  }

  std::vector<Slot> slots_;
  std::size_t used_ = 0;
};

template <class V>
struct Encoded {
  std::vector<std::uint64_t> keys;
  std::vector<V> coeffs;
};

/// Product terms sorted by decreasing key; nullopt on accumulator overflow.
template <class V>
std::optional<std::vector<std::pair<std::uint64_t, Integer>>> multiply(const Encoded<V>& a, const Encoded<V>& b) {
  KeyTable<V> table(a.keys.size() + b.keys.size());
  bool inserted = false;
  for (std::size_t i = 0; i < a.keys.size(); ++i) {
    for (std::size_t j = 0; j < b.keys.size(); ++j) {
      if (!Ops<V>::add_product(table.at(a.keys[i] + b.keys[j], inserted), a.coeffs[i], b.coeffs[j])) {
        return std::nullopt;
      }
    }
  }
  std::vector<std::pair<std::uint64_t, Integer>> out;
  table.for_each([&](std::uint64_t key, const V& value) {
    if (!Ops<V>::is_zero(value)) out.emplace_back(key, Ops<V>::store(value));
  });
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  return out;
}

enum class Division { Exact, Inexact, Overflow };

/// Quotient keys and coefficients in decreasing order. `accept(key)` decides
/// whether a candidate quotient monomial is admissible; a rejected one, a
/// non-divisible coefficient, or a leftover remainder means Inexact.
template <class V, class Accept>
Division divide(const Encoded<V>& a, const Encoded<V>& d, Accept&& accept,
                std::vector<std::pair<std::uint64_t, Integer>>& quotient) {
  KeyTable<V> table(a.keys.size() + d.keys.size());
  std::vector<std::uint64_t> heap(a.keys);
  bool inserted = false;
  for (std::size_t i = 0; i < a.keys.size(); ++i) table.at(a.keys[i], inserted) = a.coeffs[i];
  std::make_heap(heap.begin(), heap.end());

  // Every product q * d[j] with j >= 1 is smaller than q * d[0], the key just
  // consumed, so a popped key never receives further contributions.
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end());
    const std::uint64_t key = heap.back();
    heap.pop_back();
    const V value = table.at(key, inserted);
    if (Ops<V>::is_zero(value)) continue;
    if (key < d.keys[0] || !accept(key, key - d.keys[0])) return Division::Inexact;
    const auto coeff = Ops<V>::quotient(value, d.coeffs[0]);
    if (!coeff) return Division::Inexact;
    const std::uint64_t qkey = key - d.keys[0];
    for (std::size_t j = 1; j < d.keys.size(); ++j) {
      const std::uint64_t target = qkey + d.keys[j];
      if (!Ops<V>::sub_product(table.at(target, inserted), *coeff, d.coeffs[j])) return Division::Overflow;
      if (inserted) {
        heap.push_back(target);
        std::push_heap(heap.begin(), heap.end());
      }
    }
    quotient.emplace_back(qkey, Ops<V>::store(*coeff));
  }
  return Division::Exact;
}

}  // namespace compdet::packed

#include "compdet/combinatorics.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "compdet/errors.hpp"
#include "compdet/exactnum.hpp"

namespace compdet {

std::string_view to_string(Domain domain) { return domain == Domain::All ? "ALL" : "POSITIVE"; }

Domain parse_domain(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "all") return Domain::All;
  if (lower == "positive") return Domain::Positive;
  throw ParameterError("unknown domain '" + std::string(text) + "' (expected all or positive)");
}

std::uint64_t Composition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0}); }

std::string Composition::to_string() const {
  std::string s = "(";
  for (std::size_t t = 0; t < parts_.size(); ++t) {
    if (t > 0) s += ',';
    s += std::to_string(parts_[t]);
  }
  return s + ")";
}

void check_parameters(std::int64_t n, std::int64_t k, Domain domain) {
  if (k < 1) throw ParameterError("k must be at least 1 (got " + std::to_string(k) + ")");
  if (n < 0) throw ParameterError("n must be non-negative (got " + std::to_string(n) + ")");
  if (domain == Domain::Positive && n < k) {
    throw ParameterError("positive compositions need n >= k (got n = " + std::to_string(n) +
                         ", k = " + std::to_string(k) + ")");
  }
}

void for_each_composition(std::int64_t n, std::int64_t k, Domain domain,
                          const std::function<void(std::span<const std::uint32_t>)>& visit) {
  check_parameters(n, k, domain);
  const auto size = static_cast<std::size_t>(k);
  const std::uint32_t offset = domain == Domain::Positive ? 1 : 0;
  const auto total = static_cast<std::uint32_t>(domain == Domain::Positive ? n - k : n);

  // Walk C(total, k) in lex order; positive compositions are the image
  // under adding one to each part, which preserves the order.
  std::vector<std::uint32_t> parts(size, 0);
  std::vector<std::uint32_t> shown(size, 0);
  parts.back() = total;
  while (true) {
    for (std::size_t t = 0; t < size; ++t) shown[t] = parts[t] + offset;
    visit(shown);
    // Last nonzero position q; the successor raises position q-1 by one and
    // moves the rest of the suffix mass to the final slot.
    std::size_t q = size;
    while (q > 0 && parts[q - 1] == 0) --q;
    if (q == 0) break;  // only for total == 0
    --q;
    if (q == 0) break;
    const std::uint32_t mass = parts[q];
    parts[q] = 0;
    ++parts[q - 1];
    parts.back() = mass - 1;
  }
}

std::vector<Composition> enumerate(std::int64_t n, std::int64_t k, Domain domain) {
  std::vector<Composition> out;
  out.reserve(count(n, k, domain));
  for_each_composition(n, k, domain, [&out](std::span<const std::uint32_t> parts) {
    out.emplace_back(std::vector<std::uint32_t>(parts.begin(), parts.end()));
  });
  return out;
}

std::uint64_t count(std::int64_t n, std::int64_t k, Domain domain) {
  check_parameters(n, k, domain);
  const Integer c = domain == Domain::All ? counting_binomial(n + k - 1, k - 1) : counting_binomial(n - 1, k - 1);
  return to_u64(c);
}

std::size_t index_of(const Composition& c, std::int64_t n, std::int64_t k, Domain domain) {
  check_parameters(n, k, domain);
  if (c.size() != static_cast<std::size_t>(k) || c.sum() != static_cast<std::uint64_t>(n)) {
    throw LookupError("composition " + c.to_string() + " is not in the requested set");
  }
  Composition base = c;
  std::int64_t total = n;
  if (domain == Domain::Positive) {
    if (std::any_of(c.parts().begin(), c.parts().end(), [](std::uint32_t p) { return p == 0; })) {
      throw LookupError("composition " + c.to_string() + " has a zero part");
    }
    base = shift_down(c);
    total = n - k;
  }
  // Rank = number of lex-smaller compositions, counted position by position.
  Integer rank = 0;
  std::int64_t remaining = total;
  for (std::size_t t = 0; t + 1 < base.size(); ++t) {
    const auto rest = static_cast<std::int64_t>(base.size() - t - 1);
    for (std::uint32_t v = 0; v < base[t]; ++v) rank += composition_count(remaining - v, rest);
    remaining -= base[t];
  }
  return static_cast<std::size_t>(to_u64(rank));
}

Composition shift_down(const Composition& c) {
  std::vector<std::uint32_t> parts(c.parts().begin(), c.parts().end());
  for (auto& p : parts) {
    if (p == 0) throw DomainError("shift_down needs every part >= 1, got " + c.to_string());
    --p;
  }
  return Composition(std::move(parts));
}

Composition unit_composition(std::int64_t t, std::int64_t k) {
  if (k < 1 || t < 1 || t > k) {
    throw ParameterError("unit composition position " + std::to_string(t) + " out of range 1.." + std::to_string(k));
  }
  std::vector<std::uint32_t> parts(static_cast<std::size_t>(k), 0);
  parts[static_cast<std::size_t>(t - 1)] = 1;
  return Composition(std::move(parts));
}

Composition operator+(const Composition& a, const Composition& b) {
  if (a.size() != b.size()) throw ParameterError("compositions of different lengths");
  std::vector<std::uint32_t> parts(a.size());
  for (std::size_t t = 0; t < a.size(); ++t) parts[t] = a[t] + b[t];
  return Composition(std::move(parts));
}

}  // namespace compdet

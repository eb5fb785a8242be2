#pragma once

// Compositions of n into k parts: all parts >= 0 (Domain::All) or all
// parts >= 1 (Domain::Positive). Every enumeration in the library uses the
// same canonical order, ascending lexicographic on (part_1, ..., part_k).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace compdet {

enum class Domain { All, Positive };

std::string_view to_string(Domain domain);
/// Accepts "all" / "positive" in any case.
Domain parse_domain(std::string_view text);

class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {}
  Composition(std::initializer_list<std::uint32_t> parts) : parts_(parts) {}

  std::size_t size() const { return parts_.size(); }
  std::uint32_t operator[](std::size_t t) const { return parts_[t]; }
  std::span<const std::uint32_t> parts() const { return parts_; }
  std::uint64_t sum() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

  /// "(1,0,2)"
  std::string to_string() const;

 private:
  std::vector<std::uint32_t> parts_;
};

/// Throws ParameterError unless k >= 1 and, for Domain::Positive, n >= k.
void check_parameters(std::int64_t n, std::int64_t k, Domain domain);

std::vector<Composition> enumerate(std::int64_t n, std::int64_t k, Domain domain);

/// Visits the compositions in canonical order without materializing them.
/// The span passed to `visit` is only valid during the call.
void for_each_composition(std::int64_t n, std::int64_t k, Domain domain,
                          const std::function<void(std::span<const std::uint32_t>)>& visit);

/// |C(n,k)| = C(n+k-1, k-1) or |C*(n,k)| = C(n-1, k-1), by closed formula.
std::uint64_t count(std::int64_t n, std::int64_t k, Domain domain);

/// Position of c in enumerate(n, k, domain); throws LookupError if absent.
std::size_t index_of(const Composition& c, std::int64_t n, std::int64_t k, Domain domain);

/// Subtracts one from every part; throws DomainError on a zero part.
Composition shift_down(const Composition& c);

/// Composition of 1 with its single 1 at 1-based position t.
Composition unit_composition(std::int64_t t, std::int64_t k);

/// Componentwise sum; both operands must have equal length.
Composition operator+(const Composition& a, const Composition& b);

}  // namespace compdet

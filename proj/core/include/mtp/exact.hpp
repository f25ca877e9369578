#pragma once

// Exact integers and reduced rationals.
//
// ExactInt keeps values that fit in 64 bits inline and promotes to a
// heap-allocated arbitrary-precision integer on overflow, so arithmetic
// never wraps. Values are immutable once built and safe to share across
// threads.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace mtp {

using BigInt = boost::multiprecision::cpp_int;

class ExactInt {
 public:
  constexpr ExactInt() noexcept = default;
  constexpr ExactInt(std::int64_t v) noexcept : small_(v) {}  // NOLINT(google-explicit-constructor)
  constexpr ExactInt(int v) noexcept : small_(v) {}           // NOLINT(google-explicit-constructor)
  explicit ExactInt(const BigInt& v);

  /// Parses an optionally signed decimal literal. Throws mtp::Error on bad input.
  static ExactInt parse(std::string_view text);

  [[nodiscard]] bool is_small() const noexcept { return big_ == nullptr; }
  [[nodiscard]] std::optional<std::int64_t> to_int64() const noexcept;
  [[nodiscard]] BigInt to_big() const;
  [[nodiscard]] std::string str() const;
  [[nodiscard]] int sign() const noexcept;

  friend ExactInt operator+(const ExactInt& lhs, const ExactInt& rhs);
  friend ExactInt operator-(const ExactInt& lhs, const ExactInt& rhs);
  friend ExactInt operator*(const ExactInt& lhs, const ExactInt& rhs);
  // Truncating division and remainder, matching built-in integer semantics.
  friend ExactInt operator/(const ExactInt& lhs, const ExactInt& rhs);
  friend ExactInt operator%(const ExactInt& lhs, const ExactInt& rhs);
  friend ExactInt operator-(const ExactInt& v);

  ExactInt& operator+=(const ExactInt& rhs) { return *this = *this + rhs; }
  ExactInt& operator-=(const ExactInt& rhs) { return *this = *this - rhs; }
  ExactInt& operator*=(const ExactInt& rhs) { return *this = *this * rhs; }
  ExactInt& operator/=(const ExactInt& rhs) { return *this = *this / rhs; }

  friend bool operator==(const ExactInt& lhs, const ExactInt& rhs) noexcept;
  friend std::strong_ordering operator<=>(const ExactInt& lhs, const ExactInt& rhs) noexcept;

 private:
  static ExactInt from_big(BigInt v);

  std::int64_t small_ = 0;
  std::shared_ptr<const BigInt> big_;
};

[[nodiscard]] ExactInt abs(const ExactInt& v);
/// Non-negative gcd; gcd(0, 0) == 0.
[[nodiscard]] ExactInt gcd(const ExactInt& lhs, const ExactInt& rhs);
/// Floor square root of a non-negative value.
[[nodiscard]] ExactInt isqrt(const ExactInt& v);
[[nodiscard]] bool is_perfect_square(const ExactInt& v);
[[nodiscard]] ExactInt square(const ExactInt& v);

std::ostream& operator<<(std::ostream& os, const ExactInt& v);

/// Rational number in canonical form: den > 0 and gcd(|num|, den) == 1.
/// Equality is structural; ordering uses cross-multiplication.
class Ratio {
 public:
  Ratio() : num_(0), den_(1) {}
  Ratio(ExactInt value) : num_(std::move(value)), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// Throws mtp::Error(ZeroDenominator) when den == 0.
  Ratio(ExactInt num, ExactInt den);

  /// Parses "p/q" or "p". Throws mtp::Error on malformed text.
  static Ratio parse(std::string_view text);

  [[nodiscard]] const ExactInt& num() const noexcept { return num_; }
  [[nodiscard]] const ExactInt& den() const noexcept { return den_; }
  /// Always "p/q", including q == 1.
  [[nodiscard]] std::string str() const;
  /// Cosmetic only. Never use in a verdict.
  [[nodiscard]] double approx() const;

  friend Ratio operator+(const Ratio& lhs, const Ratio& rhs);
  friend Ratio operator-(const Ratio& lhs, const Ratio& rhs);
  friend Ratio operator*(const Ratio& lhs, const Ratio& rhs);
  friend Ratio operator/(const Ratio& lhs, const Ratio& rhs);

  friend bool operator==(const Ratio& lhs, const Ratio& rhs) = default;
  friend std::strong_ordering operator<=>(const Ratio& lhs, const Ratio& rhs);

 private:
  struct Reduced {};
  Ratio(ExactInt num, ExactInt den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  ExactInt num_;
  ExactInt den_;
};

std::ostream& operator<<(std::ostream& os, const Ratio& r);

}  // namespace mtp

#include "mtp/exact.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <utility>

#include "mtp/error.hpp"

namespace mtp {

namespace {

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

}  // namespace

ExactInt::ExactInt(const BigInt& v) { *this = from_big(v); }

ExactInt ExactInt::from_big(BigInt v) {
  ExactInt out;
  if (v >= kMin && v <= kMax) {
    out.small_ = static_cast<std::int64_t>(v);
  } else {
    out.big_ = std::make_shared<const BigInt>(std::move(v));
  }
  return out;
}

ExactInt ExactInt::parse(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty integer literal");
  std::size_t digits_from = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (digits_from == text.size()) throw Error(ErrorCode::ParseError, "bad integer literal '" + std::string(text) + "'");
  for (std::size_t i = digits_from; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw Error(ErrorCode::ParseError, "bad integer literal '" + std::string(text) + "'");
    }
  }
  std::int64_t small = 0;
  const char* first = text.data() + (text.front() == '+' ? 1 : 0);
  auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), small);
  if (ec == std::errc{} && ptr == text.data() + text.size()) return ExactInt(small);
  std::string body(text.substr(digits_from));
  BigInt big(body);
  if (text.front() == '-') big = -big;
  return from_big(std::move(big));
}

std::optional<std::int64_t> ExactInt::to_int64() const noexcept {
  if (big_) return std::nullopt;
  return small_;
}

BigInt ExactInt::to_big() const { return big_ ? *big_ : BigInt(small_); }

std::string ExactInt::str() const { return big_ ? big_->str() : std::to_string(small_); }

int ExactInt::sign() const noexcept {
  if (big_) return big_->sign();
  return (small_ > 0) - (small_ < 0);
}

ExactInt operator+(const ExactInt& lhs, const ExactInt& rhs) {
  std::int64_t out = 0;
  if (lhs.is_small() && rhs.is_small() && !__builtin_add_overflow(lhs.small_, rhs.small_, &out)) return ExactInt(out);
  return ExactInt::from_big(lhs.to_big() + rhs.to_big());
}

ExactInt operator-(const ExactInt& lhs, const ExactInt& rhs) {
  std::int64_t out = 0;
  if (lhs.is_small() && rhs.is_small() && !__builtin_sub_overflow(lhs.small_, rhs.small_, &out)) return ExactInt(out);
  return ExactInt::from_big(lhs.to_big() - rhs.to_big());
}

ExactInt operator*(const ExactInt& lhs, const ExactInt& rhs) {
  std::int64_t out = 0;
  if (lhs.is_small() && rhs.is_small() && !__builtin_mul_overflow(lhs.small_, rhs.small_, &out)) return ExactInt(out);
  return ExactInt::from_big(lhs.to_big() * rhs.to_big());
}

ExactInt operator/(const ExactInt& lhs, const ExactInt& rhs) {
  if (rhs.sign() == 0) throw Error(ErrorCode::ZeroDenominator, "integer division by zero");
  if (lhs.is_small() && rhs.is_small() && !(lhs.small_ == kMin && rhs.small_ == -1)) {
    return ExactInt(lhs.small_ / rhs.small_);
  }
  return ExactInt::from_big(lhs.to_big() / rhs.to_big());
}

ExactInt operator%(const ExactInt& lhs, const ExactInt& rhs) {
  if (rhs.sign() == 0) throw Error(ErrorCode::ZeroDenominator, "integer remainder by zero");
  if (lhs.is_small() && rhs.is_small()) {
    if (rhs.small_ == -1) return ExactInt(0);
    return ExactInt(lhs.small_ % rhs.small_);
  }
  return ExactInt::from_big(lhs.to_big() % rhs.to_big());
}

ExactInt operator-(const ExactInt& v) {
  if (v.is_small() && v.small_ != kMin) return ExactInt(-v.small_);
  return ExactInt::from_big(-v.to_big());
}

bool operator==(const ExactInt& lhs, const ExactInt& rhs) noexcept {
  // Canonical representation: a value is big only when it does not fit in 64 bits.
  if (lhs.is_small() != rhs.is_small()) return false;
  if (lhs.is_small()) return lhs.small_ == rhs.small_;
  return *lhs.big_ == *rhs.big_;
}

std::strong_ordering operator<=>(const ExactInt& lhs, const ExactInt& rhs) noexcept {
  if (lhs.is_small() && rhs.is_small()) return lhs.small_ <=> rhs.small_;
  const int c = lhs.to_big().compare(rhs.to_big());
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

ExactInt abs(const ExactInt& v) { return v.sign() < 0 ? -v : v; }

ExactInt gcd(const ExactInt& lhs, const ExactInt& rhs) {
  auto l = lhs.to_int64();
  auto r = rhs.to_int64();
  if (l && r && *l != kMin && *r != kMin) return ExactInt(std::gcd(*l, *r));
  return ExactInt(boost::multiprecision::gcd(lhs.to_big(), rhs.to_big()));
}

ExactInt isqrt(const ExactInt& v) {
  if (v.sign() < 0) throw Error(ErrorCode::NonPositive, "isqrt of negative value " + v.str());
  if (auto small = v.to_int64()) {
    auto root = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(*small)));
    // Correct the floating estimate in exact arithmetic.
    while (root > 0 && (ExactInt(root) * ExactInt(root)) > v) --root;
    while ((ExactInt(root + 1) * ExactInt(root + 1)) <= v) ++root;
    return ExactInt(root);
  }
  return ExactInt(boost::multiprecision::sqrt(v.to_big()));
}

bool is_perfect_square(const ExactInt& v) {
  if (v.sign() < 0) return false;
  const ExactInt r = isqrt(v);
  return r * r == v;
}

ExactInt square(const ExactInt& v) { return v * v; }

std::ostream& operator<<(std::ostream& os, const ExactInt& v) { return os << v.str(); }

Ratio::Ratio(ExactInt num, ExactInt den) {
  if (den.sign() == 0) throw Error(ErrorCode::ZeroDenominator, "ratio " + num.str() + "/0");
  if (den.sign() < 0) {
    num = -num;
    den = -den;
  }
  const ExactInt g = gcd(num, den);
  if (g == ExactInt(1)) {
    num_ = std::move(num);
    den_ = std::move(den);
  } else {
    num_ = num / g;
    den_ = den / g;
  }
}

Ratio Ratio::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Ratio(ExactInt::parse(text));
  return Ratio(ExactInt::parse(text.substr(0, slash)), ExactInt::parse(text.substr(slash + 1)));
}

std::string Ratio::str() const { return num_.str() + "/" + den_.str(); }

double Ratio::approx() const {
  return static_cast<double>(num_.to_big().convert_to<long double>() / den_.to_big().convert_to<long double>());
}

Ratio operator+(const Ratio& lhs, const Ratio& rhs) {
  return {lhs.num_ * rhs.den_ + rhs.num_ * lhs.den_, lhs.den_ * rhs.den_};
}

Ratio operator-(const Ratio& lhs, const Ratio& rhs) {
  return {lhs.num_ * rhs.den_ - rhs.num_ * lhs.den_, lhs.den_ * rhs.den_};
}

Ratio operator*(const Ratio& lhs, const Ratio& rhs) { return {lhs.num_ * rhs.num_, lhs.den_ * rhs.den_}; }

Ratio operator/(const Ratio& lhs, const Ratio& rhs) {
  if (rhs.num_.sign() == 0) throw Error(ErrorCode::ZeroDenominator, "division by zero ratio");
  return {lhs.num_ * rhs.den_, lhs.den_ * rhs.num_};
}

std::strong_ordering operator<=>(const Ratio& lhs, const Ratio& rhs) {
  // Denominators are positive, so cross-multiplication preserves order.
  return (lhs.num_ * rhs.den_) <=> (rhs.num_ * lhs.den_);
}

std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.str(); }

}  // namespace mtp

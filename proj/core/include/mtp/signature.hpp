#pragma once

// The combinatorial shadow of an MTP tiling of the unit square: the smallest
// tile has side 1/a and class i holds n_i tiles of side m_i/a.

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mtp/exact.hpp"

namespace mtp {

struct SizeClass {
  ExactInt m;  // side multiplier, >= 1
  ExactInt n;  // tile count, >= 1

  friend bool operator==(const SizeClass&, const SizeClass&) = default;
};

/// Canonical signature: classes strictly ascending in m, m_1 == 1, a >= 2 and
/// sum n_i m_i^2 == a^2. Only make_signature can build one.
class Signature {
 public:
  [[nodiscard]] const ExactInt& a() const noexcept { return a_; }
  [[nodiscard]] std::span<const SizeClass> classes() const noexcept { return classes_; }
  [[nodiscard]] std::size_t class_count() const noexcept { return classes_.size(); }
  [[nodiscard]] const SizeClass& smallest() const noexcept { return classes_.front(); }
  [[nodiscard]] const SizeClass& operator[](std::size_t i) const noexcept { return classes_[i]; }

  /// "{a=4,[(1,4),(2,3)]}"
  [[nodiscard]] std::string str() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  Signature(ExactInt a, std::vector<SizeClass> classes) : a_(std::move(a)), classes_(std::move(classes)) {}
  friend Signature make_signature(ExactInt a, std::vector<SizeClass> classes);

  ExactInt a_;
  std::vector<SizeClass> classes_;
};

/// Validates and canonicalizes: divides a and every m by the gcd of the m
/// values, then sorts by m. Throws mtp::Error with NonPositive, DuplicateSize,
/// NonCanonicalizable, DegenerateGrid or AreaMismatch.
Signature make_signature(ExactInt a, std::vector<SizeClass> classes);
Signature make_signature(std::int64_t a, std::initializer_list<std::pair<std::int64_t, std::int64_t>> classes);

std::ostream& operator<<(std::ostream& os, const Signature& sig);

/// The conjectured maximum (k^2+1)/k for k^2+3 tiles.
struct ConjectureTarget {
  ExactInt k;
  Ratio value;
};

/// Throws mtp::Error(NonPositive) unless k >= 2.
[[nodiscard]] ConjectureTarget conjecture_target(const ExactInt& k);

[[nodiscard]] ExactInt tile_count(const Signature& sig);
/// k with tile_count == k^2 + 3 and k >= 2, if one exists.
[[nodiscard]] std::optional<ExactInt> k_of(const Signature& sig);

// Raw forms over an unvalidated class list, for tuples that are not signatures.
[[nodiscard]] ExactInt pair_spread(std::span<const SizeClass> classes);
[[nodiscard]] ExactInt area_term(std::span<const SizeClass> classes);

/// sum n_i m_i, the length of the tiling scaled by a.
[[nodiscard]] ExactInt side_sum(const Signature& sig);
/// sum_{i<j} n_i n_j (m_i - m_j)^2
[[nodiscard]] ExactInt pair_spread(const Signature& sig);
/// sum n_i m_i^2 (equals a^2 for every valid signature)
[[nodiscard]] ExactInt area_term(const Signature& sig);

[[nodiscard]] Ratio sigma(const Signature& sig);
[[nodiscard]] Ratio gamma(const Signature& sig);
[[nodiscard]] ExactInt delta(const Signature& sig);

// The comparisons below are exact integer cross-multiplications and throw
// mtp::Error(KMismatch) when tile_count(sig) != k^2 + 3.

/// sigma > k + 1/k, strictly.
[[nodiscard]] bool exceeds_conjecture(const Signature& sig, const ExactInt& k);
/// sigma == k + 1/k.
[[nodiscard]] bool attains_conjecture(const Signature& sig, const ExactInt& k);
/// (delta < 0) or (sigma < k + 1/k). Must hold for every signature.
[[nodiscard]] bool lemma1_implication(const Signature& sig, const ExactInt& k);

}  // namespace mtp

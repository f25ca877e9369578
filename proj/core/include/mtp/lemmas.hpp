#pragma once

// Case analysis that rules out maximal tilings with two, three, or four-plus
// tile sizes when the smallest tile is not unique. Each verdict names the
// branch that fired so reports can be audited case by case.
//
// The rule functions take raw count/size tuples as well as signatures: several
// branches are about tuples that admit no integer a at all, and those can only
// be exercised below the Signature level.

#include <span>
#include <string_view>
#include <vector>

#include "mtp/signature.hpp"

namespace mtp {

enum class VerdictTag {
  ConjecturedFamily,
  RefutedByDelta,
  NoIntegerSolution,
  RefutedByCaseRule,
  Candidate,
};

inline constexpr VerdictTag kAllVerdictTags[] = {
    VerdictTag::ConjecturedFamily, VerdictTag::RefutedByDelta, VerdictTag::NoIntegerSolution,
    VerdictTag::RefutedByCaseRule, VerdictTag::Candidate,
};

[[nodiscard]] std::string_view to_string(VerdictTag tag) noexcept;

struct Verdict {
  VerdictTag tag = VerdictTag::Candidate;
  std::string_view reason;  // points to static storage

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Every reason the two-size / three-size / four-plus rules can return, in
/// decision-tree order.
[[nodiscard]] std::span<const std::string_view> two_size_branches() noexcept;
[[nodiscard]] std::span<const std::string_view> three_size_branches() noexcept;
[[nodiscard]] std::span<const std::string_view> many_size_branches() noexcept;

/// n1 (m-1)^2 - m^2 >= n1. Always true when n1 >= 2 and m >= 4.
[[nodiscard]] bool lemma_sq(const ExactInt& n1, const ExactInt& m);

/// n1 tiles of size 1 and n2 tiles of size m2 (m2 >= 2). k comes from
/// n1 + n2 = k^2 + 3; throws mtp::Error(NoK) when there is no such k >= 2.
struct TwoSizeTuple {
  ExactInt n1;
  ExactInt n2;
  ExactInt m2;
};

/// Sizes 1 < m2 < m3 with counts n1, n2, n3.
struct ThreeSizeTuple {
  ExactInt n1;
  ExactInt n2;
  ExactInt n3;
  ExactInt m2;
  ExactInt m3;
};

[[nodiscard]] Verdict two_size_rule(const TwoSizeTuple& t);
[[nodiscard]] Verdict three_size_rule(const ThreeSizeTuple& t);

/// Throws NotTwoSize or NoK.
[[nodiscard]] Verdict classify_two_size(const Signature& sig);
/// Throws NotThreeSize or NoK. n1 == 1 yields Candidate.
[[nodiscard]] Verdict classify_three_size(const Signature& sig);
/// Throws TooFewSizes or NoK. n1 == 1 yields Candidate.
[[nodiscard]] Verdict classify_many_size(const Signature& sig);

/// Dispatches on the class count. A single class can never hold k^2+3 tiles
/// (a^2 - k^2 = 3 has no solution with k >= 2), which yields NoIntegerSolution.
[[nodiscard]] Verdict classify(const Signature& sig);

/// classify(), except that a Candidate with delta >= 0 becomes RefutedByDelta:
/// the delta bound needs no hypothesis on n1.
[[nodiscard]] Verdict assess(const Signature& sig);

/// Splits delta into per-class terms A_2..A_L for L >= 3 classes:
///   A_i = n_i [n_1 (m_i-1)^2 - m_i^2 + sum_{j>i} n_j (m_j-m_i)^2],
/// with -n_1 added to the last term. For three classes this is [A, B]; for four,
/// [A_2, A_3, A_4]. The terms always sum to delta(sig).
/// Throws UnsupportedClassCount for fewer than three classes.
[[nodiscard]] std::vector<ExactInt> decomposition_terms(const Signature& sig);

/// True iff sig could still be a counterexample: at least three classes, a
/// unique smallest tile, delta < 0, sigma > k + 1/k, and classify() leaves it
/// as Candidate. Throws NoK.
[[nodiscard]] bool theorem_filter(const Signature& sig);

}  // namespace mtp

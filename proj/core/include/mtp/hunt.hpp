#pragma once

// Counterexample hunt: enumerate every signature for one k, classify it, and
// try to realize the survivors geometrically. Any tiling beating k + 1/k must
// have at least three sizes and a unique smallest tile, so only those are
// handed to the tiler.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mtp/exact.hpp"
#include "mtp/lemmas.hpp"
#include "mtp/signature.hpp"
#include "mtp/tiler.hpp"

namespace mtp {

struct HuntOptions {
  std::int64_t k = 2;
  std::int64_t a_min = 2;
  std::int64_t a_max = 2;
  std::int64_t max_classes = 6;
  SearchBudget budget;
  RealizeOptions realize;
  unsigned jobs = 1;
};

struct HuntCandidate {
  Signature sig;
  ExactInt delta;
  Ratio sigma;
  RealizeStatus status;
  std::uint64_t nodes;
};

struct HuntReport {
  HuntOptions options;
  std::uint64_t signatures = 0;
  /// Indexed like kAllVerdictTags, using assess().
  std::array<std::uint64_t, std::size(kAllVerdictTags)> verdict_counts{};
  /// Signatures with sigma > k + 1/k, whatever their verdict.
  std::uint64_t exceeding = 0;
  /// Exactly the enumerated signatures passing theorem_filter, in enumeration order.
  std::vector<HuntCandidate> candidates;
  /// FNV-1a 64 over candidate_lines(), as 16 hex digits.
  std::string checksum;

  [[nodiscard]] std::uint64_t count(VerdictTag tag) const;
};

/// Throws mtp::Error(InvalidBounds) for k < 2 or bad bounds.
[[nodiscard]] HuntReport run_hunt(const HuntOptions& options);

/// Canonical one-line-per-candidate text the checksum is computed over:
/// "a|m:n,m:n|delta|sigma|status\n".
[[nodiscard]] std::string candidate_lines(const std::vector<HuntCandidate>& candidates);

[[nodiscard]] std::string fnv1a64_hex(std::string_view bytes);

}  // namespace mtp

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mtp/signature.hpp"

namespace mtp {

/// Either "== value" or ">= value".
struct CountFilter {
  std::int64_t value = 0;
  bool at_least = false;

  static CountFilter exactly(std::int64_t v) { return {v, false}; }
  static CountFilter minimum(std::int64_t v) { return {v, true}; }

  [[nodiscard]] bool accepts(std::int64_t x) const noexcept { return at_least ? x >= value : x == value; }
  friend bool operator==(const CountFilter&, const CountFilter&) = default;
};

struct EnumBounds {
  std::int64_t k = 2;
  std::int64_t a_min = 2;
  std::int64_t a_max = 2;
  std::int64_t max_classes = 1;
  std::optional<CountFilter> n1_filter;    // constraint on the smallest-class count n_1
  std::optional<CountFilter> size_filter;  // constraint on the number of classes

  /// Throws mtp::Error(InvalidBounds). a_max is capped at 2^20 and k at 2^10 so
  /// the search can run in 64-bit arithmetic.
  void validate() const;
};

inline constexpr std::int64_t kMaxEnumA = std::int64_t{1} << 20;
inline constexpr std::int64_t kMaxEnumK = std::int64_t{1} << 10;

using SignatureVisitor = std::function<void(const Signature&)>;

/// Streams every canonical signature with k^2+3 tiles and a in [a_min, a_max]
/// in ascending a, then lexicographic class-list order. With jobs > 1 the per-a
/// shards run concurrently; the visitor is still called from the calling thread,
/// in the same order.
void for_each_signature(const EnumBounds& bounds, const SignatureVisitor& visit, unsigned jobs = 1);

[[nodiscard]] std::vector<Signature> enumerate_signatures(const EnumBounds& bounds, unsigned jobs = 1);

[[nodiscard]] std::uint64_t count_signatures(const EnumBounds& bounds, unsigned jobs = 1);

/// One shard: canonical signatures of the a x a grid with exactly `tiles` tiles
/// and at most `max_classes` classes, in lexicographic order. No k constraint.
void for_each_grid_signature(std::int64_t a, std::int64_t tiles, std::int64_t max_classes,
                             const SignatureVisitor& visit);

}  // namespace mtp

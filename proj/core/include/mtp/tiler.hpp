#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mtp/signature.hpp"

namespace mtp {

struct Placement {
  std::int32_t x = 0;
  std::int32_t y = 0;
  std::int32_t m = 0;

  friend bool operator==(const Placement&, const Placement&) = default;
};

/// Squares on the a x a integer grid; (x, y) is the lower-left corner.
struct Layout {
  std::int32_t a = 0;
  std::vector<Placement> placements;
};

/// Node budget counts placement attempts; the time budget is wall clock.
struct SearchBudget {
  std::uint64_t max_nodes = 10'000'000;
  std::chrono::milliseconds max_time{10'000};
};

enum class RealizeStatus { Realized, Unrealizable, BudgetExhausted };

[[nodiscard]] std::string_view to_string(RealizeStatus status) noexcept;

struct RealizeResult {
  RealizeStatus status = RealizeStatus::BudgetExhausted;
  std::optional<Layout> layout;  // set iff Realized
  std::uint64_t nodes = 0;
};

struct RealizeOptions {
  /// Require the first-placed largest tile to sit in the lower half (2y <= a-m).
  /// Sound because a vertical flip maps tilings to tilings.
  bool symmetry_breaking = false;
};

inline constexpr std::int64_t kMaxGrid = std::int64_t{1} << 16;

/// Exhaustive backtracking: always covers the lowest, then leftmost, uncovered
/// cell, trying sizes in descending order. Unrealizable is returned only after
/// the whole search space has been explored. Throws mtp::Error(GridTooLarge)
/// for a > 2^16 and mtp::Error(NonPositive) for a non-positive budget.
[[nodiscard]] RealizeResult realize(const Signature& sig, const SearchBudget& budget, RealizeOptions options = {});

/// Independent witness check by per-cell coverage counts: every cell covered
/// exactly once, every square inside the grid, and the multiset of sizes equal
/// to sig's classes.
[[nodiscard]] bool verify_layout(const Layout& layout, const Signature& sig);

struct RealizeEntry {
  Signature sig;
  RealizeStatus status;
  std::uint64_t nodes;
};

struct TwoSizeN1Report {
  std::int64_t a_max = 0;
  std::vector<RealizeEntry> entries;  // ascending a, then m2

  [[nodiscard]] std::size_t count(RealizeStatus status) const;
};

/// Every two-class signature with a single unit tile and a <= a_max, i.e.
/// 1 + n2 m2^2 = a^2, with no k constraint.
[[nodiscard]] std::vector<Signature> two_size_n1_1_signatures(std::int64_t a_max);

/// Runs realize on each of two_size_n1_1_signatures(a_max). None should come
/// back Realized. Throws mtp::Error(InvalidBounds) when a_max < 2.
[[nodiscard]] TwoSizeN1Report check_two_size_n1_1(std::int64_t a_max, const SearchBudget& budget, unsigned jobs = 1);

/// Realizes each signature, possibly concurrently; results keep input order.
[[nodiscard]] std::vector<RealizeResult> realize_all(const std::vector<Signature>& sigs, const SearchBudget& budget,
                                                     RealizeOptions options = {}, unsigned jobs = 1);

}  // namespace mtp

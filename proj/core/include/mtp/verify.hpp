#pragma once

// Desk-scale verification of the whole case analysis. Every check is an exact
// property over a finite sweep; the report says what was examined so nothing
// is claimed beyond the bounds.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mtp/lemmas.hpp"
#include "mtp/signature.hpp"
#include "mtp/tiler.hpp"

namespace mtp {

enum class CheckStatus { Pass, Fail, Vacuous };

[[nodiscard]] std::string_view to_string(CheckStatus status) noexcept;

struct CheckResult {
  std::string id;
  std::string title;
  CheckStatus status = CheckStatus::Vacuous;
  std::uint64_t examined = 0;
  std::uint64_t violations = 0;
  std::string first_violation;
  /// Branch / category tallies in a fixed order; zero entries are kept so that
  /// branches nothing reached show up as vacuous.
  std::vector<std::pair<std::string, std::uint64_t>> counters;
};

// Stable check ids, in report order.
namespace check_id {
inline constexpr std::string_view kIdentities = "identities";
inline constexpr std::string_view kLemma1 = "lemma1";
inline constexpr std::string_view kLemmaSq = "lemma-sq";
inline constexpr std::string_view kLemmaN1 = "lemma-n1";
inline constexpr std::string_view kLemmaL2 = "lemma-l2";
inline constexpr std::string_view kLemmaL3 = "lemma-l3";
inline constexpr std::string_view kLemmaL4 = "lemma-l4";
inline constexpr std::string_view kDecomposition = "decomposition";
inline constexpr std::string_view kModRules = "mod-rules";
inline constexpr std::string_view kTheorem = "theorem";
}  // namespace check_id

using DeltaHook = std::function<ExactInt(const Signature&)>;

/// Accumulates every check over whatever signatures and tuples it is fed.
/// Not thread-safe; feed it from one thread.
class SweepAuditor {
 public:
  /// delta_hook, when set, replaces delta(sig) in every check that consumes it.
  explicit SweepAuditor(DeltaHook delta_hook = {});

  /// Runs all per-signature checks. k must match the tile count.
  void observe(const Signature& sig, const ExactInt& k);

  /// Exhaustive n1 (m-1)^2 - m^2 >= n1 grid over 1 <= n1, m <= limit.
  void audit_lemma_sq_grid(std::int64_t limit);

  /// Rule-level soundness over raw tuples with n1 + ... = k^2 + 3 and sizes up
  /// to size_max: NoIntegerSolution branches must never have a square area,
  /// RefutedByDelta branches must have delta >= 0.
  void audit_rule_tuples(std::int64_t k_min, std::int64_t k_max, std::int64_t size_max);

  /// Realizes every two-size n1 = 1 signature with a <= a_max.
  void audit_two_size_n1_1(std::int64_t a_max, const SearchBudget& budget, unsigned jobs);

  /// Resolves the geometric checks deferred by observe() and returns the
  /// results in report order.
  [[nodiscard]] std::vector<CheckResult> finish(const SearchBudget& budget, unsigned jobs);

  [[nodiscard]] std::uint64_t signatures() const noexcept { return signatures_; }
  [[nodiscard]] const std::map<std::size_t, std::uint64_t>& by_class_count() const noexcept { return by_class_count_; }
  /// Signatures with sigma > k + 1/k, in observation order.
  [[nodiscard]] const std::vector<Signature>& exceeding() const noexcept { return exceeding_; }
  /// Signatures with sigma == k + 1/k, in observation order.
  [[nodiscard]] const std::vector<Signature>& attaining() const noexcept { return attaining_; }

 private:
  struct Tally {
    std::string id;
    std::string title;
    std::uint64_t examined = 0;
    std::uint64_t violations = 0;
    std::string first_violation;
    std::vector<std::pair<std::string, std::uint64_t>> counters;

    void count(std::string_view key, std::uint64_t by = 1);
    void fail(const std::string& what);
  };

  Tally& tally(std::string_view id);
  void observe_two_size(const Signature& sig, const Verdict& v, const ExactInt& k, const ExactInt& d, int cmp);
  void observe_three_size(const Signature& sig, const Verdict& v, const ExactInt& d);
  void observe_many_size(const Signature& sig, const Verdict& v, const ExactInt& d);
  void observe_mod_shapes(const Signature& sig, const Verdict& v);

  DeltaHook delta_hook_;
  std::vector<Tally> tallies_;
  std::uint64_t signatures_ = 0;
  std::map<std::size_t, std::uint64_t> by_class_count_;
  std::vector<Signature> exceeding_;
  std::vector<Signature> attaining_;
  std::vector<Signature> deferred_two_size_n1_;  // RefutedByCaseRule verdicts awaiting the tiler
  std::vector<Signature> deferred_exceeders_;    // two-size n1 = 1 signatures above k + 1/k
};

struct VerifyOptions {
  std::int64_t k_min = 2;
  std::int64_t k_max = 4;
  std::int64_t a_min = 2;
  std::int64_t a_max = 30;
  std::int64_t max_classes = 6;
  std::int64_t lemma_n1_a_max = 0;  // 0: same as a_max
  std::int64_t rule_size_max = 0;   // 0: same as a_max
  std::int64_t sq_grid = 64;
  SearchBudget budget;
  unsigned jobs = 1;
  DeltaHook delta_hook;
};

struct VerifyReport {
  VerifyOptions options;
  std::uint64_t signatures = 0;
  std::map<std::size_t, std::uint64_t> by_class_count;
  std::vector<Signature> exceeding;
  std::vector<CheckResult> checks;

  [[nodiscard]] bool passed() const;
  /// Throws std::out_of_range for an unknown id.
  [[nodiscard]] const CheckResult& check(std::string_view id) const;
};

/// Throws mtp::Error(InvalidBounds) on bad options.
[[nodiscard]] VerifyReport run_verification(const VerifyOptions& options);

/// The two-size conjectured family {a = 2k, (1,4), (2,k^2-1)}.
[[nodiscard]] Signature conjectured_family(const ExactInt& k);

}  // namespace mtp

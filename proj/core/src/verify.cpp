#include "mtp/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "mtp/enumerate.hpp"
#include "mtp/error.hpp"
#include "mtp/lemmas.hpp"

namespace mtp {

namespace {

enum Slot : std::size_t {
  kIdentities,
  kLemma1,
  kLemmaSq,
  kLemmaN1,
  kLemmaL2,
  kLemmaL3,
  kLemmaL4,
  kDecomposition,
  kModRules,
  kTheorem,
  kSlotCount,
};

struct SlotInfo {
  std::string_view id;
  std::string_view title;
};

constexpr SlotInfo kSlots[kSlotCount] = {
    {check_id::kIdentities, "sigma^2 + gamma = N, a^2 gamma - a^2 = delta, two-size closed forms"},
    {check_id::kLemma1, "delta >= 0 implies sigma < k + 1/k"},
    {check_id::kLemmaSq, "n1 (m-1)^2 - m^2 >= n1 for n1 >= 2, m >= 4"},
    {check_id::kLemmaN1, "two sizes with a unique unit tile cannot be tiled"},
    {check_id::kLemmaL2, "two sizes: only n1 = 4, m2 = 2 reaches k + 1/k"},
    {check_id::kLemmaL3, "three sizes, n1 >= 2: delta >= 0"},
    {check_id::kLemmaL4, "four or more sizes, n1 >= 2: every decomposition term >= 0"},
    {check_id::kDecomposition, "decomposition terms sum to delta"},
    {check_id::kModRules, "no-integer-solution branches never meet a real signature"},
    {check_id::kTheorem, "sigma > k + 1/k needs three or more sizes and n1 = 1"},
};

// Tuple shapes the no-integer-solution branches claim are empty.
constexpr std::string_view kShapeTwoM3N1Is2 = "two sizes, m2=3, n1=2";
constexpr std::string_view kShapeTwoM2N2Is1 = "two sizes, m2=2, n2=1";
constexpr std::string_view kShapeTwoM2N2Is2 = "two sizes, m2=2, n2=2, k!=4";
constexpr std::string_view kShapeTwoM2N1Is2Or3 = "two sizes, m2=2, n2>=3, n1 in {2,3}";
constexpr std::string_view kShapeThreeN2Is1 = "three sizes (1,2,3), n1=2, n2=1";
constexpr std::string_view kShapeThreeN2Is2N3Is3 = "three sizes (1,2,3), n1=2, n2=2, n3=3";
constexpr std::string_view kShapeThreeN3Is1 = "three sizes (1,2,3), n1=2, n3=1";
constexpr std::string_view kShapeThreeN3Is2 = "three sizes (1,2,3), n1=2, n3=2";

constexpr std::string_view kShapes[] = {
    kShapeTwoM3N1Is2, kShapeTwoM2N2Is1, kShapeTwoM2N2Is2, kShapeTwoM2N1Is2Or3,
    kShapeThreeN2Is1, kShapeThreeN2Is2N3Is3, kShapeThreeN3Is1, kShapeThreeN3Is2,
};

const ExactInt kOne(1);
const ExactInt kTwo(2);
const ExactInt kThree(3);
const ExactInt kFour(4);

std::string describe(const Signature& sig, std::string_view what) { return sig.str() + ": " + std::string(what); }

}  // namespace

std::string_view to_string(CheckStatus status) noexcept {
  switch (status) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Vacuous: return "VACUOUS";
  }
  return "UNKNOWN";
}

Signature conjectured_family(const ExactInt& k) {
  return make_signature(kTwo * k, {{kOne, kFour}, {kTwo, k * k - kOne}});
}

void SweepAuditor::Tally::count(std::string_view key, std::uint64_t by) {
  for (auto& [name, value] : counters) {
    if (name == key) {
      value += by;
      return;
    }
  }
  counters.emplace_back(std::string(key), by);
}

void SweepAuditor::Tally::fail(const std::string& what) {
  if (violations++ == 0) first_violation = what;
}

SweepAuditor::SweepAuditor(DeltaHook delta_hook) : delta_hook_(std::move(delta_hook)) {
  for (const auto& s : kSlots) tallies_.push_back({std::string(s.id), std::string(s.title), 0, 0, {}, {}});

  auto& l2 = tallies_[kLemmaL2];
  for (auto r : two_size_branches()) l2.count(r, 0);
  auto& l3 = tallies_[kLemmaL3];
  for (auto r : three_size_branches()) l3.count(r, 0);
  auto& l4 = tallies_[kLemmaL4];
  for (auto r : many_size_branches()) l4.count(r, 0);
  for (auto s : kShapes) tallies_[kModRules].count(s, 0);
  auto& th = tallies_[kTheorem];
  th.count("three or more sizes, n1=1", 0);
  th.count("two sizes, n1=1 (needs the tiler)", 0);
}

SweepAuditor::Tally& SweepAuditor::tally(std::string_view id) {
  for (auto& t : tallies_) {
    if (t.id == id) return t;
  }
  throw std::out_of_range("unknown check id " + std::string(id));
}

void SweepAuditor::observe(const Signature& sig, const ExactInt& k) {
  ++signatures_;
  ++by_class_count_[sig.class_count()];

  const ExactInt n = tile_count(sig);
  const ExactInt a2 = square(sig.a());
  const ExactInt d = delta_hook_ ? delta_hook_(sig) : delta(sig);
  const ExactInt s = side_sum(sig);
  const int cmp = (k * s - (k * k + kOne) * sig.a()).sign();

  {
    auto& t = tallies_[kIdentities];
    ++t.examined;
    const Ratio sg(s, sig.a());
    const Ratio gm = gamma(sig);
    if (n != k * k + kThree) {
      t.fail(describe(sig, "tile count is not k^2+3"));
    } else if (area_term(sig) != a2) {
      t.fail(describe(sig, "sum n m^2 != a^2"));
    } else if (sg * sg + gm != Ratio(n)) {
      t.fail(describe(sig, "sigma^2 + gamma != N"));
    } else if (gm * Ratio(a2) - Ratio(a2) != Ratio(d)) {
      t.fail(describe(sig, "a^2 gamma - a^2 != delta (delta=" + d.str() + ")"));
    } else if (sig.class_count() == 2) {
      // delta = n1 n2 (m2-1)^2 - a^2 and a^2 = n1 + n2 m2^2
      const auto& c1 = sig[0];
      const auto& c2 = sig[1];
      const ExactInt &n1 = c1.n, &n2 = c2.n, &m2 = c2.m;
      bool ok = d == n2 * (n1 * square(m2 - kOne) - square(m2)) - n1 && a2 == n1 + n2 * square(m2);
      if (m2 == kTwo) ok = ok && d == (n1 - kFour) * (n2 - kOne) - kFour;
      if (m2 == kThree) {
        ok = ok && d == n2 * (kFour * n1 - ExactInt(9)) - n1 && d == n1 * (kFour * n2 - kOne) - ExactInt(9) * n2;
      }
      if (!ok) t.fail(describe(sig, "two-size closed form disagrees (delta=" + d.str() + ")"));
    }
  }

  {
    auto& t = tallies_[kLemma1];
    ++t.examined;
    if (d.sign() >= 0 && cmp >= 0) {
      t.fail(describe(sig, "delta=" + d.str() + " >= 0 but sigma=" + Ratio(s, sig.a()).str() + " >= k + 1/k"));
    }
  }

  if (cmp > 0) exceeding_.push_back(sig);
  if (cmp == 0) attaining_.push_back(sig);

  const ExactInt& n1 = sig[0].n;
  if (n1 >= kTwo) {
    auto& t = tallies_[kLemmaSq];
    for (const auto& c : sig.classes()) {
      if (c.m < kFour) continue;
      ++t.examined;
      if (!lemma_sq(n1, c.m)) t.fail(describe(sig, "lemma_sq fails at m=" + c.m.str()));
    }
  }

  const Verdict v = classify(sig);
  switch (sig.class_count()) {
    case 1: break;
    case 2: observe_two_size(sig, v, k, d, cmp); break;
    case 3: observe_three_size(sig, v, d); break;
    default: observe_many_size(sig, v, d); break;
  }

  if (sig.class_count() >= 3) {
    auto& t = tallies_[kDecomposition];
    ++t.examined;
    ExactInt sum;
    for (const auto& term : decomposition_terms(sig)) sum += term;
    if (sum != d) t.fail(describe(sig, "terms sum to " + sum.str() + ", delta=" + d.str()));
  }

  observe_mod_shapes(sig, v);

  if (cmp > 0) {
    auto& t = tallies_[kTheorem];
    ++t.examined;
    if (n1 == kOne && sig.class_count() >= 3) {
      t.count("three or more sizes, n1=1");
    } else if (n1 == kOne && sig.class_count() == 2) {
      t.count("two sizes, n1=1 (needs the tiler)");
      deferred_exceeders_.push_back(sig);
    } else {
      t.fail(describe(sig, "exceeds k + 1/k with " + std::to_string(sig.class_count()) + " sizes, n1=" + n1.str()));
    }
  }
}

void SweepAuditor::observe_two_size(const Signature& sig, const Verdict& v, const ExactInt& k, const ExactInt& d,
                                    int cmp) {
  auto& t = tallies_[kLemmaL2];
  ++t.examined;
  t.count(v.reason);
  switch (v.tag) {
    case VerdictTag::RefutedByDelta:
      if (d.sign() < 0) t.fail(describe(sig, std::string(v.reason) + " but delta=" + d.str()));
      break;
    case VerdictTag::ConjecturedFamily:
      if (sig != conjectured_family(k) || cmp != 0) t.fail(describe(sig, "family verdict on a non-family signature"));
      break;
    case VerdictTag::RefutedByCaseRule: deferred_two_size_n1_.push_back(sig); break;
    case VerdictTag::NoIntegerSolution:
    case VerdictTag::Candidate: t.fail(describe(sig, std::string(to_string(v.tag)) + ": " + std::string(v.reason))); break;
  }
  if (cmp >= 0 && v.tag != VerdictTag::ConjecturedFamily && sig[0].n != kOne) {
    t.fail(describe(sig, "reaches k + 1/k outside the family"));
  }
}

void SweepAuditor::observe_three_size(const Signature& sig, const Verdict& v, const ExactInt& d) {
  auto& t = tallies_[kLemmaL3];
  t.count(v.reason);
  if (sig[0].n == kOne) return;
  ++t.examined;
  if (v.tag != VerdictTag::RefutedByDelta) {
    t.fail(describe(sig, std::string(to_string(v.tag)) + ": " + std::string(v.reason)));
  }
  if (d.sign() < 0) t.fail(describe(sig, "delta=" + d.str() + " < 0 with n1 >= 2"));
}

void SweepAuditor::observe_many_size(const Signature& sig, const Verdict& v, const ExactInt& d) {
  auto& t = tallies_[kLemmaL4];
  t.count(v.reason);
  if (sig[0].n == kOne) return;
  ++t.examined;
  if (v.tag != VerdictTag::RefutedByDelta) {
    t.fail(describe(sig, std::string(to_string(v.tag)) + ": " + std::string(v.reason)));
  }
  if (d.sign() < 0) t.fail(describe(sig, "delta=" + d.str() + " < 0 with n1 >= 2"));
  const auto terms = decomposition_terms(sig);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].sign() < 0) {
      t.fail(describe(sig, "term A_" + std::to_string(i + 2) + "=" + terms[i].str() + " < 0"));
      break;
    }
  }
}

void SweepAuditor::observe_mod_shapes(const Signature& sig, const Verdict& v) {
  auto& t = tallies_[kModRules];
  ++t.examined;
  if (v.tag == VerdictTag::NoIntegerSolution) {
    t.fail(describe(sig, "NoIntegerSolution: " + std::string(v.reason)));
  }

  auto hit = [&](std::string_view shape) {
    t.count(shape);
    t.fail(describe(sig, "matches " + std::string(shape)));
  };
  if (sig.class_count() == 2) {
    const auto& [m2, n2] = sig[1];
    const ExactInt& n1 = sig[0].n;
    if (m2 == kThree && n1 == kTwo) hit(kShapeTwoM3N1Is2);
    if (m2 == kTwo && n2 == kOne) hit(kShapeTwoM2N2Is1);
    if (m2 == kTwo && n2 == kTwo && n1 + n2 != ExactInt(19)) hit(kShapeTwoM2N2Is2);
    if (m2 == kTwo && n2 >= kThree && (n1 == kTwo || n1 == kThree)) hit(kShapeTwoM2N1Is2Or3);
  } else if (sig.class_count() == 3 && sig[0].n == kTwo && sig[1].m == kTwo && sig[2].m == kThree) {
    const ExactInt& n2 = sig[1].n;
    const ExactInt& n3 = sig[2].n;
    if (n2 == kOne) hit(kShapeThreeN2Is1);
    if (n2 == kTwo && n3 == kThree) hit(kShapeThreeN2Is2N3Is3);
    if (n3 == kOne) hit(kShapeThreeN3Is1);
    if (n3 == kTwo) hit(kShapeThreeN3Is2);
  }
}

void SweepAuditor::audit_lemma_sq_grid(std::int64_t limit) {
  auto& t = tallies_[kLemmaSq];
  t.count("grid: inside hypothesis", 0);
  t.count("grid: outside hypothesis, holds", 0);
  t.count("grid: outside hypothesis, fails", 0);
  for (std::int64_t n1 = 1; n1 <= limit; ++n1) {
    for (std::int64_t m = 1; m <= limit; ++m) {
      const bool holds = lemma_sq(ExactInt(n1), ExactInt(m));
      const bool hyp = n1 >= 2 && m >= 4;
      // independent restatement in plain 64-bit arithmetic
      const bool direct = n1 * (m - 1) * (m - 1) - m * m >= n1;
      ++t.examined;
      if (holds != direct) {
        t.fail("lemma_sq(" + std::to_string(n1) + "," + std::to_string(m) + ") disagrees with direct evaluation");
      }
      if (hyp) {
        t.count("grid: inside hypothesis");
        if (!holds) t.fail("lemma_sq(" + std::to_string(n1) + "," + std::to_string(m) + ") is false");
      } else {
        t.count(holds ? "grid: outside hypothesis, holds" : "grid: outside hypothesis, fails");
      }
    }
  }
}

void SweepAuditor::audit_rule_tuples(std::int64_t k_min, std::int64_t k_max, std::int64_t size_max) {
  auto& t = tallies_[kModRules];
  t.count("tuples: two sizes", 0);
  t.count("tuples: three sizes", 0);
  t.count("tuples: no-integer branches", 0);

  auto check = [&](const Verdict& v, const std::vector<SizeClass>& cls, const ExactInt& k, auto label) {
    const ExactInt area = area_term(cls);
    if (v.tag == VerdictTag::NoIntegerSolution) {
      t.count("tuples: no-integer branches");
      if (is_perfect_square(area)) {
        t.fail(label() + ": " + std::string(v.reason) + " but area " + area.str() + " is a square");
      }
    } else if (v.tag == VerdictTag::RefutedByDelta) {
      const ExactInt d = pair_spread(cls) - area;
      if (d.sign() < 0) t.fail(label() + ": " + std::string(v.reason) + " but delta=" + d.str());
    } else if (v.tag == VerdictTag::ConjecturedFamily) {
      if (area != square(kTwo * k)) t.fail(label() + ": family verdict with area " + area.str());
    }
  };

  for (std::int64_t k = k_min; k <= k_max; ++k) {
    const std::int64_t total = k * k + 3;
    const ExactInt kk(k);
    for (std::int64_t n1 = 1; n1 < total; ++n1) {
      for (std::int64_t m2 = 2; m2 <= size_max; ++m2) {
        const std::int64_t n2 = total - n1;
        ++t.examined;
        t.count("tuples: two sizes");
        const Verdict v = two_size_rule({ExactInt(n1), ExactInt(n2), ExactInt(m2)});
        check(v, {{kOne, ExactInt(n1)}, {ExactInt(m2), ExactInt(n2)}}, kk, [&] {
          return "tuple n=(" + std::to_string(n1) + "," + std::to_string(n2) + ") m2=" + std::to_string(m2);
        });
      }
    }
    for (std::int64_t n1 = 1; n1 < total - 1; ++n1) {
      for (std::int64_t n2 = 1; n1 + n2 < total; ++n2) {
        const std::int64_t n3 = total - n1 - n2;
        for (std::int64_t m2 = 2; m2 <= size_max; ++m2) {
          for (std::int64_t m3 = m2 + 1; m3 <= size_max; ++m3) {
            ++t.examined;
            t.count("tuples: three sizes");
            const Verdict v =
                three_size_rule({ExactInt(n1), ExactInt(n2), ExactInt(n3), ExactInt(m2), ExactInt(m3)});
            if (v.tag == VerdictTag::Candidate || v.tag == VerdictTag::RefutedByCaseRule) continue;
            check(v, {{kOne, ExactInt(n1)}, {ExactInt(m2), ExactInt(n2)}, {ExactInt(m3), ExactInt(n3)}}, kk, [&] {
              return "tuple n=(" + std::to_string(n1) + "," + std::to_string(n2) + "," + std::to_string(n3) +
                     ") m=(1," + std::to_string(m2) + "," + std::to_string(m3) + ")";
            });
          }
        }
      }
    }
  }
}

void SweepAuditor::audit_two_size_n1_1(std::int64_t a_max, const SearchBudget& budget, unsigned jobs) {
  auto& t = tallies_[kLemmaN1];
  t.count("grid sweep: Unrealizable", 0);
  t.count("grid sweep: BudgetExhausted", 0);
  const auto report = check_two_size_n1_1(a_max, budget, jobs);
  for (const auto& e : report.entries) {
    ++t.examined;
    switch (e.status) {
      case RealizeStatus::Realized: t.fail(describe(e.sig, "the tiler found a tiling")); break;
      case RealizeStatus::Unrealizable: t.count("grid sweep: Unrealizable"); break;
      case RealizeStatus::BudgetExhausted: t.count("grid sweep: BudgetExhausted"); break;
    }
  }
}

std::vector<CheckResult> SweepAuditor::finish(const SearchBudget& budget, unsigned jobs) {
  {
    auto& t = tallies_[kLemmaN1];
    t.count("k-constrained: Unrealizable", 0);
    t.count("k-constrained: BudgetExhausted", 0);
    const auto results = realize_all(deferred_two_size_n1_, budget, {}, jobs);
    for (std::size_t i = 0; i < results.size(); ++i) {
      ++t.examined;
      switch (results[i].status) {
        case RealizeStatus::Realized: t.fail(describe(deferred_two_size_n1_[i], "the tiler found a tiling")); break;
        case RealizeStatus::Unrealizable: t.count("k-constrained: Unrealizable"); break;
        case RealizeStatus::BudgetExhausted: t.count("k-constrained: BudgetExhausted"); break;
      }
    }
    deferred_two_size_n1_.clear();
  }
  {
    // A two-size exceeder is only excluded once the tiler proves it impossible.
    auto& t = tallies_[kTheorem];
    const auto results = realize_all(deferred_exceeders_, budget, {}, jobs);
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (results[i].status != RealizeStatus::Unrealizable) {
        t.fail(describe(deferred_exceeders_[i], "two-size exceeder is " + std::string(to_string(results[i].status))));
      }
    }
    deferred_exceeders_.clear();
  }

  for (const auto& [classes, n] : by_class_count_) {
    if (classes >= 4) tallies_[kLemmaL4].count(std::to_string(classes) + " sizes", n);
  }

  std::vector<CheckResult> out;
  for (const auto& t : tallies_) {
    CheckResult r{t.id, t.title, CheckStatus::Vacuous, t.examined, t.violations, t.first_violation, t.counters};
    if (t.violations > 0) {
      r.status = CheckStatus::Fail;
    } else if (t.examined > 0) {
      r.status = CheckStatus::Pass;
    }
    out.push_back(std::move(r));
  }
  return out;
}

bool VerifyReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

const CheckResult& VerifyReport::check(std::string_view id) const {
  for (const auto& c : checks) {
    if (c.id == id) return c;
  }
  throw std::out_of_range("unknown check id " + std::string(id));
}

VerifyReport run_verification(const VerifyOptions& options) {
  if (options.k_min < 2 || options.k_max < options.k_min) {
    throw Error(ErrorCode::InvalidBounds, "need 2 <= k_min <= k_max");
  }
  if (options.sq_grid < 0 || options.lemma_n1_a_max < 0 || options.rule_size_max < 0) {
    throw Error(ErrorCode::InvalidBounds, "grid limits must be non-negative");
  }
  for (std::int64_t k = options.k_min; k <= options.k_max; ++k) {
    EnumBounds{k, options.a_min, options.a_max, options.max_classes, std::nullopt, std::nullopt}.validate();
  }

  SweepAuditor auditor(options.delta_hook);
  for (std::int64_t k = options.k_min; k <= options.k_max; ++k) {
    const ExactInt kk(k);
    const EnumBounds bounds{k, options.a_min, options.a_max, options.max_classes, std::nullopt, std::nullopt};
    for_each_signature(bounds, [&](const Signature& sig) { auditor.observe(sig, kk); }, options.jobs);
  }
  auditor.audit_lemma_sq_grid(options.sq_grid);
  const std::int64_t size_max = options.rule_size_max > 0 ? options.rule_size_max : options.a_max;
  auditor.audit_rule_tuples(options.k_min, options.k_max, size_max);
  const std::int64_t n1_a_max = options.lemma_n1_a_max > 0 ? options.lemma_n1_a_max : options.a_max;
  if (n1_a_max >= 2) auditor.audit_two_size_n1_1(n1_a_max, options.budget, options.jobs);

  VerifyReport report;
  report.options = options;
  report.signatures = auditor.signatures();
  report.by_class_count = auditor.by_class_count();
  report.exceeding = auditor.exceeding();
  report.checks = auditor.finish(options.budget, options.jobs);
  return report;
}

}  // namespace mtp

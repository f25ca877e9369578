#include "mtp/lemmas.hpp"

#include "mtp/error.hpp"

namespace mtp {

namespace {

const ExactInt kOne(1);
const ExactInt kTwo(2);
const ExactInt kThree(3);
const ExactInt kFour(4);

ExactInt k_from_count(const ExactInt& tiles) {
  const ExactInt rest = tiles - kThree;
  if (rest < kFour || !is_perfect_square(rest)) {
    throw Error(ErrorCode::NoK, "tile count " + tiles.str() + " is not k^2+3 for any k >= 2");
  }
  return isqrt(rest);
}

namespace reason {
constexpr std::string_view kTwoN1One = "two sizes, n1=1: a full-height stack through the unit tile gives x2*m2 = y2*m2 + 1";
constexpr std::string_view kTwoM2AtLeast4 = "two sizes, m2>=4, n1>=2: n1(m2-1)^2-m2^2 >= n1, so delta >= 0";
constexpr std::string_view kTwoM2Is3N1AtLeast3 = "two sizes, m2=3, n1>=3: delta >= 3(n2-1) >= 0";
constexpr std::string_view kTwoM2Is3N1Is2 = "two sizes, m2=3, n1=2: 2+9*n2 = a^2 has no solution mod 9";
constexpr std::string_view kTwoN2Is1 = "two sizes, m2=2, n2=1: (a+k)(a-k) = 6";
constexpr std::string_view kTwoN2Is2K4 = "two sizes, m2=2, n2=2: (a+k)(a-k) = 9 gives a=5, k=4, n1=17, delta > 0";
constexpr std::string_view kTwoN2Is2Other = "two sizes, m2=2, n2=2: (a+k)(a-k) = 9 forces a=5, k=4";
constexpr std::string_view kTwoFamily = "two sizes, n1=4, m2=2: k x k grid with one cell split in four";
constexpr std::string_view kTwoN1Is2Or3 = "two sizes, m2=2, n2>=3, n1 in {2,3}: n1+4*n2 = a^2 has no solution mod 4";
constexpr std::string_view kTwoN1Is5 = "two sizes, m2=2, n1=5, k>=3: n2 = k^2-2 >= 7, so delta > 0";
constexpr std::string_view kTwoN1AtLeast6 = "two sizes, m2=2, n2>=3, n1>=6: delta >= 2*n1-12 >= 0";

constexpr std::string_view kThreeN1One = "three sizes, n1=1: outside the n1>=2 hypothesis";
constexpr std::string_view kThreeM2AtLeast4 = "three sizes, m2>=4: A, B >= 0 by the n1(m-1)^2-m^2 bound";
constexpr std::string_view kThreeM2Is3 = "three sizes, m2=3: B >= 0 and A >= n2[8-9+1] = 0";
constexpr std::string_view kThreeM3AtLeast4 = "three sizes, m2=2, m3>=4: B >= 0 and A >= n2[n1-4+4*n3] >= 0";
constexpr std::string_view kThreeN1AtLeast3 = "three sizes, m2=2, m3=3, n1>=3: delta >= (n2+3)(n3-1) >= 0";
constexpr std::string_view kThreeN2Is1 = "three sizes, m2=2, m3=3, n1=2, n2=1: a^2 = 6+9*n3 has no solution mod 9";
constexpr std::string_view kThreeN2Is2N3Is3 = "three sizes, m2=2, m3=3, n1=2, n2=2, n3=3: a^2 = 37";
constexpr std::string_view kThreeN2Is2N3AtLeast8 = "three sizes, m2=2, m3=3, n1=2, n2=2, n3>=8: delta > 0";
constexpr std::string_view kThreeN2Is2Other = "three sizes, m2=2, m3=3, n1=2, n2=2: n3 = k^2-1 is 3 or >= 8";
constexpr std::string_view kThreeN3Is1 = "three sizes, m2=2, m3=3, n1=2, n3=1: a^2 = 11+4*n2 has no solution mod 4";
constexpr std::string_view kThreeN3Is2 = "three sizes, m2=2, m3=3, n1=2, n3=2: (b-k)(b+k) = 4 with a = 2b";
constexpr std::string_view kThreeN3Is3N2AtLeast7 = "three sizes, m2=2, m3=3, n1=2, n3=3, n2>=7: delta > 0";
constexpr std::string_view kThreeN3Is3Other = "three sizes, m2=2, m3=3, n1=2, n3=3: n2 = k^2-2 is 2 or >= 7";
constexpr std::string_view kThreeRest = "three sizes, m2=2, m3=3, n1=2, n2>=3, n3>=4: delta = (n2-1)(n3-2)-4 >= 0";

constexpr std::string_view kManyN1One = "four or more sizes, n1=1: outside the n1>=2 hypothesis";
constexpr std::string_view kManyN1AtLeast2 = "four or more sizes, n1>=2: every decomposition term is >= 0";

constexpr std::string_view kOneSize = "one size: a^2 - k^2 = 3";
constexpr std::string_view kDeltaNonNegative = "delta >= 0 (holds for any n1)";
}  // namespace reason

constexpr std::string_view kTwoBranches[] = {
    reason::kTwoN1One,      reason::kTwoM2AtLeast4, reason::kTwoM2Is3N1AtLeast3, reason::kTwoM2Is3N1Is2,
    reason::kTwoN2Is1,      reason::kTwoN2Is2K4,    reason::kTwoN2Is2Other,      reason::kTwoFamily,
    reason::kTwoN1Is2Or3,   reason::kTwoN1Is5,      reason::kTwoN1AtLeast6,
};

constexpr std::string_view kThreeBranches[] = {
    reason::kThreeN1One,       reason::kThreeM2AtLeast4,      reason::kThreeM2Is3,
    reason::kThreeM3AtLeast4,  reason::kThreeN1AtLeast3,      reason::kThreeN2Is1,
    reason::kThreeN2Is2N3Is3,  reason::kThreeN2Is2N3AtLeast8, reason::kThreeN2Is2Other,
    reason::kThreeN3Is1,       reason::kThreeN3Is2,           reason::kThreeN3Is3N2AtLeast7,
    reason::kThreeN3Is3Other,  reason::kThreeRest,
};

constexpr std::string_view kManyBranches[] = {reason::kManyN1One, reason::kManyN1AtLeast2};

Verdict refuted(std::string_view why) { return {VerdictTag::RefutedByDelta, why}; }
Verdict impossible(std::string_view why) { return {VerdictTag::NoIntegerSolution, why}; }

}  // namespace

std::string_view to_string(VerdictTag tag) noexcept {
  switch (tag) {
    case VerdictTag::ConjecturedFamily: return "ConjecturedFamily";
    case VerdictTag::RefutedByDelta: return "RefutedByDelta";
    case VerdictTag::NoIntegerSolution: return "NoIntegerSolution";
    case VerdictTag::RefutedByCaseRule: return "RefutedByCaseRule";
    case VerdictTag::Candidate: return "Candidate";
  }
  return "Unknown";
}

bool lemma_sq(const ExactInt& n1, const ExactInt& m) { return n1 * square(m - kOne) - square(m) >= n1; }

std::span<const std::string_view> two_size_branches() noexcept { return kTwoBranches; }
std::span<const std::string_view> three_size_branches() noexcept { return kThreeBranches; }
std::span<const std::string_view> many_size_branches() noexcept { return kManyBranches; }

Verdict two_size_rule(const TwoSizeTuple& t) {
  const auto& [n1, n2, m2] = t;
  if (n1 < kOne || n2 < kOne || m2 < kTwo) {
    throw Error(ErrorCode::NonPositive, "two-size tuple needs n1, n2 >= 1 and m2 >= 2");
  }
  const ExactInt k = k_from_count(n1 + n2);

  if (n1 == kOne) return {VerdictTag::RefutedByCaseRule, reason::kTwoN1One};
  if (m2 >= kFour) return refuted(reason::kTwoM2AtLeast4);
  if (m2 == kThree) {
    if (n1 >= kThree) return refuted(reason::kTwoM2Is3N1AtLeast3);
    return impossible(reason::kTwoM2Is3N1Is2);
  }
  // m2 == 2: delta = (n1-4)(n2-1) - 4
  if (n2 == kOne) return impossible(reason::kTwoN2Is1);
  if (n2 == kTwo) return k == kFour ? refuted(reason::kTwoN2Is2K4) : impossible(reason::kTwoN2Is2Other);
  if (n1 == kFour) return {VerdictTag::ConjecturedFamily, reason::kTwoFamily};
  if (n1 == kTwo || n1 == kThree) return impossible(reason::kTwoN1Is2Or3);
  if (n1 == ExactInt(5)) return refuted(reason::kTwoN1Is5);
  return refuted(reason::kTwoN1AtLeast6);
}

Verdict three_size_rule(const ThreeSizeTuple& t) {
  const auto& [n1, n2, n3, m2, m3] = t;
  if (n1 < kOne || n2 < kOne || n3 < kOne || m2 < kTwo || m3 <= m2) {
    throw Error(ErrorCode::NonPositive, "three-size tuple needs counts >= 1 and 1 < m2 < m3");
  }
  (void)k_from_count(n1 + n2 + n3);

  if (n1 == kOne) return {VerdictTag::Candidate, reason::kThreeN1One};
  if (m2 >= kFour) return refuted(reason::kThreeM2AtLeast4);
  if (m2 == kThree) return refuted(reason::kThreeM2Is3);
  if (m3 >= kFour) return refuted(reason::kThreeM3AtLeast4);

  // m2 == 2, m3 == 3
  if (n1 >= kThree) return refuted(reason::kThreeN1AtLeast3);
  // n1 == 2: delta = (n2-1)(n3-2) - 4
  if (n2 == kOne) return impossible(reason::kThreeN2Is1);
  if (n2 == kTwo) {
    if (n3 == kThree) return impossible(reason::kThreeN2Is2N3Is3);
    if (n3 >= ExactInt(8)) return refuted(reason::kThreeN2Is2N3AtLeast8);
    return impossible(reason::kThreeN2Is2Other);
  }
  if (n3 == kOne) return impossible(reason::kThreeN3Is1);
  if (n3 == kTwo) return impossible(reason::kThreeN3Is2);
  if (n3 == kThree) {
    if (n2 >= ExactInt(7)) return refuted(reason::kThreeN3Is3N2AtLeast7);
    return impossible(reason::kThreeN3Is3Other);
  }
  return refuted(reason::kThreeRest);
}

Verdict classify_two_size(const Signature& sig) {
  if (sig.class_count() != 2) {
    throw Error(ErrorCode::NotTwoSize, sig.str() + " has " + std::to_string(sig.class_count()) + " classes");
  }
  if (!k_of(sig)) throw Error(ErrorCode::NoK, sig.str() + " has no k");
  return two_size_rule({sig[0].n, sig[1].n, sig[1].m});
}

Verdict classify_three_size(const Signature& sig) {
  if (sig.class_count() != 3) {
    throw Error(ErrorCode::NotThreeSize, sig.str() + " has " + std::to_string(sig.class_count()) + " classes");
  }
  if (!k_of(sig)) throw Error(ErrorCode::NoK, sig.str() + " has no k");
  return three_size_rule({sig[0].n, sig[1].n, sig[2].n, sig[1].m, sig[2].m});
}

Verdict classify_many_size(const Signature& sig) {
  if (sig.class_count() < 4) {
    throw Error(ErrorCode::TooFewSizes, sig.str() + " has " + std::to_string(sig.class_count()) + " classes");
  }
  if (!k_of(sig)) throw Error(ErrorCode::NoK, sig.str() + " has no k");
  if (sig.smallest().n == kOne) return {VerdictTag::Candidate, reason::kManyN1One};
  return refuted(reason::kManyN1AtLeast2);
}

Verdict classify(const Signature& sig) {
  switch (sig.class_count()) {
    case 1:
      if (!k_of(sig)) throw Error(ErrorCode::NoK, sig.str() + " has no k");
      return impossible(reason::kOneSize);
    case 2: return classify_two_size(sig);
    case 3: return classify_three_size(sig);
    default: return classify_many_size(sig);
  }
}

Verdict assess(const Signature& sig) {
  Verdict v = classify(sig);
  if (v.tag == VerdictTag::Candidate && delta(sig).sign() >= 0) {
    return refuted(reason::kDeltaNonNegative);
  }
  return v;
}

std::vector<ExactInt> decomposition_terms(const Signature& sig) {
  const std::size_t count = sig.class_count();
  if (count < 3) {
    throw Error(ErrorCode::UnsupportedClassCount, "decomposition needs at least three classes, got " + std::to_string(count));
  }
  const ExactInt& n1 = sig[0].n;
  std::vector<ExactInt> terms;
  terms.reserve(count - 1);
  for (std::size_t i = 1; i < count; ++i) {
    const auto& [mi, ni] = sig[i];
    ExactInt inner = n1 * square(mi - kOne) - square(mi);
    for (std::size_t j = i + 1; j < count; ++j) inner += sig[j].n * square(sig[j].m - mi);
    terms.push_back(ni * inner);
  }
  terms.back() -= n1;
  return terms;
}

bool theorem_filter(const Signature& sig) {
  const auto k = k_of(sig);
  if (!k) throw Error(ErrorCode::NoK, sig.str() + " has no k");
  if (sig.class_count() < 3 || sig.smallest().n != kOne) return false;
  if (delta(sig).sign() >= 0 || !exceeds_conjecture(sig, *k)) return false;
  return classify(sig).tag == VerdictTag::Candidate;
}

}  // namespace mtp

#include "mtp/hunt.hpp"

#include <algorithm>
#include <cstdio>

#include "mtp/enumerate.hpp"

namespace mtp {

std::uint64_t HuntReport::count(VerdictTag tag) const {
  const auto* it = std::find(std::begin(kAllVerdictTags), std::end(kAllVerdictTags), tag);
  return verdict_counts[static_cast<std::size_t>(it - std::begin(kAllVerdictTags))];
}

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

std::string candidate_lines(const std::vector<HuntCandidate>& candidates) {
  std::string out;
  for (const auto& c : candidates) {
    out += c.sig.a().str();
    out += '|';
    bool first = true;
    for (const auto& cls : c.sig.classes()) {
      if (!first) out += ',';
      first = false;
      out += cls.m.str() + ":" + cls.n.str();
    }
    out += '|' + c.delta.str() + '|' + c.sigma.str() + '|';
    out += to_string(c.status);
    out += '\n';
  }
  return out;
}

HuntReport run_hunt(const HuntOptions& options) {
  EnumBounds bounds{options.k, options.a_min, options.a_max, options.max_classes, std::nullopt, std::nullopt};
  bounds.validate();

  HuntReport report;
  report.options = options;
  const ExactInt k(options.k);
  std::vector<Signature> survivors;

  for_each_signature(
      bounds,
      [&](const Signature& sig) {
        ++report.signatures;
        const Verdict v = assess(sig);
        const auto* it = std::find(std::begin(kAllVerdictTags), std::end(kAllVerdictTags), v.tag);
        ++report.verdict_counts[static_cast<std::size_t>(it - std::begin(kAllVerdictTags))];
        if (exceeds_conjecture(sig, k)) ++report.exceeding;
        if (theorem_filter(sig)) survivors.push_back(sig);
      },
      options.jobs);

  const auto results = realize_all(survivors, options.budget, options.realize, options.jobs);
  for (std::size_t i = 0; i < survivors.size(); ++i) {
    report.candidates.push_back(
        {survivors[i], delta(survivors[i]), sigma(survivors[i]), results[i].status, results[i].nodes});
  }
  report.checksum = fnv1a64_hex(candidate_lines(report.candidates));
  return report;
}

}  // namespace mtp

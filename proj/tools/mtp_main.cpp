// mtp: enumerate, verify, hunt, realize.
// Exit codes: 0 success, 1 property violation, 2 usage or validation error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mtp/enumerate.hpp"
#include "mtp/error.hpp"
#include "mtp/hunt.hpp"
#include "mtp/io.hpp"
#include "mtp/tiler.hpp"
#include "mtp/verify.hpp"
#include "mtp/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct BudgetFlags {
  std::uint64_t nodes = mtp::SearchBudget{}.max_nodes;
  double seconds = 10.0;

  void attach(CLI::App* app) {
    app->add_option("--budget-nodes", nodes, "Placement attempts per realization")->check(CLI::PositiveNumber);
    app->add_option("--budget-seconds", seconds, "Wall-clock seconds per realization")->check(CLI::PositiveNumber);
  }
  mtp::SearchBudget get() const {
    return {nodes, std::chrono::milliseconds(static_cast<std::int64_t>(seconds * 1000.0))};
  }
};

std::optional<mtp::CountFilter> parse_filter(const std::string& text, const char* flag) {
  if (text.empty()) return std::nullopt;
  std::string digits = text;
  bool at_least = false;
  if (digits.back() == '+') {
    at_least = true;
    digits.pop_back();
  }
  try {
    std::size_t used = 0;
    const long long v = std::stoll(digits, &used);
    if (used == digits.size() && v >= 1) return mtp::CountFilter{v, at_least};
  } catch (const std::exception&) {
  }
  throw CLI::ValidationError(flag, "expected N or N+ with N >= 1, got \"" + text + "\"");
}

void add_jobs(CLI::App* app, unsigned& jobs) {
  app->add_option("--jobs", jobs, "Worker threads (default: $MTP_JOBS or 1)")->envname("MTP_JOBS");
}

// CLI11 does not run validators on values taken from the environment.
void check_jobs(unsigned jobs) {
  if (jobs < 1 || jobs > 1024) throw CLI::ValidationError("--jobs", "must be in [1, 1024], got " + std::to_string(jobs));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact search and verification for minimal-tile-property square tilings", "mtp"};
  app.set_version_flag("--version", std::string(mtp::kToolName) + " " + std::string(mtp::kVersion));
  app.require_subcommand(1);
  // Keys live under a section per subcommand, e.g. [verify] a-max = 30.
  app.set_config("--config", "", "INI/TOML file with [enumerate], [verify], [hunt] or [realize] sections");

  // enumerate
  auto* en = app.add_subcommand("enumerate", "Stream every signature as JSON Lines");
  en->fallthrough();
  std::int64_t en_k = 2, en_a_min = 2, en_a_max = 2, en_max_classes = 6;
  std::string en_n1, en_classes;
  unsigned en_jobs = 1;
  en->add_option("--k", en_k, "k, with k^2+3 tiles")->required();
  en->add_option("--a-min", en_a_min)->capture_default_str();
  en->add_option("--a-max", en_a_max)->required();
  en->add_option("--max-classes", en_max_classes)->capture_default_str();
  en->add_option("--n1", en_n1, "Smallest-class count: N or N+");
  en->add_option("--classes", en_classes, "Class count: N or N+");
  add_jobs(en, en_jobs);

  // verify
  auto* ve = app.add_subcommand("verify", "Run every lemma check over a finite sweep");
  ve->fallthrough();
  mtp::VerifyOptions vo;
  BudgetFlags ve_budget;
  std::string ve_json;
  std::int64_t ve_inject = 0;
  ve->add_option("--k-min", vo.k_min)->capture_default_str();
  ve->add_option("--k-max", vo.k_max)->capture_default_str();
  ve->add_option("--a-min", vo.a_min)->capture_default_str();
  ve->add_option("--a-max", vo.a_max)->capture_default_str();
  ve->add_option("--max-classes", vo.max_classes)->capture_default_str();
  ve->add_option("--n1-a-max", vo.lemma_n1_a_max, "a bound for the two-size n1=1 tiler sweep (default: --a-max)");
  ve->add_option("--rule-size-max", vo.rule_size_max, "Largest size in the raw tuple sweep (default: --a-max)");
  ve->add_option("--json", ve_json, "Also write the JSON report here");
  ve->add_option("--inject-delta-offset", ve_inject)->group("");  // test hook
  ve_budget.attach(ve);
  add_jobs(ve, vo.jobs);

  // hunt
  auto* hu = app.add_subcommand("hunt", "Collect candidate counterexamples for one k and try to tile them");
  hu->fallthrough();
  mtp::HuntOptions ho;
  BudgetFlags hu_budget;
  hu->add_option("--k", ho.k)->required()->check(CLI::Range(std::int64_t{2}, mtp::kMaxEnumK));
  hu->add_option("--a-min", ho.a_min)->capture_default_str();
  hu->add_option("--a-max", ho.a_max)->required();
  hu->add_option("--max-classes", ho.max_classes)->capture_default_str();
  hu->add_flag("--symmetry", ho.realize.symmetry_breaking, "Fix the first large tile to the lower half");
  hu_budget.attach(hu);
  add_jobs(hu, ho.jobs);

  // realize
  auto* re = app.add_subcommand("realize", "Search for a tiling of one signature");
  re->fallthrough();
  std::string re_a, re_classes, re_svg;
  mtp::RealizeOptions ro;
  BudgetFlags re_budget;
  re->add_option("--a", re_a)->required();
  re->add_option("--classes", re_classes, "m:n,m:n,...")->required();
  re->add_option("--svg", re_svg, "Write the tiling as SVG when one is found");
  re->add_flag("--symmetry", ro.symmetry_breaking);
  re_budget.attach(re);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    for (unsigned j : {en_jobs, vo.jobs, ho.jobs}) check_jobs(j);
    if (*en) {
      mtp::EnumBounds b{en_k, en_a_min, en_a_max, en_max_classes, parse_filter(en_n1, "--n1"),
                        parse_filter(en_classes, "--classes")};
      b.validate();
      mtp::for_each_signature(b, [](const mtp::Signature& s) { std::cout << mtp::signature_record(s) << '\n'; },
                              en_jobs);
      std::cout.flush();
      return kExitOk;
    }
    if (*ve) {
      vo.budget = ve_budget.get();
      if (ve_inject != 0) {
        vo.delta_hook = [ve_inject](const mtp::Signature& s) { return mtp::delta(s) + mtp::ExactInt(ve_inject); };
      }
      const auto report = mtp::run_verification(vo);
      std::cout << mtp::verify_report_text(report);
      if (!ve_json.empty()) {
        std::ofstream out(ve_json, std::ios::binary);
        out << mtp::verify_report_json(report);
        if (!out) throw std::runtime_error("cannot write " + ve_json);
      }
      if (!report.passed()) {
        for (const auto& c : report.checks) {
          if (c.status == mtp::CheckStatus::Fail) std::cerr << "violation in " << c.id << ": " << c.first_violation << '\n';
        }
        return kExitViolation;
      }
      return kExitOk;
    }
    if (*hu) {
      ho.budget = hu_budget.get();
      const auto report = mtp::run_hunt(ho);
      std::cout << mtp::hunt_report_json(report);
      for (const auto& c : report.candidates) {
        if (c.status == mtp::RealizeStatus::Realized) {
          std::cerr << "tiling found for candidate " << c.sig << '\n';
          return kExitViolation;
        }
      }
      return kExitOk;
    }
    if (*re) {
      const auto sig = mtp::make_signature(mtp::ExactInt::parse(re_a), mtp::parse_class_list(re_classes));
      const auto result = mtp::realize(sig, re_budget.get(), ro);
      std::cout << mtp::to_string(result.status) << ' ' << sig << " nodes=" << result.nodes << '\n';
      if (result.layout && !re_svg.empty()) {
        std::ofstream out(re_svg, std::ios::binary);
        out << mtp::layout_svg(*result.layout);
        if (!out) throw std::runtime_error("cannot write " + re_svg);
      }
      return kExitOk;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "mtp: " << e.what() << '\n';
    return kExitUsage;
  } catch (const mtp::Error& e) {
    std::cerr << "mtp: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "mtp: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

#include "mtp/tiler.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "mtp/error.hpp"

namespace mtp {

namespace {

using Clock = std::chrono::steady_clock;

struct SizeSlot {
  std::int32_t m;
  std::int64_t remaining;
};

struct Frame {
  std::int32_t x;
  std::int32_t y;
  std::int32_t width;     // run of equal skyline height starting at x
  std::size_t next_slot;  // next size index to try
  std::size_t placed_slot;
  bool placed;
};

std::int32_t checked_grid(const Signature& sig) {
  const auto a = sig.a().to_int64();
  if (!a || *a > kMaxGrid) throw Error(ErrorCode::GridTooLarge, "realize supports a <= 65536, got " + sig.a().str());
  return static_cast<std::int32_t>(*a);
}

class SkylineSearch {
 public:
  SkylineSearch(const Signature& sig, const SearchBudget& budget, RealizeOptions options)
      : a_(checked_grid(sig)), heights_(static_cast<std::size_t>(a_), 0), budget_(budget), options_(options) {
    for (auto it = sig.classes().rbegin(); it != sig.classes().rend(); ++it) {
      slots_.push_back({static_cast<std::int32_t>(*it->m.to_int64()), *it->n.to_int64()});
    }
    largest_total_ = slots_.front().remaining;
  }

  RealizeResult run() {
    deadline_ = Clock::now() + budget_.max_time;
    RealizeResult result;
    if (!open_frame()) {
      result.status = RealizeStatus::Realized;
      result.layout = layout();
      return result;
    }
    while (!stack_.empty()) {
      Frame& top = stack_.back();
      if (top.placed) {
        undo(top);
        top.placed = false;
      }
      if (!advance(top)) {
        stack_.pop_back();
        continue;
      }
      if (++nodes_ > budget_.max_nodes || ((nodes_ & 1023U) == 0 && Clock::now() > deadline_)) {
        result.status = RealizeStatus::BudgetExhausted;
        result.nodes = nodes_;
        return result;
      }
      if (!open_frame()) {
        result.status = RealizeStatus::Realized;
        result.layout = layout();
        result.nodes = nodes_;
        return result;
      }
    }
    result.status = RealizeStatus::Unrealizable;
    result.nodes = nodes_;
    return result;
  }

 private:
  // Pushes a frame for the lowest-leftmost uncovered cell. Returns false when
  // the grid is full.
  bool open_frame() {
    std::int32_t x = 0;
    for (std::int32_t i = 1; i < a_; ++i) {
      if (heights_[i] < heights_[x]) x = i;
    }
    const std::int32_t y = heights_[x];
    if (y == a_) return false;
    std::int32_t w = 1;
    while (x + w < a_ && heights_[x + w] == y) ++w;
    stack_.push_back({x, y, w, 0, 0, false});
    return true;
  }

  std::int32_t smallest_available() const {
    for (auto it = slots_.rbegin(); it != slots_.rend(); ++it) {
      if (it->remaining > 0) return it->m;
    }
    return 0;
  }

  // Places the next admissible size at the frame's cell; false when exhausted.
  bool advance(Frame& f) {
    for (std::size_t i = f.next_slot; i < slots_.size(); ++i) {
      SizeSlot& slot = slots_[i];
      if (slot.remaining == 0 || slot.m > f.width || f.y + slot.m > a_) continue;
      if (i == 0 && options_.symmetry_breaking && slot.remaining == largest_total_ && 2 * f.y > a_ - slot.m) continue;
      --slot.remaining;
      // The rest of the run at this height must be filled by squares starting here.
      const std::int32_t rest = f.width - slot.m;
      if (rest > 0) {
        const std::int32_t smallest = smallest_available();
        if (smallest == 0 || smallest > rest) {
          ++slot.remaining;
          continue;
        }
      }
      for (std::int32_t c = f.x; c < f.x + slot.m; ++c) heights_[c] += slot.m;
      f.next_slot = i + 1;
      f.placed_slot = i;
      f.placed = true;
      return true;
    }
    return false;
  }

  void undo(const Frame& f) {
    SizeSlot& slot = slots_[f.placed_slot];
    for (std::int32_t c = f.x; c < f.x + slot.m; ++c) heights_[c] -= slot.m;
    ++slot.remaining;
  }

  Layout layout() const {
    Layout out{a_, {}};
    out.placements.reserve(stack_.size());
    for (const auto& f : stack_) out.placements.push_back({f.x, f.y, slots_[f.placed_slot].m});
    return out;
  }

  std::int32_t a_;
  std::vector<std::int32_t> heights_;
  std::vector<SizeSlot> slots_;  // descending m
  std::vector<Frame> stack_;
  std::int64_t largest_total_ = 0;
  SearchBudget budget_;
  RealizeOptions options_;
  Clock::time_point deadline_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::string_view to_string(RealizeStatus status) noexcept {
  switch (status) {
    case RealizeStatus::Realized: return "Realized";
    case RealizeStatus::Unrealizable: return "Unrealizable";
    case RealizeStatus::BudgetExhausted: return "BudgetExhausted";
  }
  return "Unknown";
}

RealizeResult realize(const Signature& sig, const SearchBudget& budget, RealizeOptions options) {
  if (budget.max_nodes == 0 || budget.max_time.count() <= 0) {
    throw Error(ErrorCode::NonPositive, "search budget must be positive");
  }
  SkylineSearch search(sig, budget, options);
  return search.run();
}

bool verify_layout(const Layout& layout, const Signature& sig) {
  const std::int64_t a = layout.a;
  if (a < 1 || a > kMaxGrid || sig.a() != ExactInt(a)) return false;
  std::vector<std::uint8_t> cover(static_cast<std::size_t>(a * a), 0);
  std::map<std::int64_t, std::int64_t> sizes;
  for (const auto& p : layout.placements) {
    if (p.m < 1 || p.x < 0 || p.y < 0 || p.x + p.m > a || p.y + p.m > a) return false;
    for (std::int64_t y = p.y; y < p.y + p.m; ++y) {
      for (std::int64_t x = p.x; x < p.x + p.m; ++x) {
        auto& cell = cover[static_cast<std::size_t>(y * a + x)];
        if (cell != 0) return false;
        cell = 1;
      }
    }
    ++sizes[p.m];
  }
  if (std::find(cover.begin(), cover.end(), 0) != cover.end()) return false;
  std::map<std::int64_t, std::int64_t> expected;
  for (const auto& c : sig.classes()) {
    auto m = c.m.to_int64();
    auto n = c.n.to_int64();
    if (!m || !n) return false;
    expected[*m] = *n;
  }
  return sizes == expected;
}

std::size_t TwoSizeN1Report::count(RealizeStatus status) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [&](const RealizeEntry& e) { return e.status == status; }));
}

std::vector<Signature> two_size_n1_1_signatures(std::int64_t a_max) {
  if (a_max < 2) throw Error(ErrorCode::InvalidBounds, "a_max must be at least 2");
  if (a_max > kMaxGrid) throw Error(ErrorCode::InvalidBounds, "a_max must be at most 65536");
  std::vector<Signature> out;
  for (std::int64_t a = 3; a <= a_max; ++a) {
    const std::int64_t rest = a * a - 1;
    for (std::int64_t m = 2; m < a; ++m) {
      if (rest % (m * m) == 0) out.push_back(make_signature(a, {{1, 1}, {m, rest / (m * m)}}));
    }
  }
  return out;
}

std::vector<RealizeResult> realize_all(const std::vector<Signature>& sigs, const SearchBudget& budget,
                                       RealizeOptions options, unsigned jobs) {
  std::vector<RealizeResult> results(sigs.size());
  if (jobs <= 1 || sigs.size() <= 1) {
    for (std::size_t i = 0; i < sigs.size(); ++i) results[i] = realize(sigs[i], budget, options);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(sigs.size());
  auto worker = [&] {
    for (std::size_t i = next++; i < sigs.size(); i = next++) {
      try {
        results[i] = realize(sigs[i], budget, options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, sigs.size()); ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

TwoSizeN1Report check_two_size_n1_1(std::int64_t a_max, const SearchBudget& budget, unsigned jobs) {
  TwoSizeN1Report report;
  report.a_max = a_max;
  auto sigs = two_size_n1_1_signatures(a_max);
  auto results = realize_all(sigs, budget, {}, jobs);
  for (std::size_t i = 0; i < sigs.size(); ++i) {
    report.entries.push_back({std::move(sigs[i]), results[i].status, results[i].nodes});
  }
  return report;
}

}  // namespace mtp

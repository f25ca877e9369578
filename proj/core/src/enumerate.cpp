#include "mtp/enumerate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <string>

#include "mtp/error.hpp"

namespace mtp {

namespace {

using i64 = std::int64_t;

i64 ceil_div(i64 num, i64 den) { return num <= 0 ? 0 : (num + den - 1) / den; }

i64 isqrt64(i64 v) {
  auto r = static_cast<i64>(std::sqrt(static_cast<long double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

struct RawClass {
  i64 m;
  i64 n;
};

// Depth-first search over classes in ascending m. At each level the count n of
// the current size is bounded so that the remaining tiles can still reach the
// remaining area with sizes in (m, a-1].
template <typename Emit>
class GridSearch {
 public:
  GridSearch(i64 a, i64 tiles, i64 max_classes, std::optional<CountFilter> n1_filter,
             std::optional<CountFilter> size_filter, Emit emit)
      : a_(a),
        max_classes_(std::min<i64>(max_classes, kMaxDepth)),
        tiles_(tiles),
        n1_filter_(n1_filter),
        size_filter_(size_filter),
        emit_(std::move(emit)) {
    if (size_filter_ && !size_filter_->at_least) max_classes_ = std::min(max_classes_, size_filter_->value);
  }

  void run() {
    if (a_ * a_ < tiles_ || tiles_ < 1 || max_classes_ < 1) return;
    step(1, 1, tiles_, a_ * a_, 0);
  }

 private:
  static constexpr i64 kMaxDepth = 64;

  void emit_if_accepted(std::size_t depth) {
    const auto count = static_cast<i64>(depth);
    if (size_filter_ && !size_filter_->accepts(count)) return;
    emit_(std::span<const RawClass>(stack_.data(), depth));
  }

  bool first_level_ok(std::size_t depth, i64 n) const { return depth != 0 || !n1_filter_ || n1_filter_->accepts(n); }

  void step(i64 m_lo, i64 m_hi, i64 rem_n, i64 rem_area, std::size_t depth) {
    const i64 top = a_ - 1;
    const bool last_allowed = static_cast<i64>(depth) + 1 >= max_classes_;
    if (last_allowed) {
      // Only a single class can remain: every remaining tile has the same size.
      if (rem_area % rem_n != 0) return;
      const i64 per = rem_area / rem_n;
      const i64 m = isqrt64(per);
      if (m * m != per || m < m_lo || m > m_hi) return;
      if (tiles_ >= 2 && m >= a_) return;
      if (!first_level_ok(depth, rem_n)) return;
      stack_[depth] = {m, rem_n};
      emit_if_accepted(depth + 1);
      return;
    }
    for (i64 m = m_lo; m <= m_hi; ++m) {
      const i64 sq = m * m;
      if (rem_n * sq > rem_area) break;
      if (tiles_ >= 2 && m >= a_) break;
      stack_[depth].m = m;
      if (m < top) {
        const i64 next = (m + 1) * (m + 1);
        const i64 top_sq = top * top;
        // r = rem_n - n remaining tiles must satisfy r*next <= area' <= r*top_sq.
        const i64 n_lo = std::max<i64>(1, ceil_div(rem_n * next - rem_area, next - sq));
        const i64 n_hi = std::min<i64>(rem_n - 1, (rem_n * top_sq - rem_area) / (top_sq - sq));
        for (i64 n = n_lo; n <= n_hi; ++n) {
          if (!first_level_ok(depth, n)) continue;
          stack_[depth].n = n;
          step(m + 1, top, rem_n - n, rem_area - n * sq, depth + 1);
        }
      }
      if (rem_n * sq == rem_area && first_level_ok(depth, rem_n)) {
        stack_[depth].n = rem_n;
        emit_if_accepted(depth + 1);
      }
    }
  }

  i64 a_;
  i64 max_classes_;
  i64 tiles_;
  std::optional<CountFilter> n1_filter_;
  std::optional<CountFilter> size_filter_;
  Emit emit_;
  std::array<RawClass, kMaxDepth> stack_{};
};

template <typename Emit>
void search_grid(i64 a, i64 tiles, i64 max_classes, const std::optional<CountFilter>& n1_filter,
                 const std::optional<CountFilter>& size_filter, Emit emit) {
  GridSearch<Emit> search(a, tiles, max_classes, n1_filter, size_filter, std::move(emit));
  search.run();
}

Signature to_signature(i64 a, std::span<const RawClass> raw) {
  std::vector<SizeClass> classes;
  classes.reserve(raw.size());
  for (const auto& c : raw) classes.push_back({ExactInt(c.m), ExactInt(c.n)});
  return make_signature(ExactInt(a), std::move(classes));
}

i64 tile_target(const EnumBounds& b) { return b.k * b.k + 3; }

// a^2 >= N is necessary, so the scan starts at ceil(sqrt(N)).
i64 first_a(const EnumBounds& b) {
  const i64 n = tile_target(b);
  i64 lo = isqrt64(n);
  if (lo * lo < n) ++lo;
  return std::max(b.a_min, lo);
}

std::vector<Signature> collect_shard(const EnumBounds& b, i64 a) {
  std::vector<Signature> out;
  search_grid(a, tile_target(b), b.max_classes, b.n1_filter, b.size_filter,
              [&](std::span<const RawClass> raw) { out.push_back(to_signature(a, raw)); });
  return out;
}

std::uint64_t count_shard(const EnumBounds& b, i64 a) {
  std::uint64_t count = 0;
  search_grid(a, tile_target(b), b.max_classes, b.n1_filter, b.size_filter,
              [&](std::span<const RawClass>) { ++count; });
  return count;
}

}  // namespace

void EnumBounds::validate() const {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::InvalidBounds, why); };
  if (k < 2) fail("k must be at least 2, got " + std::to_string(k));
  if (k > kMaxEnumK) fail("k must be at most " + std::to_string(kMaxEnumK));
  if (a_min < 2) fail("a_min must be at least 2, got " + std::to_string(a_min));
  if (a_max < a_min) fail("a_max must be >= a_min");
  if (a_max > kMaxEnumA) fail("a_max must be at most " + std::to_string(kMaxEnumA));
  if (max_classes < 1) fail("max_classes must be at least 1");
  if (n1_filter && n1_filter->value < 1) fail("n1 filter value must be at least 1");
  if (size_filter && size_filter->value < 1) fail("class-count filter value must be at least 1");
}

void for_each_grid_signature(std::int64_t a, std::int64_t tiles, std::int64_t max_classes,
                             const SignatureVisitor& visit) {
  if (a < 2 || a > kMaxEnumA || tiles > kMaxEnumA * 4) {
    throw Error(ErrorCode::InvalidBounds, "grid search needs 2 <= a <= 2^20");
  }
  search_grid(a, tiles, max_classes, std::nullopt, std::nullopt,
              [&](std::span<const RawClass> raw) { visit(to_signature(a, raw)); });
}

void for_each_signature(const EnumBounds& bounds, const SignatureVisitor& visit, unsigned jobs) {
  bounds.validate();
  const i64 start = first_a(bounds);
  if (jobs <= 1) {
    for (i64 a = start; a <= bounds.a_max; ++a) {
      search_grid(a, tile_target(bounds), bounds.max_classes, bounds.n1_filter, bounds.size_filter,
                  [&](std::span<const RawClass> raw) { visit(to_signature(a, raw)); });
    }
    return;
  }
  // Shards for consecutive a run in waves of `jobs`; emission stays in a order.
  for (i64 wave = start; wave <= bounds.a_max; wave += jobs) {
    std::vector<std::future<std::vector<Signature>>> shards;
    for (i64 a = wave; a < wave + static_cast<i64>(jobs) && a <= bounds.a_max; ++a) {
      shards.push_back(std::async(std::launch::async, collect_shard, std::cref(bounds), a));
    }
    for (auto& shard : shards) {
      for (const auto& sig : shard.get()) visit(sig);
    }
  }
}

std::vector<Signature> enumerate_signatures(const EnumBounds& bounds, unsigned jobs) {
  std::vector<Signature> out;
  for_each_signature(bounds, [&](const Signature& s) { out.push_back(s); }, jobs);
  return out;
}

std::uint64_t count_signatures(const EnumBounds& bounds, unsigned jobs) {
  bounds.validate();
  const i64 start = first_a(bounds);
  std::uint64_t total = 0;
  if (jobs <= 1) {
    for (i64 a = start; a <= bounds.a_max; ++a) total += count_shard(bounds, a);
    return total;
  }
  for (i64 wave = start; wave <= bounds.a_max; wave += jobs) {
    std::vector<std::future<std::uint64_t>> shards;
    for (i64 a = wave; a < wave + static_cast<i64>(jobs) && a <= bounds.a_max; ++a) {
      shards.push_back(std::async(std::launch::async, count_shard, std::cref(bounds), a));
    }
    for (auto& shard : shards) total += shard.get();
  }
  return total;
}

}  // namespace mtp

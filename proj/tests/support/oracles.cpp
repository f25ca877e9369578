#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace mtp::oracle {

namespace {

void brute(std::int64_t a, std::int64_t m, std::int64_t area_left, std::int64_t tiles_left, bool any_count,
           std::vector<std::int64_t>& counts, std::int64_t max_classes, std::vector<Signature>& out) {
  if (m == 0) {
    if (area_left != 0 || (!any_count && tiles_left != 0)) return;
    if (counts[1] == 0) return;
    std::vector<SizeClass> cls;
    for (std::int64_t s = 1; s < a; ++s) {
      if (counts[s] > 0) cls.push_back({ExactInt(s), ExactInt(counts[s])});
    }
    if (static_cast<std::int64_t>(cls.size()) > max_classes) return;
    std::int64_t g = 0;
    for (const auto& c : cls) g = std::gcd(g, *c.m.to_int64());
    if (g != 1) return;
    out.push_back(make_signature(ExactInt(a), std::move(cls)));
    return;
  }
  for (std::int64_t n = 0; n * m * m <= area_left; ++n) {
    if (!any_count && n > tiles_left) break;
    counts[m] = n;
    brute(a, m - 1, area_left - n * m * m, tiles_left - n, any_count, counts, max_classes, out);
  }
  counts[m] = 0;
}

bool lex_less(const Signature& l, const Signature& r) {
  const auto lc = l.classes();
  const auto rc = r.classes();
  return std::lexicographical_compare(lc.begin(), lc.end(), rc.begin(), rc.end(),
                                      [](const SizeClass& x, const SizeClass& y) {
                                        if (x.m != y.m) return x.m < y.m;
                                        return x.n < y.n;
                                      });
}

struct Cover {
  int a;
  std::uint32_t full;
  std::map<int, int> left;  // size -> remaining count

  std::uint32_t square_mask(int x, int y, int m) const {
    std::uint32_t mask = 0;
    for (int dy = 0; dy < m; ++dy)
      for (int dx = 0; dx < m; ++dx) mask |= 1u << ((y + dy) * a + (x + dx));
    return mask;
  }

  // Squares of an available size that cover `cell` and avoid `used`.
  std::vector<std::pair<int, std::uint32_t>> options(int cell, std::uint32_t used) const {
    std::vector<std::pair<int, std::uint32_t>> out;
    const int cx = cell % a;
    const int cy = cell / a;
    for (const auto& [m, n] : left) {
      if (n == 0) continue;
      for (int y = std::max(0, cy - m + 1); y <= cy && y + m <= a; ++y) {
        for (int x = std::max(0, cx - m + 1); x <= cx && x + m <= a; ++x) {
          const auto mask = square_mask(x, y, m);
          if ((mask & used) == 0) out.emplace_back(m, mask);
        }
      }
    }
    return out;
  }

  bool solve(std::uint32_t used) {
    if (used == full) return true;
    int best = -1;
    std::vector<std::pair<int, std::uint32_t>> best_opts;
    for (int cell = 0; cell < a * a; ++cell) {
      if (used & (1u << cell)) continue;
      auto opts = options(cell, used);
      if (opts.empty()) return false;
      if (best < 0 || opts.size() < best_opts.size()) {
        best = cell;
        best_opts = std::move(opts);
      }
    }
    for (const auto& [m, mask] : best_opts) {
      --left[m];
      const bool ok = solve(used | mask);
      ++left[m];
      if (ok) return true;
    }
    return false;
  }
};

}  // namespace

std::vector<Signature> brute_signatures(std::int64_t a, std::int64_t tiles, std::int64_t max_classes) {
  std::vector<Signature> out;
  if (a < 2) return out;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(a), 0);
  brute(a, a - 1, a * a, tiles, tiles == 0, counts, max_classes, out);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<Signature> brute_signatures_k(std::int64_t k, std::int64_t a_min, std::int64_t a_max,
                                          std::int64_t max_classes) {
  std::vector<Signature> out;
  for (std::int64_t a = a_min; a <= a_max; ++a) {
    for (auto& s : brute_signatures(a, k * k + 3, max_classes)) out.push_back(std::move(s));
  }
  return out;
}

bool exact_cover_realizable(const Signature& sig) {
  const auto a = sig.a().to_int64();
  if (!a || *a > 5) throw std::invalid_argument("exact cover oracle handles a <= 5 only");
  Cover c{static_cast<int>(*a), 0, {}};
  c.full = (1u << (*a * *a)) - 1;
  int total_area = 0;
  for (const auto& cls : sig.classes()) {
    const int m = static_cast<int>(*cls.m.to_int64());
    const int n = static_cast<int>(*cls.n.to_int64());
    c.left[m] = n;
    total_area += n * m * m;
  }
  if (total_area != c.a * c.a) return false;
  return c.solve(0);
}

}  // namespace mtp::oracle

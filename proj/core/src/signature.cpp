#include "mtp/signature.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "mtp/error.hpp"

namespace mtp {

Signature make_signature(ExactInt a, std::vector<SizeClass> classes) {
  if (a.sign() <= 0) throw Error(ErrorCode::NonPositive, "a must be positive, got " + a.str());
  if (classes.empty()) throw Error(ErrorCode::NonPositive, "at least one size class is required");
  for (const auto& c : classes) {
    if (c.m.sign() <= 0 || c.n.sign() <= 0) {
      throw Error(ErrorCode::NonPositive, "size class (" + c.m.str() + "," + c.n.str() + ") must have m >= 1 and n >= 1");
    }
  }

  std::sort(classes.begin(), classes.end(), [](const SizeClass& l, const SizeClass& r) { return l.m < r.m; });
  for (std::size_t i = 1; i < classes.size(); ++i) {
    if (classes[i].m == classes[i - 1].m) throw Error(ErrorCode::DuplicateSize, "two classes share m=" + classes[i].m.str());
  }

  ExactInt g = classes.front().m;
  for (const auto& c : classes) g = gcd(g, c.m);
  if (g != ExactInt(1)) {
    if ((a % g).sign() != 0) {
      throw Error(ErrorCode::NonCanonicalizable, "gcd " + g.str() + " of the sizes does not divide a=" + a.str());
    }
    a = a / g;
    for (auto& c : classes) c.m = c.m / g;
  }
  if (a < ExactInt(2)) throw Error(ErrorCode::DegenerateGrid, "canonical a=" + a.str() + " is below 2");

  ExactInt area;
  ExactInt count;
  for (const auto& c : classes) {
    area += c.n * c.m * c.m;
    count += c.n;
  }
  if (area != a * a) {
    throw Error(ErrorCode::AreaMismatch, "sum n*m^2 = " + area.str() + " but a^2 = " + (a * a).str());
  }
  if (count >= ExactInt(2) && classes.back().m >= a) {
    throw Error(ErrorCode::AreaMismatch, "size " + classes.back().m.str() + " does not fit below a=" + a.str());
  }
  return Signature(std::move(a), std::move(classes));
}

Signature make_signature(std::int64_t a, std::initializer_list<std::pair<std::int64_t, std::int64_t>> classes) {
  std::vector<SizeClass> v;
  v.reserve(classes.size());
  for (const auto& [m, n] : classes) v.push_back({ExactInt(m), ExactInt(n)});
  return make_signature(ExactInt(a), std::move(v));
}

std::string Signature::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Signature& sig) {
  os << "{a=" << sig.a() << ",[";
  bool first = true;
  for (const auto& c : sig.classes()) {
    if (!first) os << ',';
    first = false;
    os << '(' << c.m << ',' << c.n << ')';
  }
  return os << "]}";
}

ConjectureTarget conjecture_target(const ExactInt& k) {
  if (k < ExactInt(2)) throw Error(ErrorCode::NonPositive, "k must be at least 2, got " + k.str());
  return {k, Ratio(k * k + ExactInt(1), k)};
}

ExactInt tile_count(const Signature& sig) {
  ExactInt total;
  for (const auto& c : sig.classes()) total += c.n;
  return total;
}

std::optional<ExactInt> k_of(const Signature& sig) {
  const ExactInt rest = tile_count(sig) - ExactInt(3);
  if (rest < ExactInt(4) || !is_perfect_square(rest)) return std::nullopt;
  return isqrt(rest);
}

ExactInt side_sum(const Signature& sig) {
  ExactInt total;
  for (const auto& c : sig.classes()) total += c.n * c.m;
  return total;
}

ExactInt pair_spread(const Signature& sig) { return pair_spread(sig.classes()); }

ExactInt area_term(const Signature& sig) { return area_term(sig.classes()); }

ExactInt pair_spread(std::span<const SizeClass> cls) {
  ExactInt total;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    for (std::size_t j = i + 1; j < cls.size(); ++j) {
      total += cls[i].n * cls[j].n * square(cls[i].m - cls[j].m);
    }
  }
  return total;
}

ExactInt area_term(std::span<const SizeClass> classes) {
  ExactInt total;
  for (const auto& c : classes) total += c.n * square(c.m);
  return total;
}

Ratio sigma(const Signature& sig) { return {side_sum(sig), sig.a()}; }

Ratio gamma(const Signature& sig) { return {pair_spread(sig), square(sig.a())}; }

ExactInt delta(const Signature& sig) { return pair_spread(sig) - area_term(sig); }

namespace {

// Returns sign of k*side_sum - (k^2+1)*a, i.e. of sigma - (k + 1/k).
int compare_to_target(const Signature& sig, const ExactInt& k) {
  if (k < ExactInt(2)) throw Error(ErrorCode::KMismatch, "k must be at least 2, got " + k.str());
  const ExactInt n = tile_count(sig);
  if (n != k * k + ExactInt(3)) {
    throw Error(ErrorCode::KMismatch, "tile count " + n.str() + " != k^2+3 for k=" + k.str());
  }
  return (k * side_sum(sig) - (k * k + ExactInt(1)) * sig.a()).sign();
}

}  // namespace

bool exceeds_conjecture(const Signature& sig, const ExactInt& k) { return compare_to_target(sig, k) > 0; }

bool attains_conjecture(const Signature& sig, const ExactInt& k) { return compare_to_target(sig, k) == 0; }

bool lemma1_implication(const Signature& sig, const ExactInt& k) {
  const int cmp = compare_to_target(sig, k);
  return delta(sig).sign() < 0 || cmp < 0;
}

}  // namespace mtp

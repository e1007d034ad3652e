#include "corona.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "errors.hpp"

namespace compack {

std::string to_string(const Corona& c) {
  return std::string(1, to_char(c.center)) + ":" + c.word;
}

std::string canonicalize(std::string_view word) {
  if (word.empty()) throw Error(ErrorCode::EmptyWord, "corona word is empty");
  for (char ch : word) size_from_char(ch);
  const std::size_t n = word.size();
  std::string reversed(word.rbegin(), word.rend());
  std::string best(word);
  std::string doubled = std::string(word) + std::string(word);
  std::string doubled_rev = reversed + reversed;
  for (std::size_t s = 0; s < n; ++s) {
    const std::string_view a(doubled.data() + s, n);
    const std::string_view b(doubled_rev.data() + s, n);
    if (a < best) best.assign(a);
    if (b < best) best.assign(b);
  }
  return best;
}

bool cyclic_contains(std::string_view word, std::string_view sub) {
  if (sub.empty()) return true;
  if (word.empty()) return false;
  // Wrap enough copies that every cyclic window of length |sub| appears.
  std::string wrapped;
  while (wrapped.size() < word.size() + sub.size()) wrapped += word;
  const std::string reversed(sub.rbegin(), sub.rend());
  for (std::size_t s = 0; s < word.size(); ++s) {
    const std::string_view window(wrapped.data() + s, sub.size());
    if (window == sub || window == reversed) return true;
  }
  return false;
}

bool CoronaSet::contains(const Corona& c) const {
  const auto& v = around(c.center);
  return std::binary_search(v.begin(), v.end(), c);
}

namespace {

// Pair classes around a center: both neighbors equal to the center, mixed, or
// both of the other size.
enum PairClass { kSame = 0, kMixed = 1, kOther = 2 };

PairClass pair_class(Size center, char x, char y) {
  const char c = to_char(center);
  if (x == c && y == c) return kSame;
  if (x != c && y != c) return kOther;
  return kMixed;
}

struct Enumerator {
  Size center;
  std::array<double, 3> angle{};
  double tol;
  std::size_t max_len;
  std::vector<std::array<int, 3>> targets;  // count triples with residual < annulus
  std::vector<Corona> found;
  EnumerationAudit audit;
  std::string word;
  std::array<int, 3> counts{};
  double sum = 0.0;

  bool dominated() const {
    for (const auto& t : targets) {
      if (counts[0] <= t[0] && counts[1] <= t[1] && counts[2] <= t[2]) return true;
    }
    return false;
  }

  void close_word() {
    const PairClass pc = pair_class(center, word.back(), word.front());
    const double total = sum + angle[pc];
    const double resid = std::abs(total - kTwoPi);
    if (resid >= kAuditAnnulus) return;
    if (canonicalize(word) != word) return;
    if (resid < tol) {
      found.push_back({center, word});
    } else {
      audit.nearest_miss = std::min(audit.nearest_miss, resid);
      ++audit.annulus_hits;
    }
  }

  void extend() {
    if (word.size() >= 3) close_word();
    if (word.size() >= max_len) return;
    for (char ch : {'1', 'r'}) {
      const bool has_prev = !word.empty();
      PairClass pc = kSame;
      if (has_prev) {
        pc = pair_class(center, word.back(), ch);
        ++counts[pc];
        sum += angle[pc];
      }
      word.push_back(ch);
      if (dominated() && sum <= kTwoPi + kAuditAnnulus) extend();
      word.pop_back();
      if (has_prev) {
        --counts[pc];
        sum -= angle[pc];
      }
    }
  }
};

}  // namespace

std::vector<Corona> enumerate_coronas(Size center, double r, double tol, EnumerationAudit* audit) {
  const ContactAngles a = contact_angles(r);
  const Size other = center == Size::Large ? Size::Small : Size::Large;
  Enumerator e;
  e.center = center;
  e.tol = tol;
  e.angle[kSame] = theta(center, center, center, a);
  e.angle[kMixed] = theta(center, center, other, a);
  e.angle[kOther] = theta(center, other, other, a);
  const double min_angle = *std::min_element(e.angle.begin(), e.angle.end());
  e.max_len = static_cast<std::size_t>(std::ceil(kTwoPi / min_angle));
  e.audit.nearest_miss = std::numeric_limits<double>::infinity();

  const int cap = static_cast<int>(e.max_len);
  for (int s = 0; s <= cap; ++s) {
    for (int m = 0; m <= cap; m += 2) {
      for (int o = 0; o <= cap; ++o) {
        const double total = s * e.angle[kSame] + m * e.angle[kMixed] + o * e.angle[kOther];
        if (std::abs(total - kTwoPi) < kAuditAnnulus) e.targets.push_back({s, m, o});
      }
    }
  }
  e.extend();
  std::sort(e.found.begin(), e.found.end());
  e.found.erase(std::unique(e.found.begin(), e.found.end()), e.found.end());
  if (audit) *audit = e.audit;
  return e.found;
}

std::vector<Corona> enumerate_coronas(Size center, const RadiusClass& rc, double tol) {
  return enumerate_coronas(center, rc.value, tol);
}

CoronaSet build_corona_set(const RadiusClass& rc, double tol) {
  CoronaSet set;
  set.class_id = rc.id;
  set.r = rc.value;
  set.small = enumerate_coronas(Size::Small, rc.value, tol);
  set.large = enumerate_coronas(Size::Large, rc.value, tol);
  return set;
}

namespace {

bool locally_viable(const Corona& c, const CoronaSet& set) {
  const std::size_t n = c.word.size();
  const char center = to_char(c.center);
  for (std::size_t p = 0; p < n; ++p) {
    const char x = c.word[(p + n - 1) % n];
    const char y = c.word[(p + 1) % n];
    const std::string demanded{x, center, y};
    const auto& pool = set.around(size_from_char(c.word[p]));
    const bool ok = std::any_of(pool.begin(), pool.end(), [&](const Corona& other) {
      return cyclic_contains(other.word, demanded);
    });
    if (!ok) return false;
  }
  return true;
}

void sort_excluded(CoronaSet& set) {
  std::sort(set.excluded.begin(), set.excluded.end(),
            [](const ExcludedCorona& a, const ExcludedCorona& b) { return a.corona < b.corona; });
}

}  // namespace

CoronaSet filter_locally_consistent(CoronaSet set) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (Size center : {Size::Small, Size::Large}) {
      auto& pool = center == Size::Small ? set.small : set.large;
      for (auto it = pool.begin(); it != pool.end();) {
        if (locally_viable(*it, set)) {
          ++it;
          continue;
        }
        set.excluded.push_back({*it, kReasonLocal});
        it = pool.erase(it);
        changed = true;
      }
    }
  }
  sort_excluded(set);
  return set;
}

CoronaSet filter_monochromatic(CoronaSet set) {
  for (Size center : {Size::Small, Size::Large}) {
    auto& pool = center == Size::Small ? set.small : set.large;
    const char c = to_char(center);
    const std::string mono(6, c);
    const std::string triple(3, c);
    const auto it = std::find_if(pool.begin(), pool.end(),
                                 [&](const Corona& x) { return x.word == mono; });
    if (it == pool.end()) continue;
    const bool witnessed = std::any_of(pool.begin(), pool.end(), [&](const Corona& x) {
      return x.word != mono && cyclic_contains(x.word, triple);
    });
    if (!witnessed) {
      set.excluded.push_back({*it, kReasonBoundary});
      pool.erase(it);
    }
  }
  sort_excluded(set);
  return set;
}

CoronaSet filtered_corona_set(const RadiusClass& rc) {
  return filter_locally_consistent(
      filter_monochromatic(filter_locally_consistent(build_corona_set(rc))));
}

AngleDecomposition angle_decomposition(const Corona& c, double r) {
  const ContactAngles a = contact_angles(r);
  AngleDecomposition d;
  const std::size_t n = c.word.size();
  for (std::size_t p = 0; p < n; ++p) {
    const AngleKind kind = angle_kind(c.center, size_from_char(c.word[p]),
                                      size_from_char(c.word[(p + 1) % n]));
    ++d.counts[static_cast<std::size_t>(kind)];
    d.total += angle_value(kind, a);
  }
  return d;
}

AngleDecomposition angle_decomposition(const Corona& c, const RadiusClass& rc) {
  return angle_decomposition(c, rc.value);
}

}  // namespace compack

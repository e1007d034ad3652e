#include "radii.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "corona.hpp"
#include "errors.hpp"
#include "geometry.hpp"

namespace compack {
namespace {

constexpr double kBracketEps = 1e-9;
constexpr int kBisectionSteps = 64;
constexpr int kScanLimit = 6;

struct ExactForm {
  SmallSignature signature;
  std::vector<double> poly;
  std::optional<double> closed;
  const char* note;
};

std::vector<ExactForm> exact_forms() {
  const double s3 = std::sqrt(3.0);
  const double s12 = std::sin(kPi / 12.0);
  return {
      {{3, 2, 0}, {9.0, -8.0, -10.0, 0.0, 1.0}, std::nullopt, "root of r^4 - 10r^2 - 8r + 9"},
      {{2, 2, 1},
       {3.0, -20.0 - 4.0 * s3, 6.0 + 4.0 * s3, 20.0 + 12.0 * s3, 7.0 + 4.0 * s3},
       std::nullopt,
       "root of (7+4s3)r^4 + (20+12s3)r^3 + (6+4s3)r^2 + (-20-4s3)r + 3, s3 = sqrt(3)"},
      {{1, 4, 0}, {-1.0, -2.0, 3.0, 8.0}, std::nullopt, "root of 8r^3 + 3r^2 - 2r - 1"},
      {{4, 0, 0}, {}, std::sqrt(2.0) - 1.0, "sqrt(2) - 1"},
      {{1, 2, 2}, {}, (2.0 * s3 + 1.0 - 2.0 * std::sqrt(1.0 + s3)) / 3.0,
       "(2 sqrt(3) + 1 - 2 sqrt(1 + sqrt(3))) / 3"},
      {{0, 4, 1}, {}, s12 / (1.0 - s12), "sin(pi/12) / (1 - sin(pi/12))"},
      {{2, 2, 0}, {}, (std::sqrt(17.0) - 3.0) / 4.0, "(sqrt(17) - 3) / 4"},
      {{3, 0, 0}, {}, 2.0 * s3 / 3.0 - 1.0, "2 sqrt(3)/3 - 1"},
      {{1, 2, 1}, {}, 5.0 - 2.0 * std::sqrt(6.0), "5 - 2 sqrt(6)"},
  };
}

double large_sum(const LargeSignature& s, const ContactAngles& a) {
  return s.l * a.alpha_prime + s.m * a.beta + s.n * kThirdPi;
}

template <typename Fn>
void for_each_large_signature(const ContactAngles& a, Fn&& fn) {
  const int l_max = static_cast<int>(std::ceil(kTwoPi / a.alpha_prime));
  const int m_max = static_cast<int>(std::ceil(kTwoPi / a.beta));
  for (int l = 0; l <= l_max; ++l) {
    for (int m = 0; m <= m_max; ++m) {
      for (int n = 0; n <= 6; ++n) {
        if (l == 0 && m == 0 && n == 6) continue;
        fn(LargeSignature{l, m, n});
      }
    }
  }
}

}  // namespace

double f_eval(SmallSignature sig, double r) {
  const ContactAngles a = contact_angles(r);
  return sig.i * a.alpha + sig.j * a.beta_prime + sig.k * kThirdPi;
}

std::vector<SmallSignature> candidate_signatures() {
  std::vector<SmallSignature> out;
  for (int i = 0; i <= kScanLimit; ++i) {
    for (int j = 0; j <= kScanLimit; ++j) {
      for (int k = 0; k <= kScanLimit; ++k) {
        if (6 * i + 3 * j + 2 * k <= 12) continue;
        if (i + j + k >= 6) continue;
        if (j % 2 != 0) continue;
        if (j == 0 && i * k != 0) continue;
        out.push_back({i, j, k});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

double solve_signature(SmallSignature sig) {
  double lo = kBracketEps;
  double hi = 1.0 - kBracketEps;
  if (!(f_eval(sig, lo) > kTwoPi) || !(f_eval(sig, hi) < kTwoPi)) {
    throw Error(ErrorCode::NoSolution,
                "F(" + std::to_string(sig.i) + "," + std::to_string(sig.j) + "," +
                    std::to_string(sig.k) + ") does not cross 2*pi on (0,1)");
  }
  for (int step = 0; step < kBisectionSteps; ++step) {
    const double mid = 0.5 * (lo + hi);
    if (f_eval(sig, mid) > kTwoPi) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::optional<LargeSignature> large_feasible(double r, double tol) {
  const ContactAngles a = contact_angles(r);
  std::optional<LargeSignature> found;
  for_each_large_signature(a, [&](const LargeSignature& s) {
    if (!found && std::abs(large_sum(s, a) - kTwoPi) < tol) found = s;
  });
  return found;
}

LargeAudit audit_large(double r, double tol) {
  const ContactAngles a = contact_angles(r);
  LargeAudit audit;
  audit.nearest_miss = std::numeric_limits<double>::infinity();
  for_each_large_signature(a, [&](const LargeSignature& s) {
    const double resid = std::abs(large_sum(s, a) - kTwoPi);
    if (resid < tol) {
      audit.accepted.push_back(s);
      return;
    }
    audit.nearest_miss = std::min(audit.nearest_miss, resid);
    if (resid < kAuditAnnulus) ++audit.annulus_hits;
  });
  return audit;
}

std::vector<CandidateResult> evaluate_candidates() {
  std::vector<CandidateResult> out;
  for (const SmallSignature& sig : candidate_signatures()) {
    CandidateResult c;
    c.signature = sig;
    c.root = solve_signature(sig);
    c.large = large_feasible(c.root);
    c.audit = audit_large(c.root);
    out.push_back(std::move(c));
  }
  return out;
}

std::string small_word_for_signature(SmallSignature sig) {
  const int n = sig.i + sig.j + sig.k;
  std::set<std::string> words;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::string w(static_cast<std::size_t>(n), '1');
    for (int b = 0; b < n; ++b) {
      if (mask & (1u << b)) w[static_cast<std::size_t>(b)] = 'r';
    }
    int ll = 0, mixed = 0, rr = 0;
    for (int p = 0; p < n; ++p) {
      const char x = w[static_cast<std::size_t>(p)];
      const char y = w[static_cast<std::size_t>((p + 1) % n)];
      if (x == '1' && y == '1') {
        ++ll;
      } else if (x == 'r' && y == 'r') {
        ++rr;
      } else {
        ++mixed;
      }
    }
    if (ll == sig.i && mixed == sig.j && rr == sig.k) words.insert(canonicalize(w));
  }
  if (words.size() != 1) {
    throw Error(ErrorCode::Internal, "signature does not determine a unique small corona word");
  }
  return *words.begin();
}

std::vector<RadiusClass> enumerate_radius_classes() {
  std::vector<RadiusClass> out;
  const auto forms = exact_forms();
  for (const CandidateResult& c : evaluate_candidates()) {
    if (!c.large) continue;
    const auto form = std::find_if(forms.begin(), forms.end(),
                                   [&](const ExactForm& f) { return f.signature == c.signature; });
    if (form == forms.end()) {
      throw Error(ErrorCode::Internal, "surviving signature has no exact-form entry");
    }
    RadiusClass rc;
    rc.value = c.root;
    rc.signature = c.signature;
    rc.small_corona_word = small_word_for_signature(c.signature);
    rc.residual_poly = form->poly;
    rc.closed_form = form->closed;
    rc.closed_form_note = form->note;
    rc.large_signature = *c.large;
    out.push_back(std::move(rc));
  }
  if (out.size() != 9) {
    throw Error(ErrorCode::Internal,
                "expected 9 radius classes, derived " + std::to_string(out.size()));
  }
  std::sort(out.begin(), out.end(),
            [](const RadiusClass& a, const RadiusClass& b) { return a.value > b.value; });
  for (std::size_t idx = 0; idx < out.size(); ++idx) out[idx].id = "c" + std::to_string(idx + 1);
  return out;
}

const std::vector<RadiusClass>& radius_classes() {
  static const std::vector<RadiusClass> classes = enumerate_radius_classes();
  return classes;
}

const RadiusClass& radius_class(std::string_view id) {
  for (const RadiusClass& c : radius_classes()) {
    if (c.id == id) return c;
  }
  throw Error(ErrorCode::UnknownClass, "unknown radius class '" + std::string(id) + "'");
}

double residual(const RadiusClass& c) {
  if (c.closed_form) return c.value - *c.closed_form;
  double acc = 0.0;
  for (auto it = c.residual_poly.rbegin(); it != c.residual_poly.rend(); ++it) {
    acc = acc * c.value + *it;
  }
  return acc;
}

}  // namespace compack

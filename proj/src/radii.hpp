#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace compack {

// Counts of alpha, beta' and pi/3 angles around a small disc.
struct SmallSignature {
  int i = 0;
  int j = 0;
  int k = 0;
  auto operator<=>(const SmallSignature&) const = default;
};

// Counts of alpha', beta and pi/3 angles around a large disc.
struct LargeSignature {
  int l = 0;
  int m = 0;
  int n = 0;
  auto operator<=>(const LargeSignature&) const = default;
};

inline constexpr double kFeasibilityTol = 1e-7;
inline constexpr double kAuditAnnulus = 1e-4;

// i*alpha(r) + j*beta'(r) + k*pi/3.
double f_eval(SmallSignature sig, double r);

// Every (i,j,k) for which F_ijk = 2*pi has a root in (0,1) and the side
// lengths can be matched: 6i+3j+2k > 12, i+j+k < 6, j even, j == 0 => i*k == 0.
std::vector<SmallSignature> candidate_signatures();

// Bisection on the strictly decreasing F_ijk. Throws Error(NoSolution) when the
// working bracket does not straddle 2*pi.
double solve_signature(SmallSignature sig);

// First nontrivial (l,m,n), in lexicographic order, with
// |l*alpha' + m*beta + n*pi/3 - 2*pi| < tol.
std::optional<LargeSignature> large_feasible(double r, double tol = kFeasibilityTol);

struct LargeAudit {
  std::vector<LargeSignature> accepted;  // all nontrivial hits within tol
  double nearest_miss = 0.0;             // smallest residual among rejected signatures
  int annulus_hits = 0;                  // rejected signatures with residual < kAuditAnnulus
};

// Exhaustive scan of the (l,m,n) box used by large_feasible.
LargeAudit audit_large(double r, double tol = kFeasibilityTol);

struct CandidateResult {
  SmallSignature signature;
  double root = 0.0;
  std::optional<LargeSignature> large;
  LargeAudit audit;
};

std::vector<CandidateResult> evaluate_candidates();

struct RadiusClass {
  std::string id;  // "c1" .. "c9", in decreasing order of value
  double value = 0.0;
  SmallSignature signature;
  std::string small_corona_word;       // canonical form
  std::vector<double> residual_poly;   // ascending coefficients; empty when closed_form is set
  std::optional<double> closed_form;
  std::string closed_form_note;
  LargeSignature large_signature;
};

// Runs the whole derivation. Throws Error(Internal) if it does not end with
// exactly nine classes.
std::vector<RadiusClass> enumerate_radius_classes();

// Cached result of enumerate_radius_classes().
const std::vector<RadiusClass>& radius_classes();
const RadiusClass& radius_class(std::string_view id);

double residual(const RadiusClass& c);

// Canonical word over {1, r} whose cyclic pairs give exactly the signature's
// angle counts. Throws Error(Internal) if it is not unique.
std::string small_word_for_signature(SmallSignature sig);

}  // namespace compack

// Weighted coverage of [0,1] by the level-n images S_w(I), and the
// computational upper and lower bounds built on it.
#ifndef LOCDIM_COVERAGE_HPP
#define LOCDIM_COVERAGE_HPP

#include "locdim/analytic.hpp"
#include "locdim/ifs.hpp"

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace locdim {

struct WeightedInterval {
  double lo = 0.0;
  double hi = 0.0;
  double weight = 0.0;
  Word word;
};

struct EnumerationLimits {
  int max_n = 20;
  std::size_t max_images = std::size_t{1} << 24;
};

/// All (m+1)^n images S_w(I), |w| = n, in lexicographic word order.
/// Throws std::length_error past the limits.
std::vector<WeightedInterval> enumerate_images(const IfsSpec& spec, const Interval& I, int n,
                                               const EnumerationLimits& limits = {});

/// Piecewise-constant total weight x -> sum{w : lo <= x <= hi}. Endpoints
/// closer than kEndpointEps are merged into one breakpoint.
struct CoverageProfile {
  std::vector<double> breakpoints;     // strictly increasing
  std::vector<double> cell_weights;    // open cell (b_k, b_{k+1})
  std::vector<double> point_weights;   // at b_k, closed intervals

  std::size_t cell_count() const { return cell_weights.size(); }
  Interval cell(std::size_t k) const { return Interval::open(breakpoints[k], breakpoints[k + 1]); }
  /// Weight of the cell containing x; 0 outside the hull. Not meaningful
  /// exactly at a breakpoint.
  double value_at(double x) const;
};

CoverageProfile coverage_profile(std::span<const WeightedInterval> images);

/// Profile of the level-n images of I without materialising words.
CoverageProfile level_profile(const IfsSpec& spec, const Interval& I, int n,
                              const EnumerationLimits& limits = {});

/// k = min over open cells meeting the interior of I of N_n(., I).
double min_coverage(const IfsSpec& spec, const Interval& I, int n);
double min_coverage(const CoverageProfile& profile, const Interval& I);

struct SupCoverage {
  double value = 0.0;         // max cell weight
  Interval witness;           // leftmost maximising cell
  double closed_value = 0.0;  // max also over breakpoint values
};

/// sup_y N_n(y) for I = [0,1].
SupCoverage sup_coverage(const IfsSpec& spec, int n);
SupCoverage sup_coverage(const CoverageProfile& profile);

/// N_n(x, I) by descending only into words whose image of the hull of
/// [0,1] and I still contains x.
double pointwise_N(const IfsSpec& spec, double x, int n, const Interval& I = Interval::closed(0.0, 1.0));

struct Admissibility {
  bool ok = false;
  int n = 0;          // 0: the level-one union is already connected
  double a = 0.0;     // target (a, 1-a) for the union test
  std::string note;
};

/// Largest b for which the level-one images of (b, 1-b) form one interval:
/// (1 - maxgap/rho)/2. Equals 1 - 1/(2 rho) for Bernoulli systems.
double direct_admissible_limit(const IfsSpec& spec);

/// The always-admissible candidate (a, 1-a), a = direct_admissible_limit/2.
Interval central_candidate(const IfsSpec& spec);

/// Checks that every x in (0,1) lies in some S_w(I) for I = (b, 1-b).
Admissibility admissible_interval(const IfsSpec& spec, const Interval& I, int n_max);

/// log c / (n log rho), with a full-weight coverage c = 1 giving +0.
inline double coverage_exponent(double c, double rho, int n) {
  return std::log(c) / (n * std::log(rho)) + 0.0;
}

struct BoundResult {
  double rho = 0.0;
  Method method = Method::CoverageUpper;
  int n = 0;
  std::optional<Interval> interval;
  double coverage = 0.0;  // k or sup N_n
  double value = 0.0;
  bool valid = false;
  std::string reason;
  bool hypothesis_checked = false;
  bool awsc_required = false;
  bool awsc_certified = false;
  std::optional<Interval> witness;
};

struct UpperBoundOptions {
  /// Fixed candidates in addition to central_candidate().
  std::vector<Interval> candidates = {Interval::open(0.1, 0.9), Interval::open(0.2, 0.8),
                                      Interval::open(0.3, 0.7)};
  bool include_central = true;
  int admissible_n_max = 10;
};

/// log k / (n log rho) for one interval and level.
BoundResult upper_bound_at(const IfsSpec& spec, const Interval& I, int n);

/// Minimum of upper_bound_at over admissible candidates and 1 <= n <= n_max.
BoundResult upper_bound(const IfsSpec& spec, int n_max, const UpperBoundOptions& opts = {});

struct LowerBoundOptions {
  bool awsc_certified = false;
  /// Take the sup over breakpoint values of the closed images as well as
  /// over open cells. Only differs from the cell sup at transition points.
  bool closed_sup = false;
};

/// log sup_y N_n(y) / (n log rho). Conditional on the asymptotically weak
/// separation condition; `awsc_certified` records whether it is known.
BoundResult lower_bound(const IfsSpec& spec, int n, const LowerBoundOptions& opts = {});
BoundResult lower_bound(const CoverageProfile& level_n, double rho, int n, const LowerBoundOptions& opts = {});

/// Largest lower_bound over 1 <= n <= n_max. sup N_n is submultiplicative,
/// so each level is a valid bound and the largest one is kept.
BoundResult best_lower_bound(const IfsSpec& spec, int n_max, const LowerBoundOptions& opts = {});

}  // namespace locdim

#endif  // LOCDIM_COVERAGE_HPP

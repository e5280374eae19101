// Transition points: contraction factors rho at which S_sigma(0) = S_tau(1)
// for two words of equal length. Coverage quantities are locally constant
// in rho between consecutive transition points.
#ifndef LOCDIM_TRANSITIONS_HPP
#define LOCDIM_TRANSITIONS_HPP

#include "locdim/coverage.hpp"
#include "locdim/ifs.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <optional>
#include <vector>

namespace locdim {

// ---------------------------------------------------------------------------
// Polynomial helpers (coefficients in ascending powers).

template <typename Scalar>
using PolyCoeffs = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
Scalar poly_eval(const PolyCoeffs<Scalar>& c, Scalar x) {
  Scalar y(0);
  for (Eigen::Index i = c.size() - 1; i >= 0; --i) y = y * x + c(i);
  return y;
}

template <typename Scalar>
PolyCoeffs<Scalar> poly_derivative(const PolyCoeffs<Scalar>& c) {
  if (c.size() <= 1) return PolyCoeffs<Scalar>::Zero(1);
  PolyCoeffs<Scalar> d(c.size() - 1);
  for (Eigen::Index i = 1; i < c.size(); ++i) d(i - 1) = c(i) * Scalar(i);
  return d;
}

/// Bisection to machine precision on a bracket with f(lo), f(hi) of
/// opposite signs.
template <typename Scalar, typename F>
Scalar bisect(F&& f, Scalar lo, Scalar hi) {
  Scalar flo = f(lo);
  for (int it = 0; it < 200; ++it) {
    const Scalar mid = lo + (hi - lo) / 2;
    if (!(mid > lo && mid < hi)) break;
    const Scalar fm = f(mid);
    if (fm == Scalar(0)) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / 2;
}

struct RootIsolationOptions {
  int grid = 1 << 12;
  /// |P| below this at a tangency counts as a (double) root.
  double zero_tol = 1e-13;
};

/// Real roots strictly inside (lo, hi). Sign changes on a uniform grid are
/// bisected to machine precision. Grid cells where P' changes sign but P
/// does not are searched for a pair of close roots (or a double root).
template <typename Scalar>
std::vector<Scalar> isolate_roots(const PolyCoeffs<Scalar>& c, Scalar lo, Scalar hi,
                                  const RootIsolationOptions& opts = {}) {
  std::vector<Scalar> roots;
  if ((c.array() == Scalar(0)).all()) return roots;
  const auto dc = poly_derivative(c);
  auto P = [&](Scalar x) { return poly_eval(c, x); };
  auto D = [&](Scalar x) { return poly_eval(dc, x); };
  const int g = opts.grid;
  const Scalar h = (hi - lo) / Scalar(g);
  Scalar x0 = lo;
  Scalar p0 = P(x0);
  Scalar d0 = D(x0);
  for (int i = 1; i <= g; ++i) {
    const Scalar x1 = (i == g) ? hi : lo + h * Scalar(i);
    const Scalar p1 = P(x1);
    const Scalar d1 = D(x1);
    if (p1 == Scalar(0) && i < g) {
      roots.push_back(x1);
    } else if (p0 != Scalar(0) && p1 != Scalar(0)) {
      if ((p0 < 0) != (p1 < 0)) {
        roots.push_back(bisect(P, x0, x1));
      } else if ((d0 < 0) != (d1 < 0) && d0 != Scalar(0) && d1 != Scalar(0)) {
        const Scalar xe = bisect(D, x0, x1);
        const Scalar pe = P(xe);
        if (std::abs(pe) <= Scalar(opts.zero_tol)) {
          roots.push_back(xe);
        } else if ((pe < 0) != (p0 < 0)) {
          roots.push_back(bisect(P, x0, xe));
          roots.push_back(bisect(P, xe, x1));
        }
      }
    }
    x0 = x1;
    p0 = p1;
    d0 = d1;
  }
  return roots;
}

// ---------------------------------------------------------------------------

/// P(rho) = S_sigma(a) - S_tau(b) for the two-map system with digits
/// (0, 1-rho), as a polynomial in rho. Boundary crossings S_sigma(e) = c
/// of a fixed interval endpoint c have an empty tau.
struct TransitionPolynomial {
  PolyCoeffs<double> coeffs;  // ascending powers of rho
  Word sigma;
  Word tau;

  double operator()(double rho) const { return poly_eval(coeffs, rho); }
  int degree() const;
};

/// All nonzero polynomials S_sigma(I.lo) - S_tau(I.hi) for sigma != tau in
/// {0,1}^n. For I other than [0,1] the crossings of the images' endpoints
/// with I.lo and I.hi are included too.
std::vector<TransitionPolynomial> transition_polynomials(int n, const Interval& I = Interval::closed(0.0, 1.0));
/// Same, after checking that `family` is a two-map system.
std::vector<TransitionPolynomial> transition_polynomials(const IfsSpec& family, int n,
                                                         const Interval& I = Interval::closed(0.0, 1.0));

/// Dedup tolerance between roots of different polynomials.
inline constexpr double kRootDedupTol = 1e-10;

struct TransitionRoot {
  double rho = 0.0;
  Word sigma;
  Word tau;
  int witnesses = 1;           // polynomials merged into this root
  bool near_distinct = false;  // merged roots differed by more than 1e-13
};

struct TransitionSet {
  int n = 0;
  Interval range;
  std::vector<TransitionRoot> roots;  // sorted, strictly inside range
};

std::vector<double> isolate_roots(const TransitionPolynomial& poly, const Interval& range);

TransitionSet transition_set(int n, const Interval& range, const Interval& I = Interval::closed(0.0, 1.0));

enum class SweepQuantity { SupCoverage, MinCoverage };

struct ConstancyCell {
  Interval range;
  double value = 0.0;
};

struct TransitionValue {
  double rho = 0.0;
  double value = 0.0;
};

struct ConstancySweep {
  std::vector<ConstancyCell> cells;
  std::vector<TransitionValue> transitions;
};

/// Evaluates the quantity on each constancy cell of the two-map family with
/// weights (p0, 1-p0), checking constancy at the 1/4, 1/2, 3/4 points
/// (std::runtime_error on a mismatch), and at each transition itself,
/// where coincident endpoints are merged. For SupCoverage the transition
/// value includes breakpoint values of the closed images.
ConstancySweep constancy_sweep(double p0, int n, const Interval& range, SweepQuantity quantity,
                               const Interval& I = Interval::closed(0.0, 1.0));

struct RangeMinimum {
  double value = 0.0;
  double rho = 0.0;
  int n = 0;
  bool at_transition = false;
  std::size_t transitions = 0;
  double point_value = 0.0;  // minimum over the transition points alone
  double point_rho = 0.0;
};

/// Minimum over rho in `range` of the best (largest over 1 <= n <= n_max)
/// coverage lower bound. Each bound is increasing in rho on a constancy
/// cell, so the minimum over cells is taken at their left ends; the
/// transition points themselves are reported separately in point_value.
RangeMinimum range_min_lower_bound(double p0, int n_max, const Interval& range);

}  // namespace locdim

#endif  // LOCDIM_TRANSITIONS_HPP

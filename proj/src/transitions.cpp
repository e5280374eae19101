#include "locdim/transitions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace locdim {

int TransitionPolynomial::degree() const {
  for (Eigen::Index i = coeffs.size() - 1; i > 0; --i) {
    if (coeffs(i) != 0.0) return static_cast<int>(i);
  }
  return 0;
}

namespace {

constexpr int kMaxTransitionLevel = 12;

bool is_zero(const PolyCoeffs<double>& c) { return (c.array().abs() < 1e-15).all(); }

// (1-rho) * sum_i v_i rho^(i-1) as ascending coefficients of length n+1.
PolyCoeffs<double> digit_part(const std::vector<int>& v) {
  const auto n = static_cast<Eigen::Index>(v.size());
  PolyCoeffs<double> c = PolyCoeffs<double>::Zero(n + 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    c(i) += v[static_cast<std::size_t>(i)];
    c(i + 1) -= v[static_cast<std::size_t>(i)];
  }
  return c;
}

bool next_counter(std::vector<int>& v, int lo, int hi) {
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    if (*it < hi) {
      ++*it;
      return true;
    }
    *it = lo;
  }
  return false;
}

}  // namespace

std::vector<TransitionPolynomial> transition_polynomials(int n, const Interval& I) {
  if (n < 1 || n > kMaxTransitionLevel) {
    throw std::invalid_argument("transition level must be in [1, " + std::to_string(kMaxTransitionLevel) + "]");
  }
  std::vector<TransitionPolynomial> out;
  const auto un = static_cast<std::size_t>(n);

  std::vector<int> delta(un, -1);
  do {
    if (std::all_of(delta.begin(), delta.end(), [](int d) { return d == 0; })) continue;
    TransitionPolynomial tp;
    tp.coeffs = digit_part(delta);
    tp.coeffs(n) += I.lo - I.hi;
    tp.sigma.resize(un);
    tp.tau.resize(un);
    for (std::size_t i = 0; i < un; ++i) {
      tp.sigma[i] = delta[i] == 1 ? 1 : 0;
      tp.tau[i] = delta[i] == -1 ? 1 : 0;
    }
    if (!is_zero(tp.coeffs)) out.push_back(std::move(tp));
  } while (next_counter(delta, -1, 1));

  const bool unit = std::abs(I.lo) <= kEndpointEps && std::abs(I.hi - 1.0) <= kEndpointEps;
  if (!unit) {
    std::vector<int> sigma(un, 0);
    do {
      for (double e : {I.lo, I.hi}) {
        for (double c : {I.lo, I.hi}) {
          TransitionPolynomial tp;
          tp.coeffs = digit_part(sigma);
          tp.coeffs(n) += e;
          tp.coeffs(0) -= c;
          if (is_zero(tp.coeffs)) continue;
          tp.sigma.assign(sigma.begin(), sigma.end());
          out.push_back(std::move(tp));
        }
      }
    } while (next_counter(sigma, 0, 1));
  }
  return out;
}

std::vector<TransitionPolynomial> transition_polynomials(const IfsSpec& family, int n, const Interval& I) {
  if (family.m() != 1) throw std::invalid_argument("transition enumeration is implemented for two-map systems only");
  return transition_polynomials(n, I);
}

std::vector<double> isolate_roots(const TransitionPolynomial& poly, const Interval& range) {
  return isolate_roots<double>(poly.coeffs, range.lo, range.hi);
}

TransitionSet transition_set(int n, const Interval& range, const Interval& I) {
  struct Found {
    double rho;
    std::size_t poly;
  };
  const auto polys = transition_polynomials(n, I);
  std::vector<Found> found;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (double r : isolate_roots(polys[i], range)) {
      if (r > range.lo + kEndpointEps && r < range.hi - kEndpointEps) found.push_back({r, i});
    }
  }
  std::sort(found.begin(), found.end(),
            [](const Found& a, const Found& b) { return a.rho < b.rho || (a.rho == b.rho && a.poly < b.poly); });

  TransitionSet set;
  set.n = n;
  set.range = range;
  for (std::size_t i = 0; i < found.size();) {
    std::size_t j = i + 1;
    while (j < found.size() && found[j].rho - found[i].rho <= kRootDedupTol) ++j;
    TransitionRoot root;
    root.rho = found[i].rho;
    root.sigma = polys[found[i].poly].sigma;
    root.tau = polys[found[i].poly].tau;
    root.witnesses = static_cast<int>(j - i);
    root.near_distinct = found[j - 1].rho - found[i].rho > 1e-13;
    set.roots.push_back(std::move(root));
    i = j;
  }
  return set;
}

namespace {

double evaluate(double p0, double rho, int n, SweepQuantity q, const Interval& I, bool closed) {
  const auto spec = build_bernoulli(rho, p0, true);
  if (q == SweepQuantity::SupCoverage) {
    const auto s = sup_coverage(level_profile(spec, Interval::closed(0.0, 1.0), n));
    return closed ? s.closed_value : s.value;
  }
  return min_coverage(level_profile(spec, I, n), I);
}

std::vector<double> cut_points(const TransitionSet& set) {
  std::vector<double> cuts = {set.range.lo};
  for (const auto& r : set.roots) cuts.push_back(r.rho);
  cuts.push_back(set.range.hi);
  return cuts;
}

}  // namespace

ConstancySweep constancy_sweep(double p0, int n, const Interval& range, SweepQuantity quantity, const Interval& I) {
  const auto set = transition_set(n, range, quantity == SweepQuantity::SupCoverage ? Interval::closed(0.0, 1.0) : I);
  const auto cuts = cut_points(set);
  ConstancySweep out;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double lo = cuts[k];
    const double hi = cuts[k + 1];
    const double w = hi - lo;
    const double v = evaluate(p0, lo + 0.5 * w, n, quantity, I, false);
    for (double f : {0.25, 0.75}) {
      const double u = evaluate(p0, lo + f * w, n, quantity, I, false);
      if (std::abs(u - v) > 1e-12) {
        std::ostringstream os;
        os.precision(15);
        os << "coverage not constant on (" << lo << ", " << hi << "): " << v << " vs " << u
           << "; a transition point was missed";
        throw std::runtime_error(os.str());
      }
    }
    out.cells.push_back({Interval::open(lo, hi), v});
  }
  for (const auto& r : set.roots) out.transitions.push_back({r.rho, evaluate(p0, r.rho, n, quantity, I, true)});
  return out;
}

RangeMinimum range_min_lower_bound(double p0, int n_max, const Interval& range) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  const auto set = transition_set(n_max, range);
  const auto cuts = cut_points(set);
  const Interval unit = Interval::closed(0.0, 1.0);

  // Best lower bound with sup N_n taken from `rho_eval` and log rho from
  // `rho_log`; `closed` selects the breakpoint-inclusive sup.
  auto best = [&](double rho_eval, double rho_log, bool closed, int& arg_n) {
    const auto spec = build_bernoulli(rho_eval, p0, true);
    double v = -std::numeric_limits<double>::infinity();
    for (int n = 1; n <= n_max; ++n) {
      const auto s = sup_coverage(level_profile(spec, unit, n));
      const double b = coverage_exponent(closed ? s.closed_value : s.value, rho_log, n);
      if (b > v) {
        v = b;
        arg_n = n;
      }
    }
    return v;
  };

  RangeMinimum out;
  out.transitions = set.roots.size();
  out.value = std::numeric_limits<double>::infinity();
  out.point_value = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    int n = 0;
    const double v = best(0.5 * (cuts[k] + cuts[k + 1]), cuts[k], false, n);
    if (v < out.value) {
      out.value = v;
      out.rho = cuts[k];
      out.n = n;
      out.at_transition = k > 0;
    }
  }
  for (const auto& r : set.roots) {
    int n = 0;
    const double v = best(r.rho, r.rho, true, n);
    if (v < out.point_value) {
      out.point_value = v;
      out.point_rho = r.rho;
    }
  }
  return out;
}

}  // namespace locdim

#include "locdim/expansions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace locdim {

double choose_xi_lazy(const IfsSpec& spec) {
  if (!strict_overlap(spec)) throw std::domain_error("lazy expansion needs strict overlap");
  double slack = std::numeric_limits<double>::infinity();
  for (int j = 1; j <= spec.m(); ++j) slack = std::min(slack, spec.digit(j - 1) + spec.rho() - spec.digit(j));
  return slack * kXiSafety;
}

double choose_xi_lmr(const IfsSpec& spec) {
  if (spec.m() < 2 || !unbiased_overlap(spec)) throw std::domain_error("L/M/R expansion needs unbiased overlap");
  const int m = spec.m();
  const double rho = spec.rho();
  const auto& d = spec.digits();
  // (1) d_j + rho - xi > d_{j+1} + xi
  double bound = std::numeric_limits<double>::infinity();
  for (int j = 0; j < m; ++j) bound = std::min(bound, 0.5 * (d(j) + rho - d(j + 1)));
  // (2) rho (d_{m-1} + rho - xi) > d_1 + xi
  bound = std::min(bound, (rho * (d(m - 1) + rho) - d(1)) / (1.0 + rho));
  // (3) d_m + rho (d_1 + xi) < d_{m-1} + rho - xi
  bound = std::min(bound, (d(m - 1) + rho - d(m) - rho * d(1)) / (1.0 + rho));
  if (!(bound > kEndpointEps)) throw std::domain_error("no positive xi satisfies the L/M/R conditions");
  return bound * kXiSafety;
}

int window_length(double rho, double xi) {
  int J = 1;
  double p = rho;
  while (!(p < xi)) {
    p *= rho;
    ++J;
  }
  return J;
}

namespace {

// Position of x inside S_sigma[0,1] after dividing out the prefix. Rounding
// can push it a few ulps outside [0,1].
double renormalize(const IfsSpec& spec, double y, int digit) {
  return std::clamp((y - spec.digit(digit)) / spec.rho(), 0.0, 1.0);
}

}  // namespace

Expansion lazy_expansion(const IfsSpec& spec, double x, int N) {
  if (!(x > 0.0 && x <= 1.0)) throw std::domain_error("lazy expansion needs x in (0,1]");
  Expansion e;
  e.kind = ExpansionKind::Lazy;
  e.xi = choose_xi_lazy(spec);
  e.J = window_length(spec.rho(), e.xi);
  e.digits.reserve(N);
  const int m = spec.m();
  double y = x;
  for (int n = 0; n < N; ++n) {
    // [0, d_1+xi] -> 0, (d_j+xi, d_{j+1}+xi] -> j, (d_m+xi, 1] -> m
    int a = 0;
    while (a < m && y > spec.digit(a + 1) + e.xi) ++a;
    e.digits.push_back(static_cast<std::uint8_t>(a));
    y = renormalize(spec, y, a);
  }
  return e;
}

Expansion lmr_expansion(const IfsSpec& spec, double x, int N) {
  if (!(x > 0.0 && x < 1.0)) throw std::domain_error("L/M/R expansion needs x in (0,1)");
  Expansion e;
  e.kind = ExpansionKind::LMR;
  e.xi = choose_xi_lmr(spec);
  e.J = window_length(spec.rho(), e.xi);
  e.digits.reserve(N);
  const int m = spec.m();
  const double rho = spec.rho();
  double y = x;
  for (int n = 0; n < N; ++n) {
    int a = -1;
    for (int j = 1; j < m && a < 0; ++j) {
      if (y >= spec.digit(j) + e.xi && y <= spec.digit(j) + rho - e.xi) a = j;
    }
    if (a < 0) a = (y < spec.digit(1) + e.xi) ? 0 : m;
    e.digits.push_back(static_cast<std::uint8_t>(a));
    y = renormalize(spec, y, a);
  }
  return e;
}

double nonzero_density(const Expansion& e, const std::set<int>& excluded) {
  if (e.digits.empty()) throw std::invalid_argument("empty expansion");
  const auto hits = std::count_if(e.digits.begin(), e.digits.end(),
                                  [&](std::uint8_t a) { return !excluded.contains(a); });
  return static_cast<double>(hits) / static_cast<double>(e.digits.size());
}

std::set<int> default_excluded(const Expansion& e, int m) {
  if (e.kind == ExpansionKind::Lazy) return {0};
  return {0, m};
}

}  // namespace locdim

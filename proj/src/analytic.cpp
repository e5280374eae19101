#include "locdim/analytic.hpp"

#include <cmath>
#include <limits>

namespace locdim {

const char* to_string(Method m) {
  switch (m) {
    case Method::DimAtZero: return "DimAtZero";
    case Method::ErdosUpper: return "ErdosUpper";
    case Method::XiBiasedUpper: return "XiBiasedUpper";
    case Method::BiasedCorollary: return "BiasedCorollary";
    case Method::CoverageUpper: return "CoverageUpper";
    case Method::CoverageLower: return "CoverageLower";
  }
  return "Unknown";
}

double dim_at_zero(const IfsSpec& spec) { return std::log(spec.prob(0)) / std::log(spec.rho()); }

std::optional<int> erdos_k(double rho) {
  if (!(rho > kGoldenThreshold && rho < 1.0)) return std::nullopt;
  double term = rho * rho;
  double sum = term;
  for (int k = 3; k <= kErdosKCap; ++k) {
    term *= rho;
    sum += term;
    if (sum > 1.0) return k;
  }
  return std::nullopt;
}

AnalyticBound erdos_upper_bound(double rho) {
  if (!(rho > kGoldenThreshold && rho < 1.0)) return AnalyticBound::invalid(Method::ErdosUpper, "rho_below_golden");
  const auto k = erdos_k(rho);
  if (!k) return AnalyticBound::invalid(Method::ErdosUpper, "erdos_k_cap_exceeded");
  AnalyticBound b;
  b.method = Method::ErdosUpper;
  b.k = *k;
  b.value = (1.0 - 1.0 / *k) * std::log(2.0) / std::abs(std::log(rho));
  b.valid = true;
  return b;
}

AnalyticBound erdos_upper_bound(const IfsSpec& spec) {
  if (spec.m() != 1 || std::abs(spec.prob(0) - spec.prob(1)) > kProbEps) {
    return AnalyticBound::invalid(Method::ErdosUpper, "not_unbiased_bernoulli");
  }
  return erdos_upper_bound(spec.rho());
}

AnalyticBound xi_biased_upper_bound(const IfsSpec& spec) {
  constexpr auto kMethod = Method::XiBiasedUpper;
  if (!strict_overlap(spec)) return AnalyticBound::invalid(kMethod, "no_strict_overlap");
  const auto& p = spec.probs();
  double pmin = std::numeric_limits<double>::infinity();
  for (int j = 1; j <= spec.m(); ++j) {
    if (!(p(0) < p(j))) return AnalyticBound::invalid(kMethod, "p0_not_unique_minimum");
    pmin = std::min(pmin, p(j));
  }
  double xi = std::numeric_limits<double>::infinity();
  for (int j = 1; j <= spec.m(); ++j) xi = std::min(xi, spec.digit(j - 1) + spec.rho() - spec.digit(j));

  const double log_rho = std::log(spec.rho());
  const double log_xi = std::log(xi);
  AnalyticBound b;
  b.method = kMethod;
  b.xi = xi;
  b.value = (std::log(pmin) + (log_xi / log_rho - 1.0) * std::log(p(0))) / log_xi;
  b.valid = std::isfinite(b.value) && b.value < dim_at_zero(spec);
  if (!b.valid) b.reason = "gap_postcondition_failed";
  return b;
}

AnalyticBound biased_corollary_bound(double rho, double p0) {
  constexpr auto kMethod = Method::BiasedCorollary;
  if (!(rho > kGoldenThreshold && rho < 1.0)) return AnalyticBound::invalid(kMethod, "rho_below_golden");
  if (!(p0 > 0.0 && p0 < 1.0 - p0)) return AnalyticBound::invalid(kMethod, "not_biased_p0_lt_p1");
  AnalyticBound b;
  b.method = kMethod;
  b.k = 3;
  b.value = (2.0 / 3.0 * std::log(p0) + 1.0 / 3.0 * std::log(1.0 - p0)) / std::log(rho);
  b.valid = true;
  return b;
}

}  // namespace locdim

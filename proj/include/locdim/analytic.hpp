// Closed-form bounds on local dimensions.
#ifndef LOCDIM_ANALYTIC_HPP
#define LOCDIM_ANALYTIC_HPP

#include "locdim/ifs.hpp"

#include <optional>
#include <string>

namespace locdim {

enum class Method {
  DimAtZero,
  ErdosUpper,
  XiBiasedUpper,
  BiasedCorollary,
  CoverageUpper,
  CoverageLower,
};

const char* to_string(Method m);

/// Golden-ratio conjugate (sqrt(5)-1)/2.
inline const double kGoldenThreshold = 0.6180339887498949;
/// erdos_k gives up past this many terms.
inline constexpr int kErdosKCap = 64;

struct AnalyticBound {
  Method method = Method::DimAtZero;
  double value = 0.0;
  std::optional<int> k;    // Erdos count
  std::optional<double> xi;
  bool valid = false;
  std::string reason;      // machine-readable code when !valid

  static AnalyticBound invalid(Method m, std::string why) {
    AnalyticBound b;
    b.method = m;
    b.value = 0.0;
    b.valid = false;
    b.reason = std::move(why);
    return b;
  }
};

/// log p_0 / log rho.
double dim_at_zero(const IfsSpec& spec);

/// Smallest k >= 3 with rho^2 + ... + rho^k > 1, or nullopt when
/// rho <= (sqrt5-1)/2 or k would exceed kErdosKCap.
std::optional<int> erdos_k(double rho);

/// (1 - 1/k) log2/|log rho| for the unbiased Bernoulli convolution.
AnalyticBound erdos_upper_bound(double rho);
/// Same, but also checks that `spec` is an unbiased two-map system.
AnalyticBound erdos_upper_bound(const IfsSpec& spec);

/// [log(min_{j>0} p_j) + (log xi/log rho - 1) log p_0] / log xi with
/// xi = min_j (d_{j-1} + rho - d_j). Needs strict overlap and p_0 < p_j.
AnalyticBound xi_biased_upper_bound(const IfsSpec& spec);

/// (2/3 log p0 + 1/3 log(1-p0)) / log rho for rho > (sqrt5-1)/2, p0 < 1/2.
AnalyticBound biased_corollary_bound(double rho, double p0);

}  // namespace locdim

#endif  // LOCDIM_ANALYTIC_HPP

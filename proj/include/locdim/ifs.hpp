// Equicontractive iterated function systems S_j(x) = rho*x + d_j on [0,1].
#ifndef LOCDIM_IFS_HPP
#define LOCDIM_IFS_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace locdim {

/// Endpoint-coincidence tolerance used by every interval comparison.
inline constexpr double kEndpointEps = 1e-12;
/// Tolerance on sum(p) == 1 and on probability equality tests.
inline constexpr double kProbEps = 1e-12;

/// Word over the alphabet {0,...,m}, stored most-significant-first:
/// symbols[0] is applied outermost.
using Word = std::vector<std::uint8_t>;

std::string to_string(const Word& w);
Word parse_word(const std::string& s);

/// Closed interval. The openness flags are informational; arithmetic
/// treats both endpoints as closed.
struct Interval {
  double lo = 0.0;
  double hi = 1.0;
  bool open_lo = false;
  bool open_hi = false;

  static Interval closed(double lo, double hi) { return {lo, hi, false, false}; }
  static Interval open(double lo, double hi) { return {lo, hi, true, true}; }

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double x, double eps = kEndpointEps) const {
    return x >= lo - eps && x <= hi + eps;
  }
};

class IfsSpec {
 public:
  IfsSpec() = default;
  IfsSpec(double rho, Eigen::VectorXd digits, Eigen::VectorXd probs)
      : rho_(rho), digits_(std::move(digits)), probs_(std::move(probs)) {}

  double rho() const { return rho_; }
  const Eigen::VectorXd& digits() const { return digits_; }
  const Eigen::VectorXd& probs() const { return probs_; }
  double digit(int j) const { return digits_(j); }
  double prob(int j) const { return probs_(j); }

  /// Index of the last map; the alphabet is {0,...,m}.
  int m() const { return static_cast<int>(digits_.size()) - 1; }
  int alphabet_size() const { return static_cast<int>(digits_.size()); }

 private:
  double rho_ = 0.5;
  Eigen::VectorXd digits_;
  Eigen::VectorXd probs_;
};

enum class Invariant {
  RhoRange,
  DigitCount,
  ProbCount,
  FirstDigit,
  LastDigit,
  DigitOrder,
  DigitGap,
  ProbPositive,
  ProbSum,
};

const char* to_string(Invariant inv);

struct Violation {
  Invariant invariant;
  std::string detail;
};

/// Returns std::nullopt when every invariant holds, otherwise the first
/// violated one.
std::optional<Violation> validate(const IfsSpec& spec);

/// Throws std::invalid_argument naming the violated invariant.
void require_valid(const IfsSpec& spec);

/// S_w(x) = rho^|w| x + sum_i d_{w_i} rho^(i-1). Throws std::out_of_range
/// for a symbol outside the alphabet.
double map_point(const IfsSpec& spec, const Word& word, double x);
Interval map_interval(const IfsSpec& spec, const Word& word, const Interval& I);
/// p_w = prod_i p_{w_i}; the empty word has weight 1.
double word_weight(const IfsSpec& spec, const Word& word);

/// Two-map system with digits (0, 1-rho). Cantor bases (rho < 1/2) are
/// rejected unless `allow_cantor` is set.
IfsSpec build_bernoulli(double rho, double p0, bool allow_cantor = false);

/// m-fold self-convolution of a two-map system, rescaled to [0,1]: digits
/// j(1-rho)/m and binomial probabilities.
IfsSpec build_convolution(const IfsSpec& base, int folds);

/// Equally spaced digits j(1-rho)/m with the given probabilities.
IfsSpec build_uniform(double rho, const Eigen::VectorXd& probs);

/// d_j + rho > d_{j+1} for all consecutive digits.
bool strict_overlap(const IfsSpec& spec);

/// Strict overlap together with rho(d_{m-1}+rho) > d_1 and
/// d_m + rho d_1 < d_{m-1} + rho. Requires m >= 2.
bool unbiased_overlap(const IfsSpec& spec);

struct IsolatedPointReport {
  bool applies_biased = false;
  bool applies_unbiased = false;
  double dim_at_zero = 0.0;
};

IsolatedPointReport isolated_point_report(const IfsSpec& spec);

}  // namespace locdim

#endif  // LOCDIM_IFS_HPP

#include "locdim/ifs.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace locdim {

std::string to_string(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (auto c : w) {
    if (c < 10) {
      s.push_back(static_cast<char>('0' + c));
    } else {
      s += "(" + std::to_string(c) + ")";
    }
  }
  return s;
}

Word parse_word(const std::string& s) {
  Word w;
  w.reserve(s.size());
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad word symbol '" + std::string(1, c) + "'");
    w.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return w;
}

const char* to_string(Invariant inv) {
  switch (inv) {
    case Invariant::RhoRange: return "rho_in_open_unit_interval";
    case Invariant::DigitCount: return "at_least_two_maps";
    case Invariant::ProbCount: return "one_probability_per_map";
    case Invariant::FirstDigit: return "first_digit_zero";
    case Invariant::LastDigit: return "last_digit_one_minus_rho";
    case Invariant::DigitOrder: return "digits_strictly_increasing";
    case Invariant::DigitGap: return "digit_gap_at_most_rho";
    case Invariant::ProbPositive: return "probabilities_positive";
    case Invariant::ProbSum: return "probabilities_sum_to_one";
  }
  return "unknown";
}

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void check_word(const IfsSpec& spec, const Word& word) {
  for (auto c : word) {
    if (c > spec.m()) {
      throw std::out_of_range("symbol " + std::to_string(c) + " outside alphabet {0,...," +
                              std::to_string(spec.m()) + "}");
    }
  }
}

}  // namespace

std::optional<Violation> validate(const IfsSpec& spec) {
  const double rho = spec.rho();
  const auto& d = spec.digits();
  const auto& p = spec.probs();
  if (!(rho > 0.0 && rho < 1.0)) return Violation{Invariant::RhoRange, "rho=" + fmt(rho)};
  if (d.size() < 2) return Violation{Invariant::DigitCount, "m+1=" + std::to_string(d.size())};
  if (p.size() != d.size()) {
    return Violation{Invariant::ProbCount,
                     std::to_string(p.size()) + " probabilities for " + std::to_string(d.size()) + " maps"};
  }
  if (std::abs(d(0)) > kEndpointEps) return Violation{Invariant::FirstDigit, "d_0=" + fmt(d(0))};
  const Eigen::Index m = d.size() - 1;
  if (std::abs(d(m) - (1.0 - rho)) > kEndpointEps) {
    return Violation{Invariant::LastDigit, "d_m=" + fmt(d(m)) + " but 1-rho=" + fmt(1.0 - rho)};
  }
  for (Eigen::Index i = 1; i <= m; ++i) {
    const double gap = d(i) - d(i - 1);
    if (!(gap > 0.0)) {
      return Violation{Invariant::DigitOrder, "d_" + std::to_string(i) + " <= d_" + std::to_string(i - 1)};
    }
    if (gap > rho + kEndpointEps) {
      return Violation{Invariant::DigitGap, "d_" + std::to_string(i) + "-d_" + std::to_string(i - 1) + "=" +
                                                fmt(gap) + " > rho=" + fmt(rho)};
    }
  }
  for (Eigen::Index j = 0; j <= m; ++j) {
    if (!(p(j) > 0.0)) return Violation{Invariant::ProbPositive, "p_" + std::to_string(j) + "=" + fmt(p(j))};
  }
  if (std::abs(p.sum() - 1.0) > kProbEps) return Violation{Invariant::ProbSum, "sum(p)=" + fmt(p.sum())};
  return std::nullopt;
}

void require_valid(const IfsSpec& spec) {
  if (auto v = validate(spec)) {
    throw std::invalid_argument(std::string("invalid IFS (") + to_string(v->invariant) + "): " + v->detail);
  }
}

double map_point(const IfsSpec& spec, const Word& word, double x) {
  check_word(spec, word);
  double y = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it) y = spec.rho() * y + spec.digit(*it);
  return y;
}

Interval map_interval(const IfsSpec& spec, const Word& word, const Interval& I) {
  return {map_point(spec, word, I.lo), map_point(spec, word, I.hi), I.open_lo, I.open_hi};
}

double word_weight(const IfsSpec& spec, const Word& word) {
  check_word(spec, word);
  double w = 1.0;
  for (auto c : word) w *= spec.prob(c);
  return w;
}

IfsSpec build_bernoulli(double rho, double p0, bool allow_cantor) {
  if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("rho must lie in (0,1), got " + fmt(rho));
  if (!(p0 > 0.0 && p0 < 1.0)) throw std::invalid_argument("p0 must lie in (0,1), got " + fmt(p0));
  if (!allow_cantor && 1.0 - rho > rho) {
    throw std::invalid_argument("rho=" + fmt(rho) + " < 1/2: gap 1-rho exceeds rho, support is a Cantor set");
  }
  return IfsSpec(rho, Eigen::Vector2d(0.0, 1.0 - rho), Eigen::Vector2d(p0, 1.0 - p0));
}

IfsSpec build_uniform(double rho, const Eigen::VectorXd& probs) {
  const Eigen::Index m = probs.size() - 1;
  if (m < 1) throw std::invalid_argument("need at least two maps");
  Eigen::VectorXd d = Eigen::VectorXd::LinSpaced(m + 1, 0.0, static_cast<double>(m)) * ((1.0 - rho) / m);
  d(m) = 1.0 - rho;
  return IfsSpec(rho, std::move(d), probs);
}

IfsSpec build_convolution(const IfsSpec& base, int folds) {
  if (base.m() != 1) throw std::invalid_argument("convolution base must be a two-map system");
  if (folds < 1) throw std::invalid_argument("folds must be >= 1");
  if (folds == 1) return base;
  const double p = base.prob(0);
  // Coefficients of (p + q t)^folds: p_j = C(m,j) p^(m-j) q^j, where the
  // digit j(1-rho)/m counts j copies of the right-hand map.
  Eigen::VectorXd probs = Eigen::VectorXd::Zero(folds + 1);
  probs(0) = 1.0;
  for (int f = 0; f < folds; ++f) {
    for (int j = f + 1; j >= 1; --j) probs(j) = probs(j) * p + probs(j - 1) * (1.0 - p);
    probs(0) *= p;
  }
  return build_uniform(base.rho(), probs);
}

bool strict_overlap(const IfsSpec& spec) {
  for (int j = 0; j < spec.m(); ++j) {
    if (!(spec.digit(j) + spec.rho() > spec.digit(j + 1))) return false;
  }
  return true;
}

bool unbiased_overlap(const IfsSpec& spec) {
  const int m = spec.m();
  if (m < 2) throw std::invalid_argument("unbiased overlap needs m >= 2");
  const double rho = spec.rho();
  const double d1 = spec.digit(1);
  const double dm1 = spec.digit(m - 1);
  const double dm = spec.digit(m);
  return strict_overlap(spec) && rho * (dm1 + rho) > d1 && dm + rho * d1 < dm1 + rho;
}

IsolatedPointReport isolated_point_report(const IfsSpec& spec) {
  IsolatedPointReport r;
  const int m = spec.m();
  const auto& p = spec.probs();
  r.dim_at_zero = std::log(p(0)) / std::log(spec.rho());

  bool p0_min = true;
  for (int j = 1; j <= m; ++j) p0_min = p0_min && p(0) < p(j);
  r.applies_biased = p0_min && strict_overlap(spec);

  if (m >= 2 && std::abs(p(0) - p(m)) <= kProbEps) {
    bool ends_min = true;
    for (int j = 1; j < m; ++j) ends_min = ends_min && p(0) < p(j) - kProbEps;
    r.applies_unbiased = ends_min && unbiased_overlap(spec);
  }
  return r;
}

}  // namespace locdim

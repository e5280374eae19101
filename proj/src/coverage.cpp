#include "locdim/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace locdim {

namespace {

// Offsets S_w(0) and weights p_w for all words of length n, lexicographic.
struct LevelOffsets {
  std::vector<double> offset;
  std::vector<double> weight;
  double scale = 1.0;  // rho^n
};

void check_limits(const IfsSpec& spec, int n, const EnumerationLimits& limits) {
  if (n < 0) throw std::invalid_argument("level must be >= 0");
  if (n > limits.max_n) {
    throw std::length_error("level " + std::to_string(n) + " exceeds cap " + std::to_string(limits.max_n));
  }
  double count = std::pow(static_cast<double>(spec.alphabet_size()), n);
  if (count > static_cast<double>(limits.max_images)) {
    throw std::length_error("(m+1)^n = " + std::to_string(count) + " images exceeds cap " +
                            std::to_string(limits.max_images));
  }
}

LevelOffsets level_offsets(const IfsSpec& spec, int n) {
  const int a = spec.alphabet_size();
  LevelOffsets lv;
  lv.offset = {0.0};
  lv.weight = {1.0};
  double scale = 1.0;
  for (int depth = 0; depth < n; ++depth) {
    std::vector<double> off(lv.offset.size() * a);
    std::vector<double> wt(off.size());
    for (std::size_t i = 0; i < lv.offset.size(); ++i) {
      for (int j = 0; j < a; ++j) {
        off[i * a + j] = lv.offset[i] + scale * spec.digit(j);
        wt[i * a + j] = lv.weight[i] * spec.prob(j);
      }
    }
    lv.offset = std::move(off);
    lv.weight = std::move(wt);
    scale *= spec.rho();
  }
  lv.scale = scale;
  return lv;
}

struct Event {
  double x;
  double start;  // weight starting here
  double end;    // weight ending here
};

CoverageProfile profile_from_events(std::vector<Event>& ev) {
  std::sort(ev.begin(), ev.end(), [](const Event& l, const Event& r) { return l.x < r.x; });
  CoverageProfile prof;
  double running = 0.0;  // weight of the cell to the left of the current cluster
  std::size_t i = 0;
  while (i < ev.size()) {
    const double head = ev[i].x;
    double starts = 0.0;
    double ends = 0.0;
    std::size_t j = i;
    for (; j < ev.size() && ev[j].x - head <= kEndpointEps; ++j) {
      starts += ev[j].start;
      ends += ev[j].end;
    }
    prof.breakpoints.push_back(head);
    prof.point_weights.push_back(running + starts);
    running = running + starts - ends;
    if (j < ev.size()) prof.cell_weights.push_back(running);
    i = j;
  }
  return prof;
}

CoverageProfile profile_from_level(const LevelOffsets& lv, const Interval& I) {
  std::vector<Event> ev;
  ev.reserve(2 * lv.offset.size());
  for (std::size_t i = 0; i < lv.offset.size(); ++i) {
    ev.push_back({lv.offset[i] + lv.scale * I.lo, lv.weight[i], 0.0});
    ev.push_back({lv.offset[i] + lv.scale * I.hi, 0.0, lv.weight[i]});
  }
  return profile_from_events(ev);
}

}  // namespace

std::vector<WeightedInterval> enumerate_images(const IfsSpec& spec, const Interval& I, int n,
                                               const EnumerationLimits& limits) {
  check_limits(spec, n, limits);
  const auto lv = level_offsets(spec, n);
  const std::size_t a = static_cast<std::size_t>(spec.alphabet_size());
  std::vector<WeightedInterval> out(lv.offset.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    Word w(static_cast<std::size_t>(n));
    std::size_t code = i;
    for (int pos = n - 1; pos >= 0; --pos) {
      w[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(code % a);
      code /= a;
    }
    out[i] = {lv.offset[i] + lv.scale * I.lo, lv.offset[i] + lv.scale * I.hi, lv.weight[i], std::move(w)};
  }
  return out;
}

double CoverageProfile::value_at(double x) const {
  if (breakpoints.size() < 2 || x < breakpoints.front() || x > breakpoints.back()) return 0.0;
  auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), x);
  auto k = static_cast<std::size_t>(std::distance(breakpoints.begin(), it)) - 1;
  if (k >= cell_weights.size()) k = cell_weights.size() - 1;
  return cell_weights[k];
}

CoverageProfile coverage_profile(std::span<const WeightedInterval> images) {
  std::vector<Event> ev;
  ev.reserve(2 * images.size());
  for (const auto& im : images) {
    ev.push_back({im.lo, im.weight, 0.0});
    ev.push_back({im.hi, 0.0, im.weight});
  }
  return profile_from_events(ev);
}

CoverageProfile level_profile(const IfsSpec& spec, const Interval& I, int n, const EnumerationLimits& limits) {
  check_limits(spec, n, limits);
  return profile_from_level(level_offsets(spec, n), I);
}

double min_coverage(const CoverageProfile& profile, const Interval& I) {
  std::vector<double> cuts = {I.lo, I.hi};
  for (double b : profile.breakpoints) {
    if (b > I.lo + kEndpointEps && b < I.hi - kEndpointEps) cuts.push_back(b);
  }
  std::sort(cuts.begin(), cuts.end());
  double k = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    k = std::min(k, profile.value_at(0.5 * (cuts[i] + cuts[i + 1])));
  }
  return std::isfinite(k) ? k : 0.0;
}

double min_coverage(const IfsSpec& spec, const Interval& I, int n) {
  return min_coverage(level_profile(spec, I, n), I);
}

SupCoverage sup_coverage(const CoverageProfile& profile) {
  SupCoverage s;
  s.value = -1.0;
  for (std::size_t k = 0; k < profile.cell_count(); ++k) {
    if (profile.cell_weights[k] > s.value + 1e-14) {
      s.value = profile.cell_weights[k];
      s.witness = profile.cell(k);
    }
  }
  if (s.value < 0.0) s.value = 0.0;
  s.closed_value = s.value;
  for (double w : profile.point_weights) s.closed_value = std::max(s.closed_value, w);
  return s;
}

SupCoverage sup_coverage(const IfsSpec& spec, int n) {
  return sup_coverage(level_profile(spec, Interval::closed(0.0, 1.0), n));
}

namespace {

double descend(const IfsSpec& spec, double x, int depth, double offset, double scale, double weight,
               const Interval& I, double hull_lo, double hull_hi) {
  if (depth == 0) {
    const double lo = offset + scale * I.lo;
    const double hi = offset + scale * I.hi;
    return (x >= lo - kEndpointEps && x <= hi + kEndpointEps) ? weight : 0.0;
  }
  double total = 0.0;
  const double child_scale = scale * spec.rho();
  for (int j = 0; j <= spec.m(); ++j) {
    const double off = offset + scale * spec.digit(j);
    if (x < off + child_scale * hull_lo - kEndpointEps || x > off + child_scale * hull_hi + kEndpointEps) continue;
    total += descend(spec, x, depth - 1, off, child_scale, weight * spec.prob(j), I, hull_lo, hull_hi);
  }
  return total;
}

}  // namespace

double pointwise_N(const IfsSpec& spec, double x, int n, const Interval& I) {
  if (n < 0) throw std::invalid_argument("level must be >= 0");
  const double hull_lo = std::min(0.0, I.lo);
  const double hull_hi = std::max(1.0, I.hi);
  return descend(spec, x, n, 0.0, 1.0, 1.0, I, hull_lo, hull_hi);
}

double direct_admissible_limit(const IfsSpec& spec) {
  double gap = 0.0;
  for (int j = 1; j <= spec.m(); ++j) gap = std::max(gap, spec.digit(j) - spec.digit(j - 1));
  return 0.5 * (1.0 - gap / spec.rho());
}

Interval central_candidate(const IfsSpec& spec) {
  const double a = 0.5 * direct_admissible_limit(spec);
  return Interval::open(a, 1.0 - a);
}

Admissibility admissible_interval(const IfsSpec& spec, const Interval& I, int n_max) {
  Admissibility r;
  const double limit = direct_admissible_limit(spec);
  r.a = 0.5 * limit;
  if (!(limit > 0.0)) {
    r.note = "no admissible (a,1-a): level-one images never connect";
    return r;
  }
  const double b = I.lo;
  if (std::abs(I.lo + I.hi - 1.0) > kEndpointEps) {
    r.note = "interval is not symmetric about 1/2";
    return r;
  }
  if (b < limit) {
    r.ok = true;
    r.n = 0;
    r.note = "level-one images connected";
    return r;
  }
  for (int n = 1; n <= n_max; ++n) {
    auto lv = level_offsets(spec, n);
    std::vector<std::pair<double, double>> parts(lv.offset.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
      parts[i] = {lv.offset[i] + lv.scale * I.lo, lv.offset[i] + lv.scale * I.hi};
    }
    std::sort(parts.begin(), parts.end());
    // Open images: a touching pair leaves its shared endpoint uncovered.
    bool covered = false;
    double run_lo = parts.front().first;
    double run_hi = parts.front().second;
    for (std::size_t i = 1; i <= parts.size(); ++i) {
      const bool breaks = i == parts.size() || parts[i].first >= run_hi - kEndpointEps;
      if (breaks) {
        if (run_lo <= r.a && run_hi >= 1.0 - r.a) covered = true;
        if (i < parts.size()) {
          run_lo = parts[i].first;
          run_hi = parts[i].second;
        }
      } else {
        run_hi = std::max(run_hi, parts[i].second);
      }
    }
    if (covered) {
      r.ok = true;
      r.n = n;
      r.note = "union of level-" + std::to_string(n) + " images covers (a,1-a)";
      return r;
    }
  }
  r.note = "not verified up to level " + std::to_string(n_max);
  return r;
}

BoundResult upper_bound_at(const IfsSpec& spec, const Interval& I, int n) {
  BoundResult r;
  r.rho = spec.rho();
  r.method = Method::CoverageUpper;
  r.n = n;
  r.interval = I;
  if (n < 1) {
    r.reason = "level_must_be_positive";
    return r;
  }
  r.coverage = min_coverage(spec, I, n);
  if (!(r.coverage > 0.0)) {
    r.reason = "zero_min_coverage";
    return r;
  }
  r.value = coverage_exponent(r.coverage, spec.rho(), n);
  r.valid = true;
  return r;
}

BoundResult upper_bound(const IfsSpec& spec, int n_max, const UpperBoundOptions& opts) {
  BoundResult best;
  best.rho = spec.rho();
  best.method = Method::CoverageUpper;
  best.reason = "no_admissible_interval_with_positive_k";
  if (n_max < 1) {
    best.reason = "level_must_be_positive";
    return best;
  }
  std::vector<Interval> cands;
  if (opts.include_central && direct_admissible_limit(spec) > 0.0) cands.push_back(central_candidate(spec));
  for (const auto& c : opts.candidates) {
    if (admissible_interval(spec, c, opts.admissible_n_max).ok) cands.push_back(c);
  }
  for (const auto& I : cands) {
    for (int n = 1; n <= n_max; ++n) {
      auto prof = level_profile(spec, I, n);
      const double k = min_coverage(prof, I);
      if (!(k > 0.0)) continue;
      const double v = coverage_exponent(k, spec.rho(), n);
      if (!best.valid || v < best.value - 1e-15) {
        best.valid = true;
        best.reason.clear();
        best.value = v;
        best.coverage = k;
        best.n = n;
        best.interval = I;
      }
    }
  }
  best.hypothesis_checked = best.valid;
  return best;
}

BoundResult lower_bound(const CoverageProfile& level_n, double rho, int n, const LowerBoundOptions& opts) {
  if (n < 1) throw std::invalid_argument("lower bound needs n >= 1");
  BoundResult r;
  r.rho = rho;
  r.method = Method::CoverageLower;
  r.n = n;
  r.interval = Interval::closed(0.0, 1.0);
  r.awsc_required = true;
  r.awsc_certified = opts.awsc_certified;
  const auto s = sup_coverage(level_n);
  r.coverage = opts.closed_sup ? s.closed_value : s.value;
  r.witness = s.witness;
  r.value = coverage_exponent(r.coverage, rho, n);
  r.valid = std::isfinite(r.value);
  if (!r.valid) r.reason = "empty_profile";
  return r;
}

BoundResult lower_bound(const IfsSpec& spec, int n, const LowerBoundOptions& opts) {
  if (n < 1) throw std::invalid_argument("lower bound needs n >= 1");
  return lower_bound(level_profile(spec, Interval::closed(0.0, 1.0), n), spec.rho(), n, opts);
}

BoundResult best_lower_bound(const IfsSpec& spec, int n_max, const LowerBoundOptions& opts) {
  if (n_max < 1) throw std::invalid_argument("lower bound needs n >= 1");
  BoundResult best;
  for (int n = 1; n <= n_max; ++n) {
    auto r = lower_bound(spec, n, opts);
    if (n == 1 || r.value > best.value + 1e-15) best = r;
  }
  return best;
}

}  // namespace locdim

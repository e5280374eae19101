#include "locdim/sweep.hpp"

#include "locdim/transitions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace locdim {

using nlohmann::json;

namespace {

Eigen::VectorXd to_vector(const json& arr, const char* what) {
  if (!arr.is_array()) throw ConfigError(std::string(what) + " must be an array");
  Eigen::VectorXd v(static_cast<Eigen::Index>(arr.size()));
  for (std::size_t i = 0; i < arr.size(); ++i) v(static_cast<Eigen::Index>(i)) = arr[i].get<double>();
  return v;
}

std::string num(double v, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

}  // namespace

IfsSpec IfsTemplate::instantiate(std::optional<double> rho_override) const {
  const auto r = rho_override ? rho_override : rho;
  if (!r) throw ConfigError("IFS has no rho");
  try {
    switch (type) {
      case Type::Explicit: {
        if (rho_override && rho && std::abs(*rho_override - *rho) > 0.0) {
          throw ConfigError("an explicit IFS fixes rho and cannot be swept");
        }
        IfsSpec s(*r, digits, probs);
        require_valid(s);
        return s;
      }
      case Type::Bernoulli:
        return build_bernoulli(*r, p0);
      case Type::Convolution: {
        auto s = build_convolution(build_bernoulli(*r, p0, true), folds);
        require_valid(s);
        return s;
      }
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError("unknown IFS type");
}

IfsTemplate parse_ifs_template(const json& j) {
  try {
    IfsTemplate t;
    const auto type = j.at("type").get<std::string>();
    if (j.contains("rho")) t.rho = j.at("rho").get<double>();
    if (type == "explicit") {
      t.type = IfsTemplate::Type::Explicit;
      t.digits = to_vector(j.at("digits"), "digits");
      t.probs = to_vector(j.at("probs"), "probs");
    } else if (type == "bernoulli") {
      t.type = IfsTemplate::Type::Bernoulli;
      t.p0 = j.value("p0", 0.5);
    } else if (type == "convolution") {
      t.type = IfsTemplate::Type::Convolution;
      const auto base = parse_ifs_template(j.at("base"));
      if (base.type != IfsTemplate::Type::Bernoulli) throw ConfigError("convolution base must be of type bernoulli");
      t.p0 = base.p0;
      if (!t.rho) t.rho = base.rho;
      t.folds = j.at("m").get<int>();
      if (t.folds < 1) throw ConfigError("convolution m must be >= 1");
    } else {
      throw ConfigError("unknown IFS type '" + type + "'");
    }
    return t;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad IFS JSON: ") + e.what());
  }
}

IfsSpec parse_ifs(const json& j) { return parse_ifs_template(j).instantiate(); }

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "tsv") return OutputFormat::Tsv;
  if (s == "json") return OutputFormat::Json;
  throw ConfigError("unknown format '" + s + "' (csv|tsv|json)");
}

void SweepConfig::validate() const {
  if (grid.empty()) {
    if (!(rho_min > 0.0 && rho_min < rho_max && rho_max < 1.0)) throw ConfigError("need 0 < rho_min < rho_max < 1");
    if (!(step > 0.0)) throw ConfigError("step must be positive");
  } else {
    for (double r : grid) {
      if (!(r > 0.0 && r < 1.0)) throw ConfigError("grid value " + num(r) + " outside (0,1)");
    }
  }
  if (n_max < 1) throw ConfigError("n_max must be >= 1");
  if (include_transitions && !ifs.is_two_map()) {
    throw ConfigError("transition points are only enumerated for two-map systems");
  }
}

std::vector<double> SweepConfig::rho_grid() const {
  if (!grid.empty()) {
    auto g = grid;
    std::sort(g.begin(), g.end());
    return g;
  }
  std::vector<double> g;
  const auto count = static_cast<long>(std::floor((rho_max - rho_min) / step + 1e-9));
  for (long i = 0; i <= count; ++i) {
    // Round to the step's decimal grid so printed values are stable.
    g.push_back(std::round((rho_min + static_cast<double>(i) * step) * 1e12) / 1e12);
  }
  return g;
}

SweepConfig parse_sweep_config(const json& j) {
  try {
    SweepConfig c;
    c.ifs = parse_ifs_template(j.at("ifs"));
    c.rho_min = j.value("rho_min", c.rho_min);
    c.rho_max = j.value("rho_max", c.rho_max);
    c.step = j.value("step", c.step);
    if (j.contains("grid")) c.grid = j.at("grid").get<std::vector<double>>();
    c.n_max = j.value("n_max", c.n_max);
    if (j.contains("candidates")) {
      c.upper.candidates.clear();
      for (const auto& iv : j.at("candidates")) {
        c.upper.candidates.push_back(Interval::open(iv.at(0).get<double>(), iv.at(1).get<double>()));
      }
    }
    c.upper.include_central = j.value("include_central", true);
    c.upper.admissible_n_max = j.value("admissible_n_max", c.upper.admissible_n_max);
    c.include_transitions = j.value("include_transitions", false);
    if (j.contains("certificates")) {
      for (const auto& p : j.at("certificates")) {
        c.certificates.emplace_back(p.is_string() ? IntPolynomial::parse(p.get<std::string>()).coefficients()
                                                  : p.get<std::vector<std::int64_t>>());
      }
    }
    c.format = parse_format(j.value("format", std::string("csv")));
    c.out = j.value("out", std::string());
    return c;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad sweep config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

std::vector<SweepRow> sweep_point(const SweepConfig& config, double rho, bool is_transition) {
  const auto spec = config.ifs.instantiate(rho);
  bool certified = false;
  for (const auto& p : config.certificates) certified = certified || certify_rho(rho, p).awsc_known;

  std::vector<SweepRow> rows;
  auto push = [&](Method m, std::optional<int> n, std::optional<Interval> I, double v, bool valid, bool cert) {
    rows.push_back({rho, m, n, I, v, valid, cert, is_transition});
  };

  push(Method::DimAtZero, std::nullopt, std::nullopt, dim_at_zero(spec), true, false);

  const bool two_map = spec.m() == 1;
  const bool unbiased = two_map && std::abs(spec.prob(0) - spec.prob(1)) <= kProbEps;
  if (unbiased) {
    const auto b = erdos_upper_bound(spec);
    push(Method::ErdosUpper, b.k, std::nullopt, b.value, b.valid, false);
  } else {
    const auto xi = xi_biased_upper_bound(spec);
    push(Method::XiBiasedUpper, std::nullopt, std::nullopt, xi.value, xi.valid, false);
    if (two_map) {
      const auto c = biased_corollary_bound(rho, spec.prob(0));
      push(Method::BiasedCorollary, c.k, std::nullopt, c.value, c.valid, false);
    }
  }

  const auto up = upper_bound(spec, config.n_max, config.upper);
  push(Method::CoverageUpper, up.valid ? std::optional<int>(up.n) : std::nullopt, up.valid ? up.interval : std::nullopt,
       up.value, up.valid, false);

  LowerBoundOptions lo_opts;
  lo_opts.awsc_certified = certified;
  lo_opts.closed_sup = is_transition;
  const auto lo = best_lower_bound(spec, config.n_max, lo_opts);
  push(Method::CoverageLower, lo.n, lo.interval, lo.value, lo.valid, certified);
  return rows;
}

std::vector<SweepRow> sweep(const SweepConfig& config) {
  config.validate();
  std::vector<std::pair<double, bool>> points;
  for (double r : config.rho_grid()) points.emplace_back(r, false);
  if (config.include_transitions) {
    const auto g = config.rho_grid();
    const auto set = transition_set(config.n_max, Interval::closed(g.front(), g.back()));
    for (const auto& r : set.roots) points.emplace_back(r.rho, true);
  }
  std::vector<SweepRow> rows;
  for (const auto& [rho, tr] : points) {
    auto pr = sweep_point(config, rho, tr);
    rows.insert(rows.end(), pr.begin(), pr.end());
  }
  std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    if (a.rho != b.rho) return a.rho < b.rho;
    if (a.is_transition != b.is_transition) return !a.is_transition;
    return static_cast<int>(a.method) < static_cast<int>(b.method);
  });
  return rows;
}

std::string format_rows(const std::vector<SweepRow>& rows, OutputFormat format) {
  static const char* kColumns[] = {"rho",         "method", "n",     "interval_lo",   "interval_hi",
                                   "value",       "valid",  "awsc_certified", "is_transition"};
  std::ostringstream os;
  if (format == OutputFormat::Json) {
    json arr = json::array();
    for (const auto& r : rows) {
      json o;
      o["rho"] = r.rho;
      o["method"] = to_string(r.method);
      o["n"] = r.n ? json(*r.n) : json(nullptr);
      o["interval_lo"] = r.interval ? json(r.interval->lo) : json(nullptr);
      o["interval_hi"] = r.interval ? json(r.interval->hi) : json(nullptr);
      o["value"] = r.valid ? json(r.value) : json(nullptr);
      o["valid"] = r.valid;
      o["awsc_certified"] = r.awsc_certified;
      o["is_transition"] = r.is_transition;
      arr.push_back(std::move(o));
    }
    os << arr.dump(1) << "\n";
    return os.str();
  }
  const char sep = format == OutputFormat::Csv ? ',' : '\t';
  for (std::size_t i = 0; i < std::size(kColumns); ++i) os << (i ? std::string(1, sep) : "") << kColumns[i];
  os << "\n";
  for (const auto& r : rows) {
    os << num(r.rho, 15) << sep << to_string(r.method) << sep << (r.n ? std::to_string(*r.n) : "") << sep
       << (r.interval ? num(r.interval->lo) : "") << sep << (r.interval ? num(r.interval->hi) : "") << sep
       << (r.valid ? num(r.value) : "") << sep << (r.valid ? 1 : 0) << sep << (r.awsc_certified ? 1 : 0) << sep
       << (r.is_transition ? 1 : 0) << "\n";
  }
  return os.str();
}

std::string images_report(const IfsSpec& spec, const Interval& I, int n) {
  auto images = enumerate_images(spec, I, n);
  std::stable_sort(images.begin(), images.end(),
                   [](const WeightedInterval& a, const WeightedInterval& b) { return a.lo < b.lo - kEndpointEps; });
  std::ostringstream os;
  os << "word\tlo\thi\tweight\n";
  for (const auto& im : images) {
    os << (n == 0 ? std::string("-") : to_string(im.word)) << '\t' << fixed(im.lo, 5) << '\t' << fixed(im.hi, 5)
       << '\t' << num(im.weight) << "\n";
  }
  return os.str();
}

const std::vector<Interval>& lower_bound_table_ranges() {
  static const std::vector<Interval> ranges = {
      Interval::closed(0.50, 0.55), Interval::closed(0.55, 0.60), Interval::closed(0.60, 0.65),
      Interval::closed(0.65, 0.70), Interval::closed(0.70, 0.75), Interval::closed(0.75, 0.80),
      Interval::closed(0.80, 0.851),
  };
  return ranges;
}

std::vector<LowerBoundTableRow> lower_bound_table(int n_max) {
  std::vector<LowerBoundTableRow> rows;
  for (const auto& range : lower_bound_table_ranges()) {
    const auto m = range_min_lower_bound(0.5, n_max, range);
    rows.push_back({range, m.value, m.rho, m.n, m.point_value});
  }
  return rows;
}

std::string table_report(TableKind kind, int n_max) {
  switch (kind) {
    case TableKind::Images03To07:
      return images_report(build_bernoulli(0.8, 0.5), Interval::closed(0.3, 0.7), 4);
    case TableKind::ImagesUnit:
      return images_report(build_bernoulli(0.8, 0.5), Interval::closed(0.0, 1.0), 4);
    case TableKind::LowerBounds: {
      std::ostringstream os;
      os << "range_lo\trange_hi\tlower_bound\trho_at_min\tn\ttransition_point_min\n";
      for (const auto& r : lower_bound_table(n_max)) {
        os << fixed(r.range.lo, 3) << '\t' << fixed(r.range.hi, 3) << '\t' << fixed(r.bound, 6) << '\t'
           << fixed(r.rho_at_min, 9) << '\t' << r.n << '\t'
           << (std::isfinite(r.transition_point_min) ? fixed(r.transition_point_min, 6) : "-") << "\n";
      }
      return os.str();
    }
  }
  return {};
}

}  // namespace locdim

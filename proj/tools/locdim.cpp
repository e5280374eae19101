// locdim: bounds on local dimensions of equicontractive self-similar measures.
#include "locdim/algebraic.hpp"
#include "locdim/analytic.hpp"
#include "locdim/coverage.hpp"
#include "locdim/expansions.hpp"
#include "locdim/ifs.hpp"
#include "locdim/sweep.hpp"
#include "locdim/transitions.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace locdim;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitHypothesis = 3;

struct IfsOptions {
  std::string file;
  double rho = 0.0;
  double p0 = 0.5;
  int m = 1;
};

void add_ifs_options(CLI::App* cmd, IfsOptions& o) {
  cmd->add_option("--ifs", o.file, "IFS JSON file");
  cmd->add_option("--rho", o.rho, "contraction factor");
  cmd->add_option("--p0", o.p0, "probability of the map S_0 (two-map base)");
  cmd->add_option("--m", o.m, "convolution folds of the two-map base");
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

IfsTemplate ifs_template(const IfsOptions& o, bool need_rho) {
  IfsTemplate t;
  if (!o.file.empty()) {
    t = parse_ifs_template(read_json(o.file));
    if (o.rho > 0.0) t.rho = o.rho;
  } else {
    t.type = o.m > 1 ? IfsTemplate::Type::Convolution : IfsTemplate::Type::Bernoulli;
    t.p0 = o.p0;
    t.folds = o.m;
    if (o.rho > 0.0) t.rho = o.rho;
  }
  if (need_rho && !t.rho) throw ConfigError("--rho or --ifs with a rho is required");
  return t;
}

Interval parse_interval(const std::string& s, bool open) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw ConfigError("interval must be lo,hi");
  try {
    const double lo = std::stod(s.substr(0, comma));
    const double hi = std::stod(s.substr(comma + 1));
    if (!(lo <= hi)) throw ConfigError("interval needs lo <= hi");
    return open ? Interval::open(lo, hi) : Interval::closed(lo, hi);
  } catch (const std::logic_error&) {
    throw ConfigError("bad interval '" + s + "'");
  }
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << text;
}

std::string g(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string describe(const BoundResult& r) {
  std::ostringstream os;
  os << "method\t" << to_string(r.method) << "\n"
     << "rho\t" << g(r.rho) << "\n"
     << "valid\t" << (r.valid ? 1 : 0) << "\n";
  if (!r.reason.empty()) os << "reason\t" << r.reason << "\n";
  if (r.valid) {
    os << "n\t" << r.n << "\n";
    if (r.interval) os << "interval\t" << g(r.interval->lo) << "," << g(r.interval->hi) << "\n";
    os << "coverage\t" << g(r.coverage) << "\n";
    if (r.witness) os << "witness\t" << g(r.witness->lo) << "," << g(r.witness->hi) << "\n";
    os << "value\t" << g(r.value) << "\n";
  }
  if (r.awsc_required) os << "awsc_required\t1\nawsc_certified\t" << (r.awsc_certified ? 1 : 0) << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounds on local dimensions of equicontractive self-similar measures"};
  app.require_subcommand(1);
  std::string out;
  std::string format = "csv";

  // upper
  IfsOptions up_ifs;
  int up_n = 0;
  int up_nmax = 10;
  std::string up_interval;
  auto* up = app.add_subcommand("upper", "coverage upper bound log k/(n log rho)");
  add_ifs_options(up, up_ifs);
  up->add_option("--n", up_n, "fixed level (requires --interval)");
  up->add_option("--n-max", up_nmax, "largest level searched");
  up->add_option("--interval", up_interval, "fixed open interval lo,hi");
  up->add_option("--out", out);

  // lower
  IfsOptions lo_ifs;
  int lo_n = 0;
  int lo_nmax = 10;
  std::string lo_cert;
  auto* lo = app.add_subcommand("lower", "coverage lower bound log sup N_n/(n log rho)");
  add_ifs_options(lo, lo_ifs);
  lo->add_option("--n", lo_n, "fixed level");
  lo->add_option("--n-max", lo_nmax, "largest level searched");
  lo->add_option("--certificate", lo_cert, "minimal polynomial of 1/rho, degree-descending");
  lo->add_option("--out", out);

  // images
  IfsOptions im_ifs;
  int im_n = 4;
  std::string im_interval = "0,1";
  auto* im = app.add_subcommand("images", "list S_w(I) for |w| = n, sorted by left endpoint");
  add_ifs_options(im, im_ifs);
  im->add_option("--n", im_n);
  im->add_option("--interval", im_interval);
  im->add_option("--out", out);

  // expand
  IfsOptions ex_ifs;
  double ex_x = 0.5;
  int ex_n = 40;
  std::string ex_kind = "lazy";
  auto* ex = app.add_subcommand("expand", "lazy or L/M/R digit expansion of x");
  add_ifs_options(ex, ex_ifs);
  ex->add_option("--x", ex_x)->required();
  ex->add_option("--n", ex_n, "number of digits");
  ex->add_option("--kind", ex_kind)->check(CLI::IsMember({"lazy", "lmr"}));
  ex->add_option("--out", out);

  // transitions
  int tr_n = 4;
  std::string tr_range = "0.5,1";
  auto* tr = app.add_subcommand("transitions", "rho with S_sigma(0) = S_tau(1), |sigma| = |tau| = n");
  tr->add_option("--n", tr_n);
  tr->add_option("--range", tr_range);
  tr->add_option("--out", out);

  // classify
  std::string cl_poly;
  double cl_rho = 0.0;
  auto* cl = app.add_subcommand("classify", "Pisot/Salem classification of a monic integer polynomial");
  cl->add_option("--poly", cl_poly, "coefficients, degree-descending")->required();
  cl->add_option("--rho", cl_rho, "also certify this contraction factor");
  cl->add_option("--out", out);

  // sweep
  IfsOptions sw_ifs;
  std::string sw_config;
  SweepConfig sw;
  std::vector<std::string> sw_certs;
  auto* swc = app.add_subcommand("sweep", "bounds over a grid of rho (CSV/TSV/JSON)");
  add_ifs_options(swc, sw_ifs);
  swc->add_option("--config", sw_config, "sweep config JSON");
  swc->add_option("--rho-min", sw.rho_min);
  swc->add_option("--rho-max", sw.rho_max);
  swc->add_option("--step", sw.step);
  swc->add_option("--n-max", sw.n_max);
  swc->add_flag("--include-transitions", sw.include_transitions);
  swc->add_option("--certificate", sw_certs, "Pisot/Salem polynomial(s) certifying grid rho");
  swc->add_option("--format", format)->check(CLI::IsMember({"csv", "tsv", "json"}));
  swc->add_option("--out", out);

  // table
  int tb_kind = 1;
  int tb_nmax = 10;
  auto* tb = app.add_subcommand("table", "regenerate table 1 (images of [0.3,0.7]), 2 (images of [0,1]) or 3 (lower bounds)");
  tb->add_option("--kind", tb_kind)->check(CLI::Range(1, 3));
  tb->add_option("--n-max", tb_nmax);
  tb->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*up) {
      const auto spec = ifs_template(up_ifs, true).instantiate();
      BoundResult r;
      if (up_n > 0) {
        if (up_interval.empty()) throw ConfigError("--n requires --interval");
        r = upper_bound_at(spec, parse_interval(up_interval, true), up_n);
      } else {
        UpperBoundOptions opts;
        if (!up_interval.empty()) {
          opts.candidates = {parse_interval(up_interval, true)};
          opts.include_central = false;
        }
        r = upper_bound(spec, up_nmax, opts);
      }
      emit(describe(r), out);
      return r.valid ? 0 : kExitHypothesis;
    }
    if (*lo) {
      const auto spec = ifs_template(lo_ifs, true).instantiate();
      std::optional<IntPolynomial> poly;
      if (!lo_cert.empty()) poly = IntPolynomial::parse(lo_cert);
      const auto cert = certify_rho(spec.rho(), poly);
      LowerBoundOptions opts;
      opts.awsc_certified = cert.awsc_known;
      const auto r = lo_n > 0 ? lower_bound(spec, lo_n, opts) : best_lower_bound(spec, lo_nmax, opts);
      emit(describe(r) + "awsc_note\t" + cert.note + "\n", out);
      return r.valid ? 0 : kExitHypothesis;
    }
    if (*im) {
      const auto spec = ifs_template(im_ifs, true).instantiate();
      emit(images_report(spec, parse_interval(im_interval, false), im_n), out);
      return 0;
    }
    if (*ex) {
      const auto spec = ifs_template(ex_ifs, true).instantiate();
      Expansion e;
      try {
        e = ex_kind == "lazy" ? lazy_expansion(spec, ex_x, ex_n) : lmr_expansion(spec, ex_x, ex_n);
      } catch (const std::domain_error& err) {
        std::cerr << "locdim: " << err.what() << "\n";
        return kExitHypothesis;
      }
      std::ostringstream os;
      os << to_string(e.digits) << "\n"
         << "xi\t" << g(e.xi) << "\nJ\t" << e.J << "\ndensity\t" << g(nonzero_density(e, default_excluded(e, spec.m())))
         << "\n";
      emit(os.str(), out);
      return 0;
    }
    if (*tr) {
      const auto range = parse_interval(tr_range, true);
      const auto set = transition_set(tr_n, range);
      std::ostringstream os;
      os << "root\tsigma\ttau\twitnesses\n";
      for (const auto& r : set.roots) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.15f", r.rho);
        os << buf << '\t' << to_string(r.sigma) << '\t' << to_string(r.tau) << '\t' << r.witnesses
           << (r.near_distinct ? "\tnear-distinct" : "") << "\n";
      }
      emit(os.str(), out);
      return 0;
    }
    if (*cl) {
      const auto poly = IntPolynomial::parse(cl_poly);
      const auto c = classify(poly);
      std::ostringstream os;
      os << "kind\t" << to_string(c.kind) << "\n"
         << "dominant_root\t" << g(c.dominant_root) << "\n"
         << "reciprocal\t" << g(c.reciprocal) << "\n"
         << "unimodular_conjugates\t" << c.unimodular << "\n";
      if (cl_rho > 0.0) {
        const auto cert = certify_rho(cl_rho, poly);
        os << "awsc_known\t" << (cert.awsc_known ? 1 : 0) << "\nnote\t" << cert.note << "\n";
      }
      emit(os.str(), out);
      return 0;
    }
    if (*swc) {
      SweepConfig cfg = sw;
      if (!sw_config.empty()) {
        cfg = parse_sweep_config(read_json(sw_config));
      } else {
        cfg.ifs = ifs_template(sw_ifs, false);
        cfg.format = parse_format(format);
      }
      for (const auto& c : sw_certs) cfg.certificates.push_back(IntPolynomial::parse(c));
      if (!out.empty()) cfg.out = out;
      emit(format_rows(sweep(cfg), cfg.format), cfg.out);
      return 0;
    }
    if (*tb) {
      const auto kind = tb_kind == 1 ? TableKind::Images03To07 : tb_kind == 2 ? TableKind::ImagesUnit : TableKind::LowerBounds;
      emit(table_report(kind, tb_nmax), out);
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "locdim: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "locdim: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "locdim: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

// Parameter sweeps over rho and the regenerated tables, with CSV/TSV/JSON
// emission. This is the library half of the `locdim` command line tool.
#ifndef LOCDIM_SWEEP_HPP
#define LOCDIM_SWEEP_HPP

#include "locdim/algebraic.hpp"
#include "locdim/analytic.hpp"
#include "locdim/coverage.hpp"
#include "locdim/ifs.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace locdim {

/// Raised for malformed or out-of-range configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// IFS description accepted on the command line and in config files:
///   {"type":"explicit","rho":r,"digits":[...],"probs":[...]}
///   {"type":"bernoulli","rho":r,"p0":p}
///   {"type":"convolution","base":{...},"m":k}
/// Inside a sweep "rho" may be omitted; it is supplied per grid point.
struct IfsTemplate {
  enum class Type { Explicit, Bernoulli, Convolution };
  Type type = Type::Bernoulli;
  std::optional<double> rho;
  double p0 = 0.5;
  int folds = 1;
  Eigen::VectorXd digits;
  Eigen::VectorXd probs;

  /// Builds the system at `rho` (or the template's own rho).
  IfsSpec instantiate(std::optional<double> rho_override = std::nullopt) const;
  bool is_two_map() const { return type == Type::Bernoulli || (type == Type::Convolution && folds == 1); }
};

IfsTemplate parse_ifs_template(const nlohmann::json& j);
IfsSpec parse_ifs(const nlohmann::json& j);

enum class OutputFormat { Csv, Tsv, Json };
OutputFormat parse_format(const std::string& s);

struct SweepConfig {
  IfsTemplate ifs;
  double rho_min = 0.5;
  double rho_max = 0.851;
  double step = 0.001;
  std::vector<double> grid;  // explicit grid; overrides min/max/step when set
  int n_max = 10;
  UpperBoundOptions upper;
  bool include_transitions = false;
  std::vector<IntPolynomial> certificates;
  OutputFormat format = OutputFormat::Csv;
  std::string out;  // empty: stdout

  /// Throws ConfigError naming the violated constraint.
  void validate() const;
  std::vector<double> rho_grid() const;
};

SweepConfig parse_sweep_config(const nlohmann::json& j);

struct SweepRow {
  double rho = 0.0;
  Method method = Method::DimAtZero;
  std::optional<int> n;
  std::optional<Interval> interval;
  double value = 0.0;
  bool valid = false;
  bool awsc_certified = false;
  bool is_transition = false;
};

/// Rows for every grid rho (and transition rho when requested), sorted by
/// (rho, method).
std::vector<SweepRow> sweep(const SweepConfig& config);

/// Rows for a single rho.
std::vector<SweepRow> sweep_point(const SweepConfig& config, double rho, bool is_transition);

std::string format_rows(const std::vector<SweepRow>& rows, OutputFormat format);

/// TSV listing of the level-n images of I sorted by left endpoint, with
/// endpoints to five decimals: word, lo, hi, weight.
std::string images_report(const IfsSpec& spec, const Interval& I, int n);

enum class TableKind { Images03To07, ImagesUnit, LowerBounds };

struct LowerBoundTableRow {
  Interval range;
  double bound = 0.0;
  double rho_at_min = 0.0;
  int n = 0;
  double transition_point_min = 0.0;
};

/// Rows of the lower-bound table for the unbiased Bernoulli convolution.
std::vector<LowerBoundTableRow> lower_bound_table(int n_max = 10);
const std::vector<Interval>& lower_bound_table_ranges();

std::string table_report(TableKind kind, int n_max = 10);

}  // namespace locdim

#endif  // LOCDIM_SWEEP_HPP

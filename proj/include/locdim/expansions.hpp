// Digit expansions that witness the isolated point at 0: a lazy expansion
// for p_0 minimal, and an L/M/R expansion for p_0 = p_m minimal.
#ifndef LOCDIM_EXPANSIONS_HPP
#define LOCDIM_EXPANSIONS_HPP

#include "locdim/ifs.hpp"

#include <set>
#include <vector>

namespace locdim {

/// Strict inequalities on xi are made robust by shrinking the supremum by
/// this relative factor.
inline constexpr double kXiSafety = 1.0 - 1e-9;

enum class ExpansionKind { Lazy, LMR };

struct Expansion {
  Word digits;
  double xi = 0.0;
  int J = 0;  // smallest J with rho^J < xi
  ExpansionKind kind = ExpansionKind::Lazy;
};

double choose_xi_lazy(const IfsSpec& spec);
double choose_xi_lmr(const IfsSpec& spec);

/// Smallest integer J >= 1 with rho^J < xi.
int window_length(double rho, double xi);

/// x in (0,1]; N digits.
Expansion lazy_expansion(const IfsSpec& spec, double x, int N);
/// x in (0,1); N digits.
Expansion lmr_expansion(const IfsSpec& spec, double x, int N);

/// Fraction of digits not in `excluded`.
double nonzero_density(const Expansion& e, const std::set<int>& excluded);
/// {0} for Lazy, {0,m} for LMR.
std::set<int> default_excluded(const Expansion& e, int m);

}  // namespace locdim

#endif  // LOCDIM_EXPANSIONS_HPP

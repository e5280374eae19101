// Pisot / Salem classification of monic integer polynomials, used to
// certify contraction factors for which the coverage lower bound applies.
#ifndef LOCDIM_ALGEBRAIC_HPP
#define LOCDIM_ALGEBRAIC_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace locdim {

/// Monic integer polynomial, coefficients in descending degree order
/// (x^3 - x - 1 is {1, 0, -1, -1}).
class IntPolynomial {
 public:
  explicit IntPolynomial(std::vector<std::int64_t> descending);

  static IntPolynomial parse(const std::string& csv);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

  template <typename Scalar>
  Scalar operator()(Scalar x) const {
    Scalar y(0);
    for (auto c : coeffs_) y = y * x + Scalar(static_cast<double>(c));
    return y;
  }

  std::string to_string() const;

 private:
  std::vector<std::int64_t> coeffs_;
};

inline constexpr int kMaxClassifyDegree = 64;
/// Modulus tolerance separating unimodular conjugates from the rest.
inline constexpr double kUnitCircleTol = 1e-9;

enum class AlgebraicKind { Pisot, Salem, Neither };
const char* to_string(AlgebraicKind k);

struct Classification {
  AlgebraicKind kind = AlgebraicKind::Neither;
  double dominant_root = 0.0;  // largest real root > 1, or 0 if none
  double reciprocal = 0.0;
  int unimodular = 0;          // conjugates within kUnitCircleTol of |z| = 1
  std::vector<std::complex<double>> roots;
};

/// Roots from the companion matrix, refined by Newton polishing until the
/// step falls below `polish_tol`.
std::vector<std::complex<double>> polynomial_roots(const IntPolynomial& p, double polish_tol = 1e-12);

/// Irreducibility is not checked: the caller supplies the minimal polynomial.
Classification classify(const IntPolynomial& p, double polish_tol = 1e-12);

struct AwscCertificate {
  bool awsc_known = false;
  std::string note;
};

/// Sufficient (per current knowledge) evidence that the unbiased Bernoulli
/// convolution with contraction rho satisfies the asymptotically weak
/// separation condition: 1/rho is a root of a Pisot or Salem polynomial.
AwscCertificate certify_rho(double rho, const std::optional<IntPolynomial>& poly);

}  // namespace locdim

#endif  // LOCDIM_ALGEBRAIC_HPP

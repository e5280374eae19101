#include "locdim/algebraic.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace locdim {

IntPolynomial::IntPolynomial(std::vector<std::int64_t> descending) : coeffs_(std::move(descending)) {
  if (coeffs_.size() < 3) throw std::invalid_argument("polynomial degree must be >= 2");
  if (coeffs_.front() != 1) throw std::invalid_argument("polynomial must be monic");
  if (coeffs_.back() == 0) throw std::invalid_argument("constant term must be nonzero");
}

IntPolynomial IntPolynomial::parse(const std::string& csv) {
  std::vector<std::int64_t> c;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    const long long v = std::stoll(tok, &used);
    if (tok.find_first_not_of(" \t", used) != std::string::npos) {
      throw std::invalid_argument("bad coefficient '" + tok + "'");
    }
    c.push_back(v);
  }
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i];
  return os.str();
}

const char* to_string(AlgebraicKind k) {
  switch (k) {
    case AlgebraicKind::Pisot: return "Pisot";
    case AlgebraicKind::Salem: return "Salem";
    case AlgebraicKind::Neither: return "Neither";
  }
  return "Neither";
}

std::vector<std::complex<double>> polynomial_roots(const IntPolynomial& p, double polish_tol) {
  const int n = p.degree();
  if (n > kMaxClassifyDegree) throw std::invalid_argument("degree exceeds " + std::to_string(kMaxClassifyDegree));
  const auto& c = p.coefficients();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) companion(0, j) = -static_cast<double>(c[static_cast<std::size_t>(j + 1)]);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);
  if (es.info() != Eigen::Success) throw std::runtime_error("companion eigenvalue solve failed");

  std::vector<std::complex<double>> roots(es.eigenvalues().begin(), es.eigenvalues().end());
  for (auto& z : roots) {
    for (int it = 0; it < 50; ++it) {
      std::complex<double> f(0.0), df(0.0);
      for (auto a : c) {
        df = df * z + f;
        f = f * z + static_cast<double>(a);
      }
      if (std::abs(df) == 0.0) break;
      const auto step = f / df;
      z -= step;
      if (std::abs(step) <= polish_tol * std::max(1.0, std::abs(z))) break;
    }
    if (std::abs(z.imag()) < 1e-12 * std::max(1.0, std::abs(z))) z = {z.real(), 0.0};
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    return std::abs(a) > std::abs(b) || (std::abs(a) == std::abs(b) && a.imag() < b.imag());
  });
  return roots;
}

Classification classify(const IntPolynomial& p, double polish_tol) {
  Classification cl;
  cl.roots = polynomial_roots(p, polish_tol);
  std::size_t dom = cl.roots.size();
  for (std::size_t i = 0; i < cl.roots.size(); ++i) {
    const auto& z = cl.roots[i];
    if (z.imag() == 0.0 && z.real() > 1.0 && (dom == cl.roots.size() || z.real() > cl.roots[dom].real())) dom = i;
  }
  if (dom == cl.roots.size()) return cl;
  cl.dominant_root = cl.roots[dom].real();
  cl.reciprocal = 1.0 / cl.dominant_root;

  bool all_inside = true;
  bool all_closed = true;
  for (std::size_t i = 0; i < cl.roots.size(); ++i) {
    if (i == dom) continue;
    const double r = std::abs(cl.roots[i]);
    if (std::abs(r - 1.0) <= kUnitCircleTol) ++cl.unimodular;
    all_inside = all_inside && r < 1.0 - kUnitCircleTol;
    all_closed = all_closed && r <= 1.0 + kUnitCircleTol;
  }
  if (all_inside) {
    cl.kind = AlgebraicKind::Pisot;
  } else if (all_closed && cl.unimodular > 0) {
    cl.kind = AlgebraicKind::Salem;
  }
  return cl;
}

AwscCertificate certify_rho(double rho, const std::optional<IntPolynomial>& poly) {
  if (!poly) return {false, "no algebraic certificate supplied"};
  if (!(rho > 0.0 && rho < 1.0)) return {false, "rho outside (0,1)"};
  const auto cl = classify(*poly);
  if (cl.kind == AlgebraicKind::Neither) {
    return {false, "polynomial " + poly->to_string() + " is neither Pisot nor Salem"};
  }
  const double residual = std::abs((*poly)(1.0 / rho));
  if (residual > 1e-9) {
    std::ostringstream os;
    os << "1/rho is not a root of " << poly->to_string() << " (|P(1/rho)| = " << residual << ")";
    return {false, os.str()};
  }
  return {true, std::string("1/rho is a ") + to_string(cl.kind) +
                    " number; certificate assumes the polynomial is irreducible"};
}

}  // namespace locdim

#include "locdim/expansions.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace locdim;

namespace {

IfsSpec uniform(double rho, int m) {
  Eigen::VectorXd p = Eigen::VectorXd::Constant(m + 1, 0.5 / (m - 1));
  p(0) = p(m) = 0.25;
  return build_uniform(rho, p);
}

// x lies in S_{a_1..a_n}[0,1] for every prefix, within tol.
bool prefix_contained(const IfsSpec& s, const Word& digits, double x, double tol) {
  double left = 0.0;
  double scale = 1.0;
  for (auto a : digits) {
    left += s.digit(a) * scale;
    scale *= s.rho();
    if (x < left - tol || x > left + scale + tol) return false;
  }
  return true;
}

int longest_run(const Word& d, std::size_t from, auto excluded) {
  int best = 0;
  int run = 0;
  for (std::size_t i = from; i < d.size(); ++i) {
    run = excluded(d[i]) ? run + 1 : 0;
    best = std::max(best, run);
  }
  return best;
}

}  // namespace

TEST_CASE("choose_xi") {
  CHECK(choose_xi_lazy(build_bernoulli(0.7, 0.4)) == doctest::Approx(0.4).epsilon(1e-8));
  CHECK(choose_xi_lazy(build_bernoulli(0.8, 0.4)) == doctest::Approx(0.6).epsilon(1e-8));
  CHECK_THROWS_AS(choose_xi_lazy(build_convolution(build_bernoulli(1.0 / 3, 0.4, true), 2)), std::domain_error);

  // m=2, rho=1/2: d = (0, 1/4, 1/2). Slacks: (1) 1/8, (2) (1/2*3/4 - 1/4)/(3/2) = 1/12,
  // (3) (1/4 + 1/2 - 1/2 - 1/8)/(3/2) = 1/12.
  CHECK(choose_xi_lmr(uniform(0.5, 2)) == doctest::Approx(1.0 / 12).epsilon(1e-8));
  CHECK_THROWS_AS(choose_xi_lmr(uniform(std::sqrt(2.0) - 1.0, 2)), std::domain_error);
  // m=3, rho=1/2: d_j = j/6. (1) 1/6, (2) (1/2*5/6 - 1/6)/(3/2) = 1/6, (3) (1/3+1/2-1/2-1/12)/(3/2) = 1/6.
  CHECK(choose_xi_lmr(uniform(0.5, 3)) == doctest::Approx(1.0 / 6).epsilon(1e-8));
}

TEST_CASE("lazy_expansion") {
  const auto s = build_bernoulli(0.7, 0.4);
  auto one = lazy_expansion(s, 1.0, 50);
  for (auto a : one.digits) CHECK(a == 1);

  auto half = lazy_expansion(s, 0.5, 20);
  CHECK(half.J == 3);
  std::size_t first = 0;
  while (half.digits[first] == 0) ++first;
  CHECK(longest_run(half.digits, first, [](int a) { return a == 0; }) < 3);
  CHECK(prefix_contained(s, half.digits, 0.5, 1e-10));

  // Just above d_1 + xi the first digit is 1; at it, 0.
  const double edge = s.digit(1) + half.xi;
  CHECK(lazy_expansion(s, edge + 1e-9, 1).digits[0] == 1);
  CHECK(lazy_expansion(s, edge, 1).digits[0] == 0);

  CHECK_THROWS_AS(lazy_expansion(s, 0.0, 5), std::domain_error);
  CHECK_THROWS_AS(lazy_expansion(s, 1.1, 5), std::domain_error);
}

TEST_CASE("lmr_expansion") {
  const auto s = uniform(0.5, 2);
  auto e = lmr_expansion(s, 0.5, 20);
  CHECK(e.digits[0] == 1);
  const double xi = e.xi;
  CHECK(0.5 >= s.digit(1) + xi);
  CHECK(0.5 <= s.digit(1) + s.rho() - xi);

  auto tiny = lmr_expansion(s, 1e-6, 40);
  CHECK(tiny.digits[0] == 0);
  std::size_t zeros = 0;
  while (tiny.digits[zeros] == 0) ++zeros;
  CHECK(zeros >= 15);
  CHECK_THROWS_AS(lmr_expansion(s, 1.0, 5), std::domain_error);
}

TEST_CASE("nonzero_density") {
  Expansion z;
  z.digits = Word(30, 0);
  CHECK(nonzero_density(z, {0}) == 0.0);
  Expansion p;
  for (int i = 0; i < 30; ++i) p.digits.push_back(i % 3 == 1 ? 1 : 0);
  CHECK(nonzero_density(p, {0}) == doctest::Approx(1.0 / 3));
  CHECK_THROWS(nonzero_density(Expansion{}, {0}));

  auto e = lazy_expansion(build_bernoulli(0.7, 0.4), 0.5, 10000);
  CHECK(nonzero_density(e, {0}) >= 1.0 / 3 - 0.01);
}

TEST_CASE("property: lazy expansions") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(1e-9, 1.0);
  const IfsSpec specs[] = {build_bernoulli(0.7, 0.4), build_bernoulli(0.55, 0.3),
                           build_convolution(build_bernoulli(0.45, 0.3, true), 2)};
  for (const auto& s : specs) {
    for (int t = 0; t < 40; ++t) {
      const double x = U(rng);
      const int N = 2000;
      auto e = lazy_expansion(s, x, N);
      CHECK(prefix_contained(s, e.digits, x, 1e-10));
      std::size_t first = 0;
      while (first < e.digits.size() && e.digits[first] == 0) ++first;
      CHECK(longest_run(e.digits, first, [](int a) { return a == 0; }) < e.J);
      Expansion tail = e;
      tail.digits.erase(tail.digits.begin(), tail.digits.begin() + static_cast<long>(first));
      CHECK(nonzero_density(tail, {0}) >= 1.0 / e.J - 0.01);

      // |x - sum d_{a_i} rho^(i-1)| <= rho^n at each prefix.
      double partial = 0.0;
      double scale = 1.0;
      for (int n = 0; n < 60; ++n) {
        partial += s.digit(e.digits[static_cast<std::size_t>(n)]) * scale;
        scale *= s.rho();
        CHECK(std::abs(x - partial) <= scale + 1e-12);
      }
    }
  }
}

TEST_CASE("property: L/M/R window") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> U(1e-6, 1.0 - 1e-6);
  for (const auto& s : {uniform(0.5, 2), uniform(0.5, 3), uniform(0.35, 3)}) {
    const int m = s.m();
    for (int t = 0; t < 1000; ++t) {
      const double x = U(rng);
      auto e = lmr_expansion(s, x, 200);
      CHECK(prefix_contained(s, e.digits, x, 1e-10));
      std::size_t first = 0;
      while (first < e.digits.size() && (e.digits[first] == 0 || e.digits[first] == m)) ++first;
      CHECK(longest_run(e.digits, first, [m](int a) { return a == 0 || a == m; }) < e.J);
    }
  }
}

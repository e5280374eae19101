#include "locdim/ifs.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace locdim;

TEST_CASE("validate") {
  CHECK_FALSE(validate(IfsSpec(0.8, Eigen::Vector2d(0, 0.2), Eigen::Vector2d(0.5, 0.5))));

  auto gap = validate(IfsSpec(0.3, Eigen::Vector2d(0, 0.7), Eigen::Vector2d(0.5, 0.5)));
  REQUIRE(gap);
  CHECK(gap->invariant == Invariant::DigitGap);

  auto sum = validate(IfsSpec(0.8, Eigen::Vector2d(0, 0.2), Eigen::Vector2d(0.6, 0.6)));
  REQUIRE(sum);
  CHECK(sum->invariant == Invariant::ProbSum);

  CHECK(validate(IfsSpec(1.2, Eigen::Vector2d(0, -0.2), Eigen::Vector2d(0.5, 0.5)))->invariant == Invariant::RhoRange);
  CHECK(validate(IfsSpec(0.8, Eigen::Vector3d(0, 0.15, 0.1), Eigen::Vector3d(0.3, 0.3, 0.4)))->invariant ==
        Invariant::LastDigit);
  CHECK(validate(IfsSpec(0.8, Eigen::Vector3d(0, 0.2, 0.2), Eigen::Vector3d(0.3, 0.3, 0.4)))->invariant ==
        Invariant::DigitOrder);
  CHECK(validate(IfsSpec(0.8, Eigen::Vector2d(0, 0.2), Eigen::Vector2d(1.0, 0.0)))->invariant ==
        Invariant::ProbPositive);
  CHECK_THROWS_AS(require_valid(IfsSpec(0.8, Eigen::Vector2d(0, 0.2), Eigen::Vector2d(0.6, 0.6))),
                  std::invalid_argument);
}

TEST_CASE("map_point") {
  const auto b = build_bernoulli(0.8, 0.5);
  CHECK(map_point(b, {}, 0.37) == 0.37);
  CHECK(map_point(b, parse_word("1111"), 0.0) == doctest::Approx(0.5904).epsilon(1e-12));
  CHECK(map_point(b, parse_word("0000"), 0.3) == doctest::Approx(0.12288).epsilon(1e-12));
  CHECK_THROWS_AS(map_point(b, Word{2}, 0.0), std::out_of_range);
}

TEST_CASE("map_interval") {
  const auto b = build_bernoulli(0.8, 0.5);
  auto i1 = map_interval(b, parse_word("0001"), Interval::closed(0.3, 0.7));
  CHECK(i1.lo == doctest::Approx(0.22528).epsilon(1e-12));
  CHECK(i1.hi == doctest::Approx(0.38912).epsilon(1e-12));
  // 1110 of [0,1]: 0.2 (1 + 0.8 + 0.64) = 0.488, plus 0.8^4 = 0.4096.
  auto i2 = map_interval(b, parse_word("1110"), Interval::closed(0.0, 1.0));
  CHECK(i2.lo == doctest::Approx(0.488).epsilon(1e-12));
  CHECK(i2.hi == doctest::Approx(0.8976).epsilon(1e-12));
  auto id = map_interval(b, {}, Interval::closed(0.0, 1.0));
  CHECK(id.lo == 0.0);
  CHECK(id.hi == 1.0);
}

TEST_CASE("word_weight") {
  CHECK(word_weight(build_bernoulli(0.8, 0.5), parse_word("0110")) == doctest::Approx(1.0 / 16));
  CHECK(word_weight(build_bernoulli(0.8, 0.4), parse_word("01")) == doctest::Approx(0.24));
  CHECK(word_weight(build_bernoulli(0.8, 0.4), {}) == 1.0);
}

TEST_CASE("build_bernoulli") {
  auto a = build_bernoulli(0.8, 0.5);
  CHECK(a.digit(1) == doctest::Approx(0.2));
  CHECK(a.prob(0) == 0.5);
  auto b = build_bernoulli(0.618, 0.4);
  CHECK(b.digit(1) == doctest::Approx(0.382));
  CHECK(b.prob(1) == doctest::Approx(0.6));
  CHECK_THROWS_AS(build_bernoulli(0.4, 0.5), std::invalid_argument);
  CHECK_NOTHROW(build_bernoulli(0.4, 0.5, true));
  CHECK_THROWS_AS(build_bernoulli(0.8, 1.0), std::invalid_argument);
}

TEST_CASE("build_convolution") {
  auto c2 = build_convolution(build_bernoulli(0.5, 0.5), 2);
  REQUIRE(c2.m() == 2);
  CHECK(c2.digit(1) == doctest::Approx(0.25));
  CHECK(c2.digit(2) == doctest::Approx(0.5));
  CHECK(c2.prob(0) == doctest::Approx(0.25));
  CHECK(c2.prob(1) == doctest::Approx(0.5));
  CHECK(c2.prob(2) == doctest::Approx(0.25));

  auto base = build_bernoulli(0.7, 0.4);
  auto same = build_convolution(base, 1);
  CHECK(same.digits() == base.digits());
  CHECK(same.probs() == base.probs());

  // Right-hand map weight 1/3: p_j = C(3,j) (1/3)^j (2/3)^(3-j).
  auto c3 = build_convolution(build_bernoulli(1.0 / 3, 2.0 / 3, true), 3);
  for (int j = 0; j <= 3; ++j) {
    const double expect = oracle::binomial(3, j) * std::pow(1.0 / 3, j) * std::pow(2.0 / 3, 3 - j);
    CHECK(c3.prob(j) == doctest::Approx(expect).epsilon(1e-14));
  }
  CHECK(c3.prob(0) == doctest::Approx(8.0 / 27));
  CHECK(c3.prob(3) == doctest::Approx(1.0 / 27));
  CHECK_FALSE(validate(c3));

  CHECK_THROWS_AS(build_convolution(c2, 2), std::invalid_argument);
}

TEST_CASE("overlap predicates") {
  CHECK(strict_overlap(build_bernoulli(0.8, 0.5)));
  for (int m = 2; m <= 5; ++m) {
    CHECK_FALSE(strict_overlap(build_convolution(build_bernoulli(1.0 / (m + 1), 0.5, true), m)));
  }
  CHECK(strict_overlap(build_convolution(build_bernoulli(0.4, 0.5, true), 2)));

  auto uniform = [](double rho, int m) { return build_uniform(rho, Eigen::VectorXd::Constant(m + 1, 1.0 / (m + 1))); };
  CHECK(unbiased_overlap(uniform(0.5, 2)));
  CHECK_FALSE(unbiased_overlap(uniform(0.40, 2)));
  CHECK(unbiased_overlap(uniform(0.31, 3)));
  CHECK_THROWS_AS(unbiased_overlap(build_bernoulli(0.8, 0.5)), std::invalid_argument);
}

TEST_CASE("isolated_point_report") {
  auto r = isolated_point_report(build_bernoulli(0.7, 0.4));
  CHECK(r.applies_biased);
  CHECK_FALSE(r.applies_unbiased);
  CHECK(r.dim_at_zero == doctest::Approx(std::log(0.4) / std::log(0.7)));

  auto u = isolated_point_report(build_bernoulli(0.7, 0.5));
  CHECK_FALSE(u.applies_biased);
  CHECK_FALSE(u.applies_unbiased);

  auto c = isolated_point_report(build_convolution(build_bernoulli(0.5, 0.5), 2));
  CHECK(c.applies_unbiased);
  CHECK_FALSE(c.applies_biased);
}

TEST_CASE("property: width scaling, weight sum and composition") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  const IfsSpec specs[] = {build_bernoulli(0.8, 0.5), build_bernoulli(0.62, 0.3),
                           build_convolution(build_bernoulli(0.45, 0.35, true), 3)};
  for (const auto& s : specs) {
    for (int trial = 0; trial < 200; ++trial) {
      const int n = static_cast<int>(rng() % 13);
      const int k = static_cast<int>(rng() % 6);
      Word a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(k));
      for (auto& c : a) c = static_cast<std::uint8_t>(rng() % s.alphabet_size());
      for (auto& c : b) c = static_cast<std::uint8_t>(rng() % s.alphabet_size());
      double lo = U(rng), hi = U(rng);
      if (lo > hi) std::swap(lo, hi);
      const auto im = map_interval(s, a, Interval::closed(lo, hi));
      const double expect = std::pow(s.rho(), n) * (hi - lo);
      CHECK(std::abs(im.width() - expect) <= 1e-12 * std::max(expect, 1e-300) + 1e-16);

      Word ab = a;
      ab.insert(ab.end(), b.begin(), b.end());
      const double x = U(rng);
      CHECK(map_point(s, ab, x) == doctest::Approx(map_point(s, a, map_point(s, b, x))).epsilon(1e-12));
    }
    for (int n = 0; n <= 12 && std::pow(s.alphabet_size(), n) <= 1 << 16; ++n) {
      const auto total = static_cast<std::uint64_t>(std::llround(std::pow(s.alphabet_size(), n)));
      double sum = 0.0;
      for (std::uint64_t c = 0; c < total; ++c) sum += word_weight(s, oracle::word_of(c, n, s.alphabet_size()));
      CHECK(std::abs(sum - 1.0) <= 1e-10);
    }
  }
}

TEST_CASE("property: overlap thresholds against closed forms") {
  for (int m = 2; m <= 5; ++m) {
    const double strict_t = 1.0 / (m + 1);
    const double unb_t = (std::sqrt(m * m + 4.0) - m) / 2.0;
    for (int i = 1; i < 200; ++i) {
      const double rho = i / 200.0;
      if (std::abs(rho - strict_t) < 1e-9 || std::abs(rho - unb_t) < 1e-9) continue;
      auto conv = build_convolution(build_bernoulli(rho, 0.5, true), m);
      CHECK(strict_overlap(conv) == (rho > strict_t));
      auto uni = build_uniform(rho, Eigen::VectorXd::Constant(m + 1, 1.0 / (m + 1)));
      CHECK(unbiased_overlap(uni) == (rho > unb_t));
    }
  }
}

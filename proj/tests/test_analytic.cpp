#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "spectra/analytic.hpp"
#include "spectra/error.hpp"
#include "spectra/stats.hpp"

using namespace spectra;
using namespace spectra::analytic;

namespace {

// Composite Simpson on [a, b] with n (even) panels.
double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

// rho as (pi/m)/sin(pi/m) minus the smooth head integral over [0, beta^(-2/alpha)].
double rho_brute(double alpha, double beta) {
  const double m = alpha / 2;
  const double full = (M_PI / m) / std::sin(M_PI / m);
  if (std::isinf(beta)) return full;
  const double c = std::pow(beta, -2.0 / alpha);
  const int n = 2 * static_cast<int>(std::clamp(c * 20000.0, 20000.0, 2000000.0) / 2);
  return full - simpson([m](double v) { return 1.0 / (1.0 + std::pow(v, m)); }, 0.0, c, n);
}

// Integral of a density over (0, inf) in log space.
double log_space_mass(const std::function<double(double)>& pdf, double lo, double hi) {
  return simpson([&](double u) { return pdf(std::exp(u)) * std::exp(u); }, lo, hi, 200000);
}

SubBandContext seller_only_ctx(double alpha, double lambda, double power) {
  SubBandContext c;
  c.alpha = alpha;
  c.noise_linear = 0.0;
  c.seller_bs_intensity = lambda;
  c.seller_ue_intensity = 1e-4;
  c.seller_power_linear = power;
  c.threshold_linear = 1e-10;
  return c;
}

SubBandContext base_ctx(OperatorId op) {
  return derive_context(fixtures::base(), {0, 0}, op);
}

const double kMu4 = 1.0 / (M_PI * std::tgamma(1.5));

}  // namespace

TEST_CASE("rho reference values") {
  CHECK(rho(4, 1) == doctest::Approx(M_PI / 4).epsilon(1e-10));
  CHECK(rho(4, kInfiniteBeta) == doctest::Approx(M_PI / 2).epsilon(1e-10));
  const double m = 2.5;
  CHECK(rho(5, kInfiniteBeta) == doctest::Approx((M_PI / m) / std::sin(M_PI / m)).epsilon(1e-10));
  CHECK(rho(5, kInfiniteBeta) == doctest::Approx(1.32131).epsilon(1e-5));
}

TEST_CASE("rho matches brute force across alpha and beta") {
  for (double alpha : {2.3, 3.0, 4.0, 5.0, 7.5, 12.0}) {
    for (double beta : {1e-3, 0.1, 1.0, 3.0, 100.0, 1e4, kInfiniteBeta}) {
      CAPTURE(alpha);
      CAPTURE(beta);
      const double want = rho_brute(alpha, beta);
      CHECK(rho(alpha, beta) == doctest::Approx(want).epsilon(1e-7));
      CHECK(rho(alpha, beta) > 0);
    }
  }
  // alpha = 4: pi/2 - atan(beta^-1/2).
  for (double beta : {0.01, 0.5, 2.0, 50.0}) {
    CHECK(rho(4, beta) == doctest::Approx(M_PI / 2 - std::atan(1 / std::sqrt(beta))).epsilon(1e-10));
  }
}

TEST_CASE("rho errors") {
  CHECK_THROWS_AS(rho(2.0, 1.0), Error);
  CHECK_THROWS_AS(rho(1.5, 1.0), Error);
  CHECK_THROWS_AS(rho(4.0, 0.0), Error);
  CHECK_THROWS_AS(rho(4.0, -1.0), Error);
}

TEST_CASE("H law") {
  CHECK(cdf_H(1.0, kMu4, 4.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-13));
  CHECK(cdf_H(1e300, 1e-4, 4.0) == doctest::Approx(1.0));
  CHECK(cdf_H(INFINITY, 1e-4, 4.0) == 1.0);
  for (double z : {1e-20, 1.0, 1e10}) CHECK(cdf_H(z, 0.0, 5.0) == 1.0);
  CHECK_THROWS_AS(cdf_H(0.0, 1e-4, 4.0), Error);
  CHECK_THROWS_AS(cdf_H(-1.0, 1e-4, 4.0), Error);
  CHECK_THROWS_AS(pdf_H(0.0, 1e-4, 4.0), Error);

  // Density at z = 1 from the finite difference of the CDF.
  const double h = 1e-5;
  const double fd = (cdf_H(1 + h, kMu4, 4) - cdf_H(1 - h, kMu4, 4)) / (2 * h);
  CHECK(pdf_H(1.0, kMu4, 4.0) == doctest::Approx(fd).epsilon(1e-8));
}

TEST_CASE("densities are derivatives of the CDFs") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> a(2.2, 8.0), lmu(-7, -3), lz(-1, 1);
  for (int i = 0; i < 200; ++i) {
    const double alpha = a(rng);
    const double mu = std::pow(10.0, lmu(rng));
    // z around the bulk of each law.
    const double zh = std::pow(M_PI * mu * std::tgamma(1 + 2 / alpha), alpha / 2) * std::pow(10.0, lz(rng));
    const double hh = zh * 1e-5;
    const double fd = (cdf_H(zh + hh, mu, alpha) - cdf_H(zh - hh, mu, alpha)) / (2 * hh);
    CHECK(pdf_H(zh, mu, alpha) == doctest::Approx(fd).epsilon(1e-6));

    const double zeta = 1e-10;
    const double zp = zeta / zh;
    const double hp = zp * 1e-5;
    const double fdp = (cdf_P(zp + hp, mu, alpha, zeta) - cdf_P(zp - hp, mu, alpha, zeta)) / (2 * hp);
    CHECK(pdf_P(zp, mu, alpha, zeta) == doctest::Approx(fdp).epsilon(1e-6));
  }
}

TEST_CASE("densities integrate to one") {
  for (auto [mu, alpha] : {std::pair{fixtures::per_disk(50), 5.0}, std::pair{1e-4, 3.0},
                           std::pair{kMu4, 4.0}}) {
    const double scale = std::pow(M_PI * mu * std::tgamma(1 + 2 / alpha), alpha / 2);
    const double lo = std::log(scale) - 40 * alpha;
    const double hi = std::log(scale) + 40 * alpha;
    CHECK(log_space_mass([&](double z) { return pdf_H(z, mu, alpha); }, lo, hi) ==
          doctest::Approx(1.0).epsilon(1e-7));
    const double zeta = 1e-10;
    CHECK(log_space_mass([&](double z) { return pdf_P(z, mu, alpha, zeta); },
                         std::log(zeta) - hi, std::log(zeta) - lo) ==
          doctest::Approx(1.0).epsilon(1e-7));
  }
}

TEST_CASE("P law is the image of the H law under zeta / H") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> lz(-30, 5), a(2.1, 10), lmu(-7, -2), lzeta(-13, 0);
  for (int i = 0; i < 1000; ++i) {
    const double z = std::pow(10.0, lz(rng));
    const double alpha = a(rng);
    const double mu = std::pow(10.0, lmu(rng));
    const double zeta = std::pow(10.0, lzeta(rng));
    CHECK(std::abs(cdf_P(z, mu, alpha, zeta) + cdf_H(zeta / z, mu, alpha) - 1.0) <= 1e-12);
  }
  CHECK(cdf_P(1e-300, 1e-4, 5.0, 1e-10) == doctest::Approx(0.0));
  CHECK_THROWS_AS(cdf_P(1.0, 1e-4, 5.0, 0.0), Error);
  CHECK_THROWS_AS(cdf_P(0.0, 1e-4, 5.0, 1.0), Error);
}

TEST_CASE("moment of P") {
  CHECK(moment_P(0.5, kMu4, 4.0, 1.0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(moment_P(0.5, kMu4, 4.0, 1.0, MomentMethod::Quadrature) ==
        doctest::Approx(1.0).epsilon(1e-9));

  const double mu = fixtures::per_disk(50);
  const double base = moment_P(mu, 5.0, 1e-10);
  for (double c : {0.1, 10.0, 123.0}) {
    CHECK(moment_P(mu, 5.0, c * 1e-10) == doctest::Approx(std::pow(c, 0.4) * base).epsilon(1e-13));
  }
  CHECK(moment_P(2 * mu, 5.0, 1e-10) == doctest::Approx(base / 2).epsilon(1e-13));

  try {
    moment_P(0.4, 0.0, 5.0, 1e-10);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Domain);
    CHECK(std::string(e.what()).find("unbounded moment") != std::string::npos);
  }
}

TEST_CASE("moment quadrature agrees with the closed form") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> a(2.2, 9.0), lmu(-6, -3), lzeta(-12, -6);
  for (int i = 0; i < 20; ++i) {
    const double alpha = a(rng);
    const double mu = std::pow(10.0, lmu(rng));
    const double zeta = std::pow(10.0, lzeta(rng));
    const double closed = moment_P(2 / alpha, mu, alpha, zeta);
    QuadratureSpec tight;
    tight.rel_tolerance = 1e-12;
    tight.abs_tolerance = 1e-300;
    const double numeric =
        moment_P(2 / alpha, mu, alpha, zeta, MomentMethod::Quadrature, tight);
    CHECK(std::abs(numeric / closed - 1) < 1e-9);
    // Other exponents follow Gamma(1 + k) / rate^k.
    const double rate = M_PI * mu * std::tgamma(1 + 2 / alpha) / std::pow(zeta, 2 / alpha);
    CHECK(moment_P(1.0, mu, alpha, zeta) ==
          doctest::Approx(std::tgamma(1 + alpha / 2) / std::pow(rate, alpha / 2)).epsilon(1e-12));
  }
}

TEST_CASE("laplace transforms") {
  for (auto op : {OperatorId::seller(0), OperatorId::buyer(0)}) {
    const auto ctx = base_ctx(op);
    auto L = [&](double k) {
      return op.is_seller() ? laplace_seller(k, ctx, 2.0) : laplace_buyer(k, ctx, 2.0);
    };
    CHECK(L(0.0) == 1.0);
    double prev = 1.0;
    for (double k = 1e6; k < 1e16; k *= 3) {
      const double v = L(k);
      CHECK(v > 0.0);
      CHECK(v <= 1.0);
      CHECK(v <= prev);
      prev = v;
    }
    CHECK(L(1e12) < 1.0);
  }
  SubBandContext empty = base_ctx(OperatorId::buyer(0));
  empty.buyer_intensity = empty.cross_buyer_intensity = empty.seller_bs_intensity = 0;
  empty.total_buyer_intensity = 0;
  CHECK(laplace_buyer(1e12, empty, 1.0) == 1.0);
  CHECK(laplace_seller(1e12, empty, 1.0) == 1.0);
  CHECK_THROWS_AS(laplace_buyer(-1.0, empty, 1.0), Error);
}

TEST_CASE("laplace factors match the product of exponentials") {
  const auto ctx = base_ctx(OperatorId::buyer(0));
  const double alpha = ctx.alpha;
  const double e = std::pow(ctx.threshold_linear, 2 / alpha) /
                   (M_PI * ctx.seller_ue_intensity * std::tgamma(1 + 2 / alpha));
  const double beta = 3.0;
  const double kappa = 5e11;
  const double kp = std::pow(kappa, 2 / alpha);
  const double own = ctx.buyer_intensity * e * rho_brute(alpha, beta);
  const double other = ctx.seller_bs_intensity * std::pow(ctx.seller_power_linear, 2 / alpha) *
                       rho_brute(alpha, INFINITY);
  CHECK(laplace_buyer(kappa, ctx, beta) ==
        doctest::Approx(std::exp(-M_PI * kp * (own + other))).epsilon(1e-8));

  const auto sctx = base_ctx(OperatorId::seller(0));
  const double sown = sctx.seller_bs_intensity * std::pow(sctx.seller_power_linear, 2 / alpha) *
                      rho_brute(alpha, beta);
  const double sother = sctx.total_buyer_intensity * e * rho_brute(alpha, INFINITY);
  CHECK(laplace_seller(kappa, sctx, beta) ==
        doctest::Approx(std::exp(-M_PI * kp * (sown + sother))).epsilon(1e-8));
}

TEST_CASE("coverage limits") {
  for (auto op : {OperatorId::seller(0), OperatorId::buyer(0)}) {
    auto ctx = base_ctx(op);
    auto cov = [&](double b) {
      return op.is_seller() ? coverage_seller(b, ctx).value : coverage_buyer(b, ctx).value;
    };
    CHECK(cov(1e-30) == doctest::Approx(1.0).epsilon(1e-9));
    ctx.noise_linear = 1e40;
    CHECK(cov(1.0) < 1e-15);
    ctx = base_ctx(op);
    CHECK_THROWS_AS(cov(0.0), Error);
  }
  auto b = base_ctx(OperatorId::buyer(0));
  b.buyer_intensity = 0.0;
  CHECK_THROWS_AS(coverage_buyer(1.0, b), Error);
}

TEST_CASE("coverage is nonincreasing in beta") {
  for (auto op : {OperatorId::seller(0), OperatorId::buyer(0)}) {
    const auto ctx = base_ctx(op);
    double prev = 1.0;
    for (int i = 0; i < 20; ++i) {
      const double beta = std::pow(10.0, (-20.0 + 2.5 * i) / 10.0);
      const auto r = op.is_seller() ? coverage_seller(beta, ctx) : coverage_buyer(beta, ctx);
      CHECK(r.value >= 0.0);
      CHECK(r.value <= 1.0);
      CHECK(r.value <= prev);
      CHECK(r.estimated_quadrature_error < 1e-6);
      prev = r.value;
    }
  }
}

TEST_CASE("single-tier interference-limited reduction") {
  for (double alpha : {3.0, 4.0, 5.0}) {
    for (double beta : {0.1, 1.0, 10.0}) {
      const double want = 1.0 / (1.0 + std::pow(beta, 2 / alpha) * rho_brute(alpha, beta));
      const auto s = seller_only_ctx(alpha, 1e-5, 10.0);
      CHECK(coverage_seller(beta, s).value == doctest::Approx(want).epsilon(1e-7));
      // Independent of the seller's power when only one tier transmits.
      const auto s2 = seller_only_ctx(alpha, 1e-5, 1e4);
      CHECK(coverage_seller(beta, s2).value == doctest::Approx(want).epsilon(1e-7));

      SubBandContext b = s;
      b.seller_bs_intensity = 0.0;
      b.buyer_intensity = 3e-5;
      CHECK(coverage_buyer(beta, b).value == doctest::Approx(want).epsilon(1e-7));
    }
  }
}

TEST_CASE("coverage is invariant under joint power scaling without noise") {
  for (auto op : {OperatorId::seller(0), OperatorId::buyer(0)}) {
    auto ctx = base_ctx(op);
    ctx.noise_linear = 0.0;
    for (double beta : {0.3, 1.0, 8.0}) {
      const double base = op.is_seller() ? coverage_seller(beta, ctx).value
                                         : coverage_buyer(beta, ctx).value;
      for (double c : {0.1, 10.0}) {
        auto scaled = ctx;
        scaled.seller_power_linear *= c;
        scaled.threshold_linear *= c;
        const double v = op.is_seller() ? coverage_seller(beta, scaled).value
                                        : coverage_buyer(beta, scaled).value;
        CHECK(v == doctest::Approx(base).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("rates") {
  const auto s = base_ctx(OperatorId::seller(0));
  const auto b = base_ctx(OperatorId::buyer(0));
  CHECK(rate_seller({}).value == 0.0);
  CHECK(rate_buyer({}).value == 0.0);

  const std::vector<SubBandContext> one{b};
  const std::vector<SubBandContext> two{b, b};
  const double r1 = rate_buyer(one).value;
  CHECK(rate_buyer(two).value == 2 * r1);
  const std::vector<SubBandContext> sone{s};
  const std::vector<SubBandContext> stwo{s, s};
  CHECK(rate_seller(stwo).value == 2 * rate_seller(sone).value);
  CHECK(r1 > 0);
  CHECK(rate_buyer(one).bits() == doctest::Approx(r1 / std::log(2.0)));
}

TEST_CASE("interference-limited single-tier rate") {
  // alpha = 4: coverage(b) = 1 / (1 + sqrt(b) (pi/2 - atan(1/sqrt(b)))).
  auto cov = [](double t) {
    const double b = std::expm1(t);
    if (b == 0) return 1.0;
    return 1.0 / (1.0 + std::sqrt(b) * (M_PI / 2 - std::atan(1 / std::sqrt(b))));
  };
  // The tail beyond t = 200 is below 1e-40.
  const double want = simpson(cov, 0.0, 200.0, 400000);
  const std::vector<SubBandContext> one{seller_only_ctx(4.0, 1e-5, 1.0)};
  CHECK(rate_seller(one).value == doctest::Approx(want).epsilon(1e-7));
  // interference-limited alpha 4 value, about 2.15 bits
  CHECK(rate_seller(one).bits() == doctest::Approx(2.15).epsilon(0.01));
}

TEST_CASE("rate integrand is nonnegative") {
  for (auto op : {OperatorId::seller(0), OperatorId::buyer(0)}) {
    const auto ctx = base_ctx(op);
    for (double t = 0.01; t < 40; t *= 1.7) {
      const double beta = std::expm1(t);
      const double v = op.is_seller() ? coverage_seller(beta, ctx).value
                                      : coverage_buyer(beta, ctx).value;
      CHECK(v >= 0.0);
    }
  }
}

TEST_CASE("total sum rate") {
  auto c = fixtures::base();
  c.buyers.clear();
  c.sharing_groups[{0, 0}] = {};
  const std::vector<SubBandContext> ctx{derive_context(c, {0, 0}, OperatorId::seller(0))};
  CHECK(total_sum_rate(c).value == doctest::Approx(c.sellers[0].ue_intensity * rate_seller(ctx).value));

  auto none = fixtures::base();
  none.sellers[0].ue_intensity = 0.0;
  none.buyers[0].ue_intensity = 0.0;
  CHECK(total_sum_rate(none).value == 0.0);

  // Buyer that leases nothing contributes zero.
  auto idle = fixtures::base();
  idle.sharing_groups[{0, 0}] = {};
  CHECK(total_sum_rate(idle).value == doctest::Approx(total_sum_rate(c).value));
}

TEST_CASE("total sum rate over the zeta grid rises then falls") {
  std::vector<double> v;
  for (int i = 0; i <= 12; ++i) {
    auto c = fixtures::base();
    c.sellers[0].interference_threshold_dbm = -130.0 + 5.0 * i;
    v.push_back(total_sum_rate(c).value);
  }
  CHECK(is_unimodal(v));
}

TEST_CASE("positive exponent hook changes the transform") {
  EvalOptions bad;
  bad.positive_laplace_exponent = true;
  const auto ctx = base_ctx(OperatorId::buyer(0));
  CHECK(laplace_buyer(1e12, ctx, 2.0, bad) > 1.0);
  CHECK(laplace_buyer(1e12, ctx, 2.0, bad) ==
        doctest::Approx(1.0 / laplace_buyer(1e12, ctx, 2.0)).epsilon(1e-12));
}

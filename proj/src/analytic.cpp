#include "spectra/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spectra/error.hpp"
#include "spectra/special.hpp"

namespace spectra::analytic {

namespace {

constexpr double kPi = std::numbers::pi;

void require_alpha(double alpha) {
  if (!(alpha > 2.0) || !std::isfinite(alpha)) {
    fail(ErrorCode::Domain, "path-loss exponent must exceed 2");
  }
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0)) fail(ErrorCode::Domain, std::string(what) + " must be positive");
}

// pi * mu_s * Gamma(1 + 2/alpha): the rate shared by the H and P laws.
double h_rate(double mu_s, double alpha) {
  return kPi * mu_s * gamma_fn(1.0 + 2.0 / alpha);
}

quad::QuadResult must_converge(const quad::QuadResult& r, const char* what) {
  if (!r.converged || !std::isfinite(r.value)) {
    fail(ErrorCode::NotConverged, std::string(what) + " did not converge");
  }
  return r;
}

// Mean of P^(2/alpha), or 0 when no buyer transmits on the band.
double buyer_moment(const SubBandContext& ctx, double buyer_side_intensity,
                    const EvalOptions& opts) {
  if (buyer_side_intensity <= 0.0) return 0.0;
  return moment_P(2.0 / ctx.alpha, ctx.seller_ue_intensity, ctx.alpha,
                  ctx.threshold_linear, opts.moment, opts.quad);
}

// Precomputed exponent weights of a Laplace transform: the transform at
// kappa is exp(sign * pi * kappa^(2/alpha) * (own * rho_beta + other * rho_inf)).
struct LaplaceTerms {
  double own = 0.0;     // intensity * E[P^(2/alpha)] of the serving operator
  double other = 0.0;   // same, summed over all other operators
  double rho_beta = 0.0;
  double rho_inf = 0.0;
  double sign = -1.0;

  double exponent(double kappa_pow) const {
    return kPi * kappa_pow * (own * rho_beta + other * rho_inf);
  }
  double at(double kappa_pow) const {
    return std::exp(sign * exponent(kappa_pow));
  }
};

LaplaceTerms buyer_terms(const SubBandContext& ctx, double beta,
                         const EvalOptions& opts) {
  const double moment =
      buyer_moment(ctx, ctx.buyer_intensity + ctx.cross_buyer_intensity, opts);
  LaplaceTerms t;
  t.own = ctx.buyer_intensity * moment;
  t.other = ctx.seller_bs_intensity *
                std::pow(ctx.seller_power_linear, 2.0 / ctx.alpha) +
            ctx.cross_buyer_intensity * moment;
  t.rho_beta = beta > 0.0 ? rho(ctx.alpha, beta, opts.quad) : 0.0;
  t.rho_inf = rho(ctx.alpha, kInfiniteBeta, opts.quad);
  t.sign = opts.positive_laplace_exponent ? 1.0 : -1.0;
  return t;
}

LaplaceTerms seller_terms(const SubBandContext& ctx, double beta,
                          const EvalOptions& opts) {
  const double moment = buyer_moment(ctx, ctx.total_buyer_intensity, opts);
  LaplaceTerms t;
  t.own = ctx.seller_bs_intensity *
          std::pow(ctx.seller_power_linear, 2.0 / ctx.alpha);
  t.other = ctx.total_buyer_intensity * moment;
  t.rho_beta = beta > 0.0 ? rho(ctx.alpha, beta, opts.quad) : 0.0;
  t.rho_inf = rho(ctx.alpha, kInfiniteBeta, opts.quad);
  t.sign = opts.positive_laplace_exponent ? 1.0 : -1.0;
  return t;
}

void check_context(const SubBandContext& ctx) {
  require_alpha(ctx.alpha);
  if (!(ctx.noise_linear >= 0.0)) fail(ErrorCode::Domain, "noise must be >= 0");
  require_positive(ctx.seller_power_linear, "seller power");
  require_positive(ctx.threshold_linear, "interference threshold");
}

}  // namespace

double RateResult::bits() const { return value / std::numbers::ln2; }

double rho(double alpha, double beta, const QuadratureSpec& spec) {
  require_alpha(alpha);
  if (!(beta > 0.0)) fail(ErrorCode::Domain, "rho needs beta > 0");
  const double m = 0.5 * alpha;
  const double q = 1.0 / (m - 1.0);
  const double p = m * q;

  // Tail [c0, inf) through v = c0 * w^(-q), which maps it onto (0, 1] with a
  // bounded, smooth integrand q * c0 * b0 / (1 + w^p * b0), b0 = c0^(-m).
  auto tail_from = [&](double c0, double b0) {
    const auto f = [=](double w) {
      return q * c0 * b0 / (1.0 + std::pow(w, p) * b0);
    };
    return must_converge(quad::integrate(f, 0.0, 1.0, spec), "rho").value;
  };

  if (beta == kInfiniteBeta) {
    const auto head = [=](double v) { return 1.0 / (1.0 + std::pow(v, m)); };
    return must_converge(quad::integrate(head, 0.0, 1.0, spec), "rho").value +
           tail_from(1.0, 1.0);
  }
  const double c = std::pow(beta, -2.0 / alpha);
  if (c >= 1.0) return tail_from(c, beta);
  const auto head = [=](double v) { return 1.0 / (1.0 + std::pow(v, m)); };
  return must_converge(quad::integrate(head, c, 1.0, spec), "rho").value +
         tail_from(1.0, 1.0);
}

double cdf_H(double z, double mu_s, double alpha) {
  require_alpha(alpha);
  require_positive(z, "z");
  if (mu_s < 0.0) fail(ErrorCode::Domain, "mu_s must be non-negative");
  if (z == std::numeric_limits<double>::infinity()) return 1.0;
  return std::exp(-h_rate(mu_s, alpha) * std::pow(z, -2.0 / alpha));
}

double pdf_H(double z, double mu_s, double alpha) {
  require_alpha(alpha);
  require_positive(z, "z");
  if (mu_s < 0.0) fail(ErrorCode::Domain, "mu_s must be non-negative");
  const double c = h_rate(mu_s, alpha);
  const double zp = std::pow(z, -2.0 / alpha);
  return 2.0 * c / (alpha * z) * zp * std::exp(-c * zp);
}

double cdf_P(double z, double mu_s, double alpha, double zeta) {
  require_alpha(alpha);
  require_positive(z, "z");
  require_positive(zeta, "zeta");
  if (mu_s < 0.0) fail(ErrorCode::Domain, "mu_s must be non-negative");
  return -std::expm1(-h_rate(mu_s, alpha) * std::pow(z / zeta, 2.0 / alpha));
}

double pdf_P(double z, double mu_s, double alpha, double zeta) {
  require_alpha(alpha);
  require_positive(z, "z");
  require_positive(zeta, "zeta");
  if (mu_s < 0.0) fail(ErrorCode::Domain, "mu_s must be non-negative");
  const double c = h_rate(mu_s, alpha);
  const double zp = std::pow(z / zeta, 2.0 / alpha);
  return 2.0 * c / (alpha * z) * zp * std::exp(-c * zp);
}

double moment_P(double exponent, double mu_s, double alpha, double zeta,
                MomentMethod method, const QuadratureSpec& spec) {
  require_alpha(alpha);
  require_positive(zeta, "zeta");
  if (!(exponent >= 0.0)) fail(ErrorCode::Domain, "moment exponent must be >= 0");
  if (!(mu_s > 0.0)) {
    fail(ErrorCode::Domain, "unbounded moment: seller UE intensity is zero");
  }
  // P^(2/alpha) ~ Exp(rate); P^exponent = (P^(2/alpha))^k.
  const double rate = h_rate(mu_s, alpha) / std::pow(zeta, 2.0 / alpha);
  const double k = 0.5 * exponent * alpha;
  if (method == MomentMethod::ClosedForm) {
    return gamma_fn(1.0 + k) / std::pow(rate, k);
  }

  const auto f = [=](double z) {
    return z == 0.0 ? 0.0 : std::pow(z, exponent) * pdf_P(z, mu_s, alpha, zeta);
  };
  // Integral of z^exponent * pdf_P over [T, inf) equals rate^-k times the
  // upper incomplete gamma Gamma(k + 1, y), y = rate * T^(2/alpha), which is
  // at most y^k e^-y / (1 - k/y) for y > k.
  const auto tail = [=](double t) {
    const double y = rate * std::pow(t, 2.0 / alpha);
    if (y <= 2.0 * k + 1.0) return std::numeric_limits<double>::infinity();
    return std::pow(y, k) * std::exp(-y) / (1.0 - k / y) / std::pow(rate, k);
  };
  const double scale = std::pow(1.0 / rate, 0.5 * alpha);
  return must_converge(quad::integrate_to_infinity(f, scale, tail, spec),
                       "moment quadrature")
      .value;
}

double laplace_buyer(double kappa, const SubBandContext& ctx, double beta,
                     const EvalOptions& opts) {
  check_context(ctx);
  if (!(kappa >= 0.0)) fail(ErrorCode::Domain, "kappa must be >= 0");
  require_positive(beta, "beta");
  return buyer_terms(ctx, beta, opts).at(std::pow(kappa, 2.0 / ctx.alpha));
}

double laplace_seller(double kappa, const SubBandContext& ctx, double beta,
                      const EvalOptions& opts) {
  check_context(ctx);
  if (!(kappa >= 0.0)) fail(ErrorCode::Domain, "kappa must be >= 0");
  require_positive(beta, "beta");
  return seller_terms(ctx, beta, opts).at(std::pow(kappa, 2.0 / ctx.alpha));
}

namespace {

// Integral over z of A exp(-beta noise z^(alpha/2)) exp(-A z) L(beta z^(alpha/2))
// with A = pi * terms.own; the own-operator term doubles as the serving law.
CoverageResult coverage_integral(double beta, const LaplaceTerms& terms,
                                 const SubBandContext& ctx,
                                 const EvalOptions& opts) {
  if (beta == 0.0) return {1.0, 0.0, 0};
  const double alpha = ctx.alpha;
  const double a = kPi * terms.own;
  const double beta_pow = std::pow(beta, 2.0 / alpha);
  const double noise = ctx.noise_linear;

  const auto f = [&](double z) {
    const double signal = a * std::exp(-beta * noise * std::pow(z, 0.5 * alpha));
    return signal * std::exp(-a * z) * terms.at(beta_pow * z);
  };
  quad::TailBound tail;
  // First segment sized to the actual decay; at large beta the integrand is
  // a narrow spike near zero that a 1/A segment can miss entirely.
  double decay = a;
  if (!opts.positive_laplace_exponent) {
    // Every factor but A exp(-A z) is at most one.
    tail = [a](double t) { return std::exp(-a * t); };
    decay += terms.exponent(beta_pow);
  }
  double scale = 1.0 / decay;
  if (noise > 0.0) scale = std::min(scale, std::pow(beta * noise, -2.0 / alpha));
  const auto r = must_converge(
      quad::integrate_to_infinity(f, scale, tail, opts.quad), "coverage");

  CoverageResult out{r.value, r.error, r.subdivisions};
  if (!opts.positive_laplace_exponent) {
    if (out.value > 1.0 + out.estimated_quadrature_error + 1e-12 ||
        out.value < -out.estimated_quadrature_error - 1e-12) {
      fail(ErrorCode::Internal, "coverage outside [0, 1] beyond quadrature error");
    }
    out.value = std::clamp(out.value, 0.0, 1.0);
  }
  return out;
}

CoverageResult buyer_coverage_any(double beta, const SubBandContext& ctx,
                                  const EvalOptions& opts) {
  check_context(ctx);
  if (!(ctx.buyer_intensity > 0.0)) {
    fail(ErrorCode::Domain, "buyer BS intensity must be positive");
  }
  return coverage_integral(beta, buyer_terms(ctx, beta, opts), ctx, opts);
}

CoverageResult seller_coverage_any(double beta, const SubBandContext& ctx,
                                   const EvalOptions& opts) {
  check_context(ctx);
  if (!(ctx.seller_bs_intensity > 0.0)) {
    fail(ErrorCode::Domain, "seller BS intensity must be positive");
  }
  return coverage_integral(beta, seller_terms(ctx, beta, opts), ctx, opts);
}

template <class Coverage>
RateResult rate_over(std::span<const SubBandContext> bands,
                     const EvalOptions& opts, Coverage coverage) {
  RateResult out;
  for (const auto& ctx : bands) {
    const double alpha = ctx.alpha;
    double inner_error = 0.0;
    const auto f = [&](double t) {
      const auto c = coverage(std::expm1(t), ctx, opts);
      inner_error = std::max(inner_error, c.estimated_quadrature_error);
      return c.value;
    };
    quad::TailBound tail;
    if (!opts.positive_laplace_exponent) {
      // coverage(beta) <= beta^(-2/alpha) / rho(alpha, beta), rho increasing.
      tail = [&](double t) {
        const double beta = std::expm1(t);
        return 0.5 * alpha * std::exp(-2.0 * t / alpha) *
               std::pow(-std::expm1(-t), -2.0 / alpha) /
               rho(alpha, beta, opts.quad);
      };
    }
    const auto r = must_converge(quad::integrate_to_infinity(f, 1.0, tail, opts.quad),
                                 "rate");
    out.value += r.value;
    out.estimated_quadrature_error += r.error + inner_error * r.truncation;
    out.subdivisions += r.subdivisions;
  }
  return out;
}

}  // namespace

CoverageResult coverage_buyer(double beta, const SubBandContext& ctx,
                              const EvalOptions& opts) {
  require_positive(beta, "beta");
  return buyer_coverage_any(beta, ctx, opts);
}

CoverageResult coverage_seller(double beta, const SubBandContext& ctx,
                               const EvalOptions& opts) {
  require_positive(beta, "beta");
  return seller_coverage_any(beta, ctx, opts);
}

RateResult rate_buyer(std::span<const SubBandContext> bands,
                      const EvalOptions& opts) {
  return rate_over(bands, opts, buyer_coverage_any);
}

RateResult rate_seller(std::span<const SubBandContext> bands,
                       const EvalOptions& opts) {
  return rate_over(bands, opts, seller_coverage_any);
}

SumRateResult total_sum_rate(const ScenarioConfig& config,
                             const EvalOptions& opts) {
  SumRateResult out;
  for (unsigned s = 0; s < config.sellers.size(); ++s) {
    const auto& spec = config.seller(s);
    if (spec.bs_intensity <= 0.0 || spec.ue_intensity <= 0.0) continue;
    std::vector<SubBandContext> ctxs;
    for (const auto band : config.own_bands(s)) {
      ctxs.push_back(derive_context(config, band, OperatorId::seller(s)));
    }
    const auto r = rate_seller(ctxs, opts);
    out.value += spec.ue_intensity * r.value;
    out.estimated_quadrature_error += spec.ue_intensity * r.estimated_quadrature_error;
  }
  for (unsigned b = 0; b < config.buyers.size(); ++b) {
    const auto& spec = config.buyer(b);
    if (spec.bs_intensity <= 0.0 || spec.ue_intensity <= 0.0) continue;
    std::vector<SubBandContext> ctxs;
    for (const auto band : config.leased_bands(b)) {
      ctxs.push_back(derive_context(config, band, OperatorId::buyer(b)));
    }
    const auto r = rate_buyer(ctxs, opts);
    out.value += spec.ue_intensity * r.value;
    out.estimated_quadrature_error += spec.ue_intensity * r.estimated_quadrature_error;
  }
  return out;
}

}  // namespace spectra::analytic

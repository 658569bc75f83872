#pragma once

// Closed-form distributions of the buyer power-control variables, the
// interference Laplace transforms, coverage probabilities, and average rates.
//
// Sign convention: every Laplace factor is exp(-pi * lambda * ...). Printed
// with a positive exponent the factors grow without bound and the coverage
// integrals diverge, so the negative sign (the PPP generating functional) is
// used throughout and cross-checked against the Monte Carlo engine.

#include <limits>
#include <span>

#include "spectra/model.hpp"
#include "spectra/quadrature.hpp"

namespace spectra::analytic {

using quad::QuadratureSpec;

inline constexpr double kInfiniteBeta = std::numeric_limits<double>::infinity();

enum class MomentMethod { ClosedForm, Quadrature };

struct EvalOptions {
  QuadratureSpec quad;
  MomentMethod moment = MomentMethod::ClosedForm;
  // Negative control for engine validation: evaluates the Laplace factors
  // with a positive exponent and skips the [0, 1] range check.
  bool positive_laplace_exponent = false;
};

struct CoverageResult {
  double value = 0.0;
  double estimated_quadrature_error = 0.0;
  int subdivisions = 0;
};

struct RateResult {
  double value = 0.0;  // nats per channel use
  double estimated_quadrature_error = 0.0;
  int subdivisions = 0;

  double bits() const;
};

/// Integral of 1 / (1 + v^(alpha/2)) over [beta^(-2/alpha), infinity); pass
/// kInfiniteBeta for the lower limit 0.
double rho(double alpha, double beta, const QuadratureSpec& quad = {});

/// Largest buyer-BS to seller-UE gain: CDF and density.
double cdf_H(double z, double mu_s, double alpha);
double pdf_H(double z, double mu_s, double alpha);

/// Buyer transmit power zeta / H: CDF and density.
double cdf_P(double z, double mu_s, double alpha, double zeta);
double pdf_P(double z, double mu_s, double alpha, double zeta);

/// E[P^exponent]. P^(2/alpha) is exponential with rate
/// pi * mu_s * Gamma(1 + 2/alpha) / zeta^(2/alpha), which gives the closed
/// form; the quadrature path integrates z^exponent * pdf_P directly.
double moment_P(double exponent, double mu_s, double alpha, double zeta,
                MomentMethod method = MomentMethod::ClosedForm,
                const QuadratureSpec& quad = {});
inline double moment_P(double mu_s, double alpha, double zeta) {
  return moment_P(2.0 / alpha, mu_s, alpha, zeta);
}

/// Laplace transform of the interference at a typical buyer UE; `beta` sets
/// the exclusion radius of the own-operator term.
double laplace_buyer(double kappa, const SubBandContext& ctx, double beta,
                     const EvalOptions& opts = {});
double laplace_seller(double kappa, const SubBandContext& ctx, double beta,
                      const EvalOptions& opts = {});

/// Coverage probabilities P[SINR > beta] for the typical buyer / seller UE.
CoverageResult coverage_buyer(double beta, const SubBandContext& ctx,
                              const EvalOptions& opts = {});
CoverageResult coverage_seller(double beta, const SubBandContext& ctx,
                               const EvalOptions& opts = {});

/// Average rate summed over the given sub-bands (empty span gives 0).
RateResult rate_buyer(std::span<const SubBandContext> bands,
                      const EvalOptions& opts = {});
RateResult rate_seller(std::span<const SubBandContext> bands,
                       const EvalOptions& opts = {});

struct SumRateResult {
  double value = 0.0;
  double estimated_quadrature_error = 0.0;
};

/// sum_s mu_s * R_s + sum_b mu_b * R_b, i.e. nats per channel use per m^2.
/// Buyers that lease no band contribute zero.
SumRateResult total_sum_rate(const ScenarioConfig& config,
                             const EvalOptions& opts = {});

}  // namespace spectra::analytic

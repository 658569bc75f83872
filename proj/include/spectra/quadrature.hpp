#pragma once

// Adaptive Gauss-Kronrod (7/15) quadrature on finite intervals, plus a
// semi-infinite driver that integrates successively doubled segments until
// the integrand has decayed and a caller-supplied tail bound is met.

#include <functional>

namespace spectra::quad {

struct QuadratureSpec {
  double rel_tolerance = 1e-8;
  double abs_tolerance = 1e-12;
  int max_subdivisions = 2000;
  // Semi-infinite truncation: stop once |f(T)| < ratio * max|f| seen so far.
  double tail_cutoff_ratio = 1e-14;
};

/// Throws InvalidArgument unless tolerances are positive and
/// max_subdivisions >= 50.
void check(const QuadratureSpec& spec);

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  int subdivisions = 0;
  int evaluations = 0;
  bool converged = true;
  // Upper limit actually integrated to (semi-infinite driver only).
  double truncation = 0.0;
};

using Integrand = std::function<double(double)>;
/// Upper bound on the integral of |f| over [t, infinity).
using TailBound = std::function<double(double)>;

/// Single 15-point Kronrod rule with the QUADPACK error heuristic.
QuadResult gauss_kronrod15(const Integrand& f, double a, double b);

/// Adaptive bisection on [a, b] until the summed error estimate falls below
/// max(abs_tolerance, rel_tolerance * |value|).
QuadResult integrate(const Integrand& f, double a, double b,
                     const QuadratureSpec& spec = {});

/// Integral over [0, infinity). `scale` is the first segment length. When
/// `tail` is given its bound at the truncation point is added to the error
/// estimate and must fall below the tolerance before the driver stops.
QuadResult integrate_to_infinity(const Integrand& f, double scale,
                                 const TailBound& tail,
                                 const QuadratureSpec& spec = {});

}  // namespace spectra::quad

#pragma once

namespace spectra {

/// Gamma function for real x (poles at non-positive integers return NaN).
/// Lanczos approximation, g = 7, nine terms; relative error below 1e-14 on
/// the positive axis.
double gamma_fn(double x);

}  // namespace spectra

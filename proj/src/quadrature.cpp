#include "spectra/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "spectra/error.hpp"

namespace spectra::quad {

namespace {

// Kronrod abscissae (descending, centre last) and weights; Gauss weights for
// the odd-indexed abscissae and the centre.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

}  // namespace

void check(const QuadratureSpec& s) {
  if (!(s.rel_tolerance > 0.0) || !(s.abs_tolerance > 0.0) ||
      !(s.tail_cutoff_ratio > 0.0)) {
    fail(ErrorCode::InvalidArgument, "quadrature tolerances must be positive");
  }
  if (s.max_subdivisions < 50) {
    fail(ErrorCode::InvalidArgument, "max_subdivisions must be at least 50");
  }
}

QuadResult gauss_kronrod15(const Integrand& f, double a, double b) {
  const double centr = 0.5 * (a + b);
  const double hlgth = 0.5 * (b - a);
  const double dhlgth = std::abs(hlgth);

  std::array<double, 7> fv1{}, fv2{};
  const double fc = f(centr);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::abs(resk);
  for (int j = 0; j < 7; ++j) {
    const double dx = hlgth * kXgk[j];
    const double f1 = f(centr - dx);
    const double f2 = f(centr + dx);
    fv1[j] = f1;
    fv2[j] = f2;
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    resk += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
  }
  const double reskh = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  }

  QuadResult r;
  r.value = resk * hlgth;
  r.evaluations = 15;
  resabs *= dhlgth;
  resasc *= dhlgth;
  double err = std::abs((resk - resg) * hlgth);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  if (resabs > kTiny / (50.0 * kEps)) err = std::max(50.0 * kEps * resabs, err);
  r.error = err;
  return r;
}

QuadResult integrate(const Integrand& f, double a, double b,
                     const QuadratureSpec& spec) {
  check(spec);
  QuadResult out;
  if (a == b) return out;

  std::priority_queue<Segment> heap;
  const QuadResult first = gauss_kronrod15(f, a, b);
  heap.push({a, b, first.value, first.error});
  double value = first.value;
  double error = first.error;
  out.evaluations = first.evaluations;

  bool stuck = false;
  while (error > std::max(spec.abs_tolerance, spec.rel_tolerance * std::abs(value))) {
    if (out.subdivisions >= spec.max_subdivisions) {
      out.converged = false;
      break;
    }
    Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > std::min(worst.a, worst.b) && mid < std::max(worst.a, worst.b)) ||
        std::abs(worst.b - worst.a) <=
            1e3 * kEps * std::max(std::abs(worst.a), std::abs(worst.b))) {
      stuck = true;
      break;
    }
    heap.pop();
    const QuadResult left = gauss_kronrod15(f, worst.a, mid);
    const QuadResult right = gauss_kronrod15(f, mid, worst.b);
    out.evaluations += left.evaluations + right.evaluations;
    ++out.subdivisions;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push({worst.a, mid, left.value, left.error});
    heap.push({mid, worst.b, right.value, right.error});
  }

  // Re-sum to shed the cancellation accumulated by the running updates.
  value = 0.0;
  error = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  out.value = value;
  out.error = error;
  if (stuck &&
      error > std::max(spec.abs_tolerance, spec.rel_tolerance * std::abs(value))) {
    out.converged = false;
  }
  return out;
}

QuadResult integrate_to_infinity(const Integrand& f, double scale,
                                 const TailBound& tail,
                                 const QuadratureSpec& spec) {
  check(spec);
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    fail(ErrorCode::InvalidArgument, "segment scale must be positive");
  }
  double peak = 0.0;
  const Integrand tracked = [&](double x) {
    const double y = f(x);
    peak = std::max(peak, std::abs(y));
    return y;
  };

  QuadResult out;
  double a = 0.0;
  double b = scale;
  for (int segment = 0; segment < 2000; ++segment) {
    QuadratureSpec local = spec;
    local.abs_tolerance =
        std::max(spec.abs_tolerance, 0.5 * spec.rel_tolerance * std::abs(out.value));
    const QuadResult r = integrate(tracked, a, b, local);
    out.value += r.value;
    out.error += r.error;
    out.subdivisions += r.subdivisions;
    out.evaluations += r.evaluations;
    out.converged = out.converged && r.converged;

    const double fb = std::abs(tracked(b));
    ++out.evaluations;
    const double target =
        std::max(spec.abs_tolerance, spec.rel_tolerance * std::abs(out.value));
    const bool decayed = peak > 0.0 && fb <= spec.tail_cutoff_ratio * peak;
    if (tail) {
      const double bound = tail(b);
      if ((decayed && bound <= target) || bound <= 1e-3 * target) {
        out.error += bound;
        out.truncation = b;
        return out;
      }
    } else if (decayed) {
      out.truncation = b;
      return out;
    }
    a = b;
    b = 2.0 * b;
    if (!std::isfinite(b)) break;
  }
  out.converged = false;
  out.truncation = a;
  return out;
}

}  // namespace spectra::quad

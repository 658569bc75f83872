#include "spectra/stats.hpp"

#include <algorithm>
#include <cmath>

namespace spectra {

double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

bool is_unimodal(std::span<const double> v) {
  if (v.size() < 3) return false;
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  std::size_t i = 0;
  bool rose = false;
  while (i + 1 < v.size() && v[i + 1] >= v[i]) {
    rose = rose || v[i + 1] > v[i];
    ++i;
  }
  bool fell = false;
  while (i + 1 < v.size() && v[i + 1] <= v[i]) {
    fell = fell || v[i + 1] < v[i];
    ++i;
  }
  return rose && fell && i + 1 == v.size();
}

std::size_t argmax(std::span<const double> v) {
  std::size_t best = v.size();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (std::isnan(v[i])) continue;
    if (best == v.size() || v[i] > v[best]) best = i;
  }
  return best;
}

}  // namespace spectra

#pragma once

#include <functional>
#include <span>
#include <vector>

namespace spectra {

/// Two-sided Kolmogorov-Smirnov distance between the empirical CDF of
/// `samples` and `cdf`.
double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf);

/// True when the sequence rises (non-strictly) to a peak and then falls,
/// with at least one strict rise before the peak and one strict fall after.
bool is_unimodal(std::span<const double> values);

/// Index of the largest value; NaN entries are skipped. Empty input or all
/// NaN gives values.size().
std::size_t argmax(std::span<const double> values);

}  // namespace spectra

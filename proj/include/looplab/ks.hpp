#pragma once

#include <functional>
#include <span>
#include <vector>

namespace looplab {

struct KsResult {
  double statistic = 0.0;  ///< sup distance between distribution functions
  double p_value = 1.0;    ///< asymptotic Kolmogorov tail with the usual small-sample correction
  std::size_t n = 0;       ///< effective sample size
};

/// P(K > lambda) for the Kolmogorov distribution.
double kolmogorov_tail(double lambda);

KsResult ks_one_sample(std::span<const double> samples, const std::function<double(double)>& cdf);
KsResult ks_two_sample(std::span<const double> a, std::span<const double> b);

}  // namespace looplab

#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace lwlab::stats {

/// Pairwise (cascaded) summation. Fixed reduction order, so results do not
/// depend on how work was split across threads.
double sum_pairwise(std::span<const double> xs);

double mean(std::span<const double> xs);
double variance(std::span<const double> xs);  // unbiased, needs n >= 2
double central_moment(std::span<const double> xs, int order);

/// Median of a copy of xs (average of middle pair for even length).
double median(std::vector<double> xs);

/// Pearson correlation of two equally long samples.
double correlation(std::span<const double> xs, std::span<const double> ys);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Wilson score interval for a binomial proportion at z standard deviations.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z);

/// Two-sample Kolmogorov-Smirnov distance sup_x |F_a(x) - F_b(x)|.
double ks_distance(std::vector<double> a, std::vector<double> b);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

LinearFit linear_fit(std::span<const double> xs, std::span<const double> ys);

/// Weighted least-squares isotonic regression (pool-adjacent-violators).
/// Returns the non-decreasing fit of ys.
std::vector<double> isotonic_fit(std::span<const double> ys, std::span<const double> weights);

double normal_cdf(double x);

}  // namespace lwlab::stats

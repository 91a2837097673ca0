#pragma once

// Order-independent statistics for parallel Monte Carlo: a mergeable moment
// accumulator (through 4th central moment), Kolmogorov-Smirnov machinery, and
// a least-squares line fit for rate checks.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace diamond::stats {

class MomentAccumulator {
  public:
    void add(double x);
    void merge(const MomentAccumulator& other);

    std::size_t count() const { return n_; }
    double mean() const { return mean_; }
    double variance() const;          // unbiased (n-1)
    double central_moment2() const;   // biased (n)
    double central_moment3() const;
    double central_moment4() const;
    double skewness() const;
    double excess_kurtosis() const;

    double se_mean() const;
    // standard error of the sample variance, sqrt((m4 - s^4 (n-3)/(n-1))/n)
    double se_variance() const;
    double se_skewness() const;  // sqrt(6/n), normal-theory

  private:
    std::size_t n_ = 0;
    double mean_ = 0.0, m2_ = 0.0, m3_ = 0.0, m4_ = 0.0;
};

bool within_k_se(double estimate, double target, double se, double k = 4.0);

double normal_cdf(double x);              // standard normal
double normal_cdf(double x, double mean, double sd);

// KS statistics. Inputs need not be sorted; sorting happens internally.
double ks_one_sample_normal(std::span<const double> sample, double mean, double sd);
double ks_two_sample(std::span<const double> a, std::span<const double> b);

// Asymptotic critical values, c(alpha) * sqrt((n+m)/(n m)) for two samples.
double ks_critical_one_sample(double alpha, std::size_t n);
double ks_critical_two_sample(double alpha, std::size_t n, std::size_t m);

// Permutation p-value for the two-sample KS distance.
double ks_permutation_pvalue(std::span<const double> a, std::span<const double> b,
                             int permutations, std::uint64_t seed);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};
LineFit fit_line(std::span<const double> x, std::span<const double> y);

// "Existence-only constant" rate checks: fit C on the first grid point so that
// |value| = C * rate, then require |value| <= slack * C * rate on the rest.
bool fitted_rate_bound(std::span<const double> values, std::span<const double> rates,
                       double slack = 2.0);

} // namespace diamond::stats

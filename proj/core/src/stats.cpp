#include "diamond/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "diamond/rng.hpp"

namespace diamond::stats {

void MomentAccumulator::add(double x) {
    // Pebay update for central moments
    const double n1 = static_cast<double>(n_);
    n_ += 1;
    const double n = static_cast<double>(n_);
    const double delta = x - mean_;
    const double dn = delta / n;
    const double dn2 = dn * dn;
    const double term1 = delta * dn * n1;
    mean_ += dn;
    m4_ += term1 * dn2 * (n * n - 3.0 * n + 3.0) + 6.0 * dn2 * m2_ - 4.0 * dn * m3_;
    m3_ += term1 * dn * (n - 2.0) - 3.0 * dn * m2_;
    m2_ += term1;
}

void MomentAccumulator::merge(const MomentAccumulator& o) {
    if (o.n_ == 0) return;
    if (n_ == 0) {
        *this = o;
        return;
    }
    const double na = static_cast<double>(n_), nb = static_cast<double>(o.n_);
    const double n = na + nb;
    const double delta = o.mean_ - mean_;
    const double d2 = delta * delta;

    const double m2 = m2_ + o.m2_ + d2 * na * nb / n;
    const double m3 = m3_ + o.m3_ + d2 * delta * na * nb * (na - nb) / (n * n) +
                      3.0 * delta * (na * o.m2_ - nb * m2_) / n;
    const double m4 = m4_ + o.m4_ +
                      d2 * d2 * na * nb * (na * na - na * nb + nb * nb) / (n * n * n) +
                      6.0 * d2 * (na * na * o.m2_ + nb * nb * m2_) / (n * n) +
                      4.0 * delta * (na * o.m3_ - nb * m3_) / n;

    mean_ += delta * nb / n;
    m2_ = m2;
    m3_ = m3;
    m4_ = m4;
    n_ = static_cast<std::size_t>(n);
}

double MomentAccumulator::variance() const {
    return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0;
}
double MomentAccumulator::central_moment2() const {
    return n_ > 0 ? m2_ / static_cast<double>(n_) : 0.0;
}
double MomentAccumulator::central_moment3() const {
    return n_ > 0 ? m3_ / static_cast<double>(n_) : 0.0;
}
double MomentAccumulator::central_moment4() const {
    return n_ > 0 ? m4_ / static_cast<double>(n_) : 0.0;
}
double MomentAccumulator::skewness() const {
    const double s2 = central_moment2();
    return s2 > 0.0 ? central_moment3() / std::pow(s2, 1.5) : 0.0;
}
double MomentAccumulator::excess_kurtosis() const {
    const double s2 = central_moment2();
    return s2 > 0.0 ? central_moment4() / (s2 * s2) - 3.0 : 0.0;
}
double MomentAccumulator::se_mean() const {
    return n_ > 1 ? std::sqrt(variance() / static_cast<double>(n_)) : 0.0;
}
double MomentAccumulator::se_variance() const {
    if (n_ < 4) return 0.0;
    const double n = static_cast<double>(n_);
    const double s2 = variance();
    const double v = (central_moment4() - s2 * s2 * (n - 3.0) / (n - 1.0)) / n;
    return v > 0.0 ? std::sqrt(v) : 0.0;
}
double MomentAccumulator::se_skewness() const {
    return n_ > 0 ? std::sqrt(6.0 / static_cast<double>(n_)) : 0.0;
}

bool within_k_se(double estimate, double target, double se, double k) {
    return std::abs(estimate - target) <= k * se;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }
double normal_cdf(double x, double mean, double sd) { return normal_cdf((x - mean) / sd); }

double ks_one_sample_normal(std::span<const double> sample, double mean, double sd) {
    std::vector<double> s(sample.begin(), sample.end());
    std::sort(s.begin(), s.end());
    const double n = static_cast<double>(s.size());
    double d = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double c = normal_cdf(s[i], mean, sd);
        d = std::max(d, std::max((static_cast<double>(i) + 1.0) / n - c,
                                 c - static_cast<double>(i) / n));
    }
    return d;
}

namespace {
double ks_two_sample_sorted(const std::vector<double>& a, const std::vector<double>& b) {
    const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}
} // namespace

double ks_two_sample(std::span<const double> a, std::span<const double> b) {
    std::vector<double> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return ks_two_sample_sorted(sa, sb);
}

namespace {
double ks_c_of_alpha(double alpha) {
    // inverse of the Kolmogorov tail approximation 2 exp(-2 c^2) = alpha
    return std::sqrt(-0.5 * std::log(alpha / 2.0));
}
} // namespace

double ks_critical_one_sample(double alpha, std::size_t n) {
    return ks_c_of_alpha(alpha) / std::sqrt(static_cast<double>(n));
}

double ks_critical_two_sample(double alpha, std::size_t n, std::size_t m) {
    const double nn = static_cast<double>(n), mm = static_cast<double>(m);
    return ks_c_of_alpha(alpha) * std::sqrt((nn + mm) / (nn * mm));
}

double ks_permutation_pvalue(std::span<const double> a, std::span<const double> b,
                             int permutations, std::uint64_t seed) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_permutation_pvalue: empty sample");
    const double observed = ks_two_sample(a, b);
    std::vector<double> pool(a.begin(), a.end());
    pool.insert(pool.end(), b.begin(), b.end());
    rng::Xoshiro256 gen(rng::splitmix64(seed) ^ 0x5716a2c35d1f0e4bull);
    int at_least = 0;
    std::vector<double> pa(a.size()), pb(b.size());
    for (int p = 0; p < permutations; ++p) {
        // Fisher-Yates over the pooled values
        for (std::size_t i = pool.size() - 1; i > 0; --i) {
            const std::size_t j = static_cast<std::size_t>(gen() % (i + 1));
            std::swap(pool[i], pool[j]);
        }
        pa.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(a.size()));
        pb.assign(pool.begin() + static_cast<std::ptrdiff_t>(a.size()), pool.end());
        if (ks_two_sample(pa, pb) >= observed) ++at_least;
    }
    return (at_least + 1.0) / (permutations + 1.0);
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_line: bad input");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    LineFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
    return f;
}

bool fitted_rate_bound(std::span<const double> values, std::span<const double> rates,
                       double slack) {
    if (values.size() != rates.size() || values.empty())
        throw std::invalid_argument("fitted_rate_bound: bad input");
    const double c = std::abs(values[0]) / rates[0];
    for (std::size_t i = 1; i < values.size(); ++i)
        if (std::abs(values[i]) > slack * c * rates[i]) return false;
    return true;
}

} // namespace diamond::stats

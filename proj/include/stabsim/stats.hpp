#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace stabsim {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double half_width() const { return (hi - lo) / 2.0; }
};

// Wilson score interval for a binomial proportion k/n at z standard
// normal deviates.
inline Interval wilson_interval(std::size_t k, std::size_t n, double z) {
    if (n == 0) throw std::invalid_argument("wilson_interval: n must be positive");
    const double nn = static_cast<double>(n);
    const double p = static_cast<double>(k) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double center = (p + z2 / (2.0 * nn)) / denom;
    const double hw = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
    return {std::max(0.0, center - hw), std::min(1.0, center + hw)};
}

inline double wilson_half_width(std::size_t k, std::size_t n, double z) {
    const Interval iv = wilson_interval(k, n, z);
    return iv.half_width();
}

// Two-sided tail mass of the standard normal beyond |z|.
inline double two_sided_alpha(double z) { return std::erfc(z / std::sqrt(2.0)); }

// Hoeffding half-width for the mean of n i.i.d. variables in an interval of
// length `range`, at the confidence matching z normal deviates.
inline double hoeffding_half_width(std::size_t n, double range, double z) {
    if (n == 0) throw std::invalid_argument("hoeffding_half_width: n must be positive");
    const double alpha = two_sided_alpha(z);
    return range * std::sqrt(std::log(2.0 / alpha) / (2.0 * static_cast<double>(n)));
}

// Streaming mean/variance (Welford).  Reductions over trial buffers run in
// index order so results do not depend on thread count.
class OnlineMoments {
public:
    void add(double x) {
        ++n_;
        const double d = x - mean_;
        mean_ += d / static_cast<double>(n_);
        m2_ += d * (x - mean_);
    }
    std::size_t count() const { return n_; }
    double mean() const { return mean_; }
    double variance() const { return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0; }
    double stddev() const { return std::sqrt(variance()); }
    double std_error() const {
        return n_ > 0 ? stddev() / std::sqrt(static_cast<double>(n_)) : 0.0;
    }

private:
    std::size_t n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

// Half-width for a Monte Carlo mean of variables confined to [0, range]:
// normal approximation, floored at the distribution-free Hoeffding width so
// degenerate samples never report a spuriously tight interval.
inline double mean_half_width(const OnlineMoments& acc, double range, double z) {
    const double normal_hw = z * acc.std_error();
    return std::max(normal_hw, hoeffding_half_width(acc.count(), range, z));
}

// Empirical (1-delta)-quantile: the smallest order statistic q such that the
// fraction of the sample strictly above q is at most delta.
inline double upper_quantile(std::vector<double> sample, double delta) {
    if (sample.empty()) throw std::invalid_argument("upper_quantile: empty sample");
    if (delta < 0.0 || delta > 1.0) throw std::invalid_argument("upper_quantile: delta outside [0,1]");
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    std::size_t rank = static_cast<std::size_t>(std::ceil((1.0 - delta) * n));
    rank = std::min(std::max<std::size_t>(rank, 1), sample.size());
    return sample[rank - 1];
}

// Distribution-free order-statistic interval for the (1-delta)-quantile,
// via the normal approximation to Binomial(n, 1-delta).
inline Interval quantile_order_interval(std::vector<double> sample, double delta, double z) {
    if (sample.empty()) throw std::invalid_argument("quantile_order_interval: empty sample");
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    const double q = 1.0 - delta;
    const double sd = std::sqrt(n * q * (1.0 - q));
    const double center = n * q;
    auto clamp_rank = [&](double r) {
        return std::min(std::max<std::size_t>(static_cast<std::size_t>(std::max(r, 1.0)), 1),
                        sample.size());
    };
    const std::size_t lo = clamp_rank(std::floor(center - z * sd));
    const std::size_t hi = clamp_rank(std::ceil(center + z * sd));
    return {sample[lo - 1], sample[hi - 1]};
}

// Least-squares slope and intercept of y on x.
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    std::size_t points = 0;
};

inline LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("fit_line: size mismatch");
    const std::size_t n = x.size();
    if (n < 2) return {std::numeric_limits<double>::quiet_NaN(),
                       std::numeric_limits<double>::quiet_NaN(), n};
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < n; ++i) { sx += x[i]; sy += y[i]; }
    const double mx = sx / static_cast<double>(n), my = sy / static_cast<double>(n);
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) return {std::numeric_limits<double>::quiet_NaN(), my, n};
    const double slope = sxy / sxx;
    return {slope, my - slope * mx, n};
}

} // namespace stabsim

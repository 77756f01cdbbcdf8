#include "spatnet/truncated_normal.hpp"

#include <cmath>
#include <limits>

#include "spatnet/rng.hpp"

namespace spatnet {

namespace {
constexpr double kLogSqrt2Pi = 0.9189385332046727417803297;
constexpr double kSqrt1_2 = 0.7071067811865475244008444;
} // namespace

double normal_pdf(double z) {
    return std::exp(-0.5 * z * z - kLogSqrt2Pi);
}

double normal_cdf(double z) {
    return 0.5 * std::erfc(-z * kSqrt1_2);
}

double log_normal_cdf(double z) {
    if (z > -8.0) {
        return std::log(normal_cdf(z));
    }
    // Mills-ratio expansion, valid well past where erfc underflows.
    const double z2 = z * z;
    return -0.5 * z2 - kLogSqrt2Pi - std::log(-z) + std::log1p(-1.0 / z2 + 3.0 / (z2 * z2));
}

double trunc_normal_log_pdf(double x, const TruncNormal& d) {
    if (!(x > 0.0)) {
        return -std::numeric_limits<double>::infinity();
    }
    const double z = (x - d.mu) / d.sigma;
    // Normalizer is P(X > 0) = Phi(mu/sigma) for the untruncated normal.
    return -0.5 * z * z - std::log(d.sigma) - kLogSqrt2Pi - log_normal_cdf(d.mu / d.sigma);
}

double trunc_normal_mean(const TruncNormal& d) {
    const double a = -d.mu / d.sigma;
    const double lambda = normal_pdf(a) / normal_cdf(-a);
    return d.mu + d.sigma * lambda;
}

double trunc_normal_var(const TruncNormal& d) {
    const double a = -d.mu / d.sigma;
    const double lambda = normal_pdf(a) / normal_cdf(-a);
    return d.sigma * d.sigma * (1.0 + a * lambda - lambda * lambda);
}

double trunc_normal_sample(const TruncNormal& d, Rng& rng) {
    const double lo = -d.mu / d.sigma; // standardized lower bound
    double z;
    if (lo <= 0.0) {
        do {
            z = rng.normal();
        } while (z < lo);
    } else {
        // Robert (1995) shifted-exponential proposal.
        const double rate = 0.5 * (lo + std::sqrt(lo * lo + 4.0));
        for (;;) {
            z = lo + rng.exponential() / rate;
            const double diff = z - rate;
            if (rng.uniform() <= std::exp(-0.5 * diff * diff)) {
                break;
            }
        }
    }
    return d.mu + d.sigma * z;
}

} // namespace spatnet

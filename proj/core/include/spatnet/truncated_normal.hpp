#pragma once

namespace spatnet {

class Rng;

/// Normal(mu, sigma) truncated to the positive half line.
struct TruncNormal {
    double mu = 0.0;
    double sigma = 1.0;
};

double normal_pdf(double z);
double normal_cdf(double z);
/// log Phi(z), stable into the deep left tail.
double log_normal_cdf(double z);

/// Log density at x; -infinity for x <= 0.
double trunc_normal_log_pdf(double x, const TruncNormal& d);
double trunc_normal_mean(const TruncNormal& d);
double trunc_normal_var(const TruncNormal& d);

/// Rejection sampler (normal proposal below the mode, shifted-exponential
/// proposal in the tail).
double trunc_normal_sample(const TruncNormal& d, Rng& rng);

} // namespace spatnet

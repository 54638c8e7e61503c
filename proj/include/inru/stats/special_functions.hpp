#pragma once

namespace inru::stats {

// Regularized incomplete gamma functions P(a, x) and Q(a, x) = 1 - P(a, x).
// The power series is used for x < a + 1 and a modified-Lentz continued
// fraction otherwise, each iterated to a relative accuracy of about 1e-15,
// which keeps p-values reproducible to 1e-10 relative across platforms.
double igam(double a, double x);
double igamc(double a, double x);

// Standard normal distribution function.
double normal_cdf(double x);

} // namespace inru::stats

#pragma once

#include <utility>
#include <vector>

namespace snlw {

/// Supported Hermite order range. The experiments need orders <= 5; the cap
/// leaves margin while keeping every coefficient exactly representable.
inline constexpr int kMaxHermiteOrder = 16;

/// H_ell(x; sigma), the Hermite polynomial with variance parameter sigma,
/// generated by e^{tx - sigma t^2/2}. Computed by the three-term recurrence
/// H_{l+1} = x H_l - l sigma H_{l-1}, H_0 = 1, H_1 = x, which handles
/// sigma = 0 exactly (H_l(x;0) = x^l).
double hermite(int ell, double x, double sigma);

/// Right side of the translation identity
///   H_k(x + y; sigma) = sum_l binom(k,l) x^{k-l} H_l(y; sigma),
/// evaluated termwise. Contract: equals hermite(k, x + y, sigma).
double hermite_translate(int k, double x, double y, double sigma);

/// Coefficients c_m = binom(k,2m) (2m)!/(2^m m!) sigma^m, m = 0..floor(k/2),
/// such that x^k = sum_m c_m H_{k-2m}(x; sigma). Returned as (m, c_m).
std::vector<std::pair<int, double>> monomial_expansion(int k, double sigma);

/// E[H_k(f; sigma_f) H_m(g; sigma_g)] = delta_{km} k! E[fg]^k for jointly
/// Gaussian f, g.
double wick_pair_expectation(int k, int m, double covariance);

/// (p-1)^{k/2} ||.||_{L^2}, the k-th chaos moment bound, p >= 2.
double hypercontractivity_bound(int k, double p, double l2norm);

double binomial(int n, int k);
double factorial(int n);

}  // namespace snlw

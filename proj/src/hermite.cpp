#include "snlw/hermite.hpp"

#include <cmath>
#include <stdexcept>

namespace snlw {

namespace {
void check_order(int ell) {
    if (ell < 0 || ell > kMaxHermiteOrder)
        throw std::invalid_argument("hermite order must be in [0, 16]");
}
}  // namespace

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double b = 1.0;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return std::round(b);
}

double hermite(int ell, double x, double sigma) {
    check_order(ell);
    if (sigma < 0) throw std::invalid_argument("hermite: sigma must be >= 0");
    if (ell == 0) return 1.0;
    double prev = 1.0;   // H_0
    double cur = x;      // H_1
    for (int l = 1; l < ell; ++l) {
        double next = x * cur - static_cast<double>(l) * sigma * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double hermite_translate(int k, double x, double y, double sigma) {
    check_order(k);
    double sum = 0.0;
    double xpow = 1.0;  // x^{k-l} accumulated from l = k downward
    // Sum from l = k down to 0 so x^{k-l} grows by one factor per term.
    for (int l = k; l >= 0; --l) {
        sum += binomial(k, l) * xpow * hermite(l, y, sigma);
        xpow *= x;
    }
    return sum;
}

std::vector<std::pair<int, double>> monomial_expansion(int k, double sigma) {
    check_order(k);
    std::vector<std::pair<int, double>> out;
    double sigmaPow = 1.0;
    for (int m = 0; 2 * m <= k; ++m) {
        double c = binomial(k, 2 * m) * factorial(2 * m) /
                   (std::pow(2.0, m) * factorial(m)) * sigmaPow;
        out.emplace_back(m, c);
        sigmaPow *= sigma;
    }
    return out;
}

double wick_pair_expectation(int k, int m, double covariance) {
    if (k != m) return 0.0;
    return factorial(k) * std::pow(covariance, k);
}

double hypercontractivity_bound(int k, double p, double l2norm) {
    if (p < 2.0) throw std::invalid_argument("hypercontractivity_bound: p must be >= 2");
    return std::pow(p - 1.0, 0.5 * k) * l2norm;
}

}  // namespace snlw

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace snlw {

// Neumaier compensated accumulator. Used for all statistical reductions so
// that results are a function of summand order only.
class CompensatedSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double compensated_total(const std::vector<double>& xs) {
    CompensatedSum s;
    for (double x : xs) s.add(x);
    return s.value();
}

struct MeanSe {
    double mean = 0.0;
    double se = 0.0;    // standard error of the mean
    double var = 0.0;   // unbiased sample variance
    std::size_t n = 0;
};

// Mean / standard error over xs, accumulated in index order.
inline MeanSe mean_se(const std::vector<double>& xs) {
    MeanSe out;
    out.n = xs.size();
    if (xs.empty()) return out;
    out.mean = compensated_total(xs) / static_cast<double>(xs.size());
    if (xs.size() < 2) return out;
    CompensatedSum sq;
    for (double x : xs) {
        double d = x - out.mean;
        sq.add(d * d);
    }
    out.var = sq.value() / static_cast<double>(xs.size() - 1);
    out.se = std::sqrt(out.var / static_cast<double>(xs.size()));
    return out;
}

inline double median(std::vector<double> xs) {
    if (xs.empty()) throw std::invalid_argument("median of empty sample");
    std::sort(xs.begin(), xs.end());
    std::size_t n = xs.size();
    return (n % 2 == 1) ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slopeStderr = 0.0;
};

// Ordinary least squares y = a + b x.
inline LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_line needs two equally sized samples, n >= 2");
    std::size_t n = x.size();
    CompensatedSum sx, sy;
    for (std::size_t i = 0; i < n; ++i) {
        sx.add(x[i]);
        sy.add(y[i]);
    }
    double mx = sx.value() / n, my = sy.value() / n;
    CompensatedSum sxx, sxy;
    for (std::size_t i = 0; i < n; ++i) {
        sxx.add((x[i] - mx) * (x[i] - mx));
        sxy.add((x[i] - mx) * (y[i] - my));
    }
    if (sxx.value() == 0.0) throw std::invalid_argument("fit_line: degenerate abscissae");
    LineFit fit;
    fit.slope = sxy.value() / sxx.value();
    fit.intercept = my - fit.slope * mx;
    if (n > 2) {
        CompensatedSum res;
        for (std::size_t i = 0; i < n; ++i) {
            double r = y[i] - (fit.intercept + fit.slope * x[i]);
            res.add(r * r);
        }
        fit.slopeStderr = std::sqrt(res.value() / ((n - 2) * sxx.value()));
    }
    return fit;
}

}  // namespace snlw

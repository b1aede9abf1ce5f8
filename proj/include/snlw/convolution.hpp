#pragma once

#include <complex>
#include <functional>
#include <unordered_map>
#include <vector>

#include "snlw/lattice.hpp"
#include "snlw/noise.hpp"

namespace snlw {

enum class Dispersion { Wave, KleinGordon };

/// Oscillator frequency of mode n: |n| for the wave symbol, <n> for
/// Klein-Gordon.
double mode_omega(long long normSq, Dispersion d);

/// gamma(n, t) = int_0^t [sin((t-s) w)/w]^2 ds for w = |n| (w = 0 reads the
/// kernel as (t - s), giving t^3/3).
double gamma_mode(int n1, int n2, double t);
double gamma_omega(double omega, double t);

/// sigma_N(t) = t^3/3 + sum_{0<|n|<=N} { t/(2|n|^2) - sin(2t|n|)/(4|n|^3) },
/// the pointwise variance of the truncated stochastic convolution.
double sigma_exact(int radius, double t);
double sigma_exact(int radius, double t, Dispersion d);

/// Mollified variance: t^3/3 + sum_{|n|>0} |kernelHat(n/N)|^2 gamma(n, t).
/// The sum runs over |n| <= maxRadiusFactor * N (the provided kernels decay
/// well below double precision by there).
double sigma_mollified(int radius, double t,
                       const std::function<double(double, double)>& kernelHat,
                       double maxRadiusFactor = 5.0);

/// Covariance E[Psi_N(x,t) Psi_N(y,t)] as a function of z = x - y:
/// sum_{Z^2_N} gamma(n,t) e_n(z).
double psi_covariance(int radius, double t, double z1, double z2);

/// Exact distributional stepping of the truncated stochastic convolution:
/// per mode the pair (Psi_hat_n, d_t Psi_hat_n) is advanced by the exact
/// rotation of the driven oscillator plus a Gaussian increment with the
/// analytically integrated covariance, so the per-mode law is exact at every
/// path grid time regardless of dt. State starts from (0, 0) at t = 0.
class ConvolutionState {
public:
    ConvolutionState(LatticePtr lattice, ModePath path, Dispersion d = Dispersion::Wave);

    long step_index() const { return step_; }
    double time() const { return static_cast<double>(step_) * path_.dt(); }
    const ModePath& path() const { return path_; }
    const LatticePtr& lattice() const { return lattice_; }
    Dispersion dispersion() const { return disp_; }

    void advance_one();
    void advance_to(long step);
    void advance_to_time(double t, double tol = 1e-9);

    SpectralField position_field() const;
    SpectralField velocity_field() const;
    GridField realize() const;
    GridField realize(int gridSize) const;

    /// Psi(x) at an arbitrary torus point by direct mode summation.
    double point_value(double x1, double x2) const;

private:
    struct StepKernel {
        double rotC, rotS, rotMS;  // cos, sin/w, -w sin
        double l21, l22, l31, l32, l33;  // Cholesky rows for (I_X, I_V); row 1 is sqrt(h)
    };
    static StepKernel make_kernel(double omega, double h);

    LatticePtr lattice_;
    ModePath path_;
    Dispersion disp_;
    long step_ = 0;
    double zeroPos_ = 0.0, zeroVel_ = 0.0;
    std::vector<std::complex<double>> pos_, vel_;  // aligned with lattice half_modes()
    std::vector<const StepKernel*> kernelOf_;      // per half mode
    StepKernel zeroKernel_;
    std::unordered_map<long long, StepKernel> kernels_;
};

/// One exact step j -> j+1. Validates that `path` is the state's own driver
/// and that the state sits at step j.
ConvolutionState step_exact(const ConvolutionState& state, const ModePath& path, long j);

/// A grid realization of :Psi^ell:(., t) = H_ell(Psi(., t); sigma) together
/// with the order and the variance used.
struct WickField {
    GridField values;
    int order = 0;
    double sigma = 0.0;
    double time = 0.0;
};

inline constexpr int kMaxWickOrder = 8;

WickField wick_monomial(const GridField& field, int order, double sigma, double time = 0.0);

// ---------------------------------------------------------------------------
// Statistical diagnostics (Monte Carlo vs. closed forms). Replicas are
// embarrassingly parallel; reductions run in replica order with compensated
// sums, so results do not depend on the worker count.
// ---------------------------------------------------------------------------

struct WickCovarianceCheck {
    double empirical = 0.0;
    double se = 0.0;
    double closedForm = 0.0;
    double z = 0.0;
};

/// Compares the empirical E[:Psi^l:(x) :Psi^l:(y)] against l! K(x-y,t)^l.
WickCovarianceCheck wick_covariance_check(int radius, int order, double t, double x1,
                                          double x2, double y1, double y2, int replicas,
                                          std::uint64_t seed, int workers = 1);

struct CauchyGap {
    double meanH = 0.0;    // E ||:Psi_M^l: - :Psi_N^l:||^2_{H^{-eps}}
    double seH = 0.0;
    double closedFirstChaos = 0.0;  // exact mode sum (order 1 only, else NaN)
    double meanWinf = 0.0;          // W^{-eps,inf} estimator mean
    double seWinf = 0.0;
};

/// Coupled-path gap between Wick monomials at radii N < M, evaluated on an
/// alias-free grid so the H^{-eps} norm is exact.
CauchyGap cauchy_gap(int order, int radiusN, int radiusM, double eps, double t, int replicas,
                     std::uint64_t seed, int workers = 1);

struct HyperCheck {
    int order = 0;
    double p = 0.0;
    double lp = 0.0;      // empirical L^p(Omega) norm of :Psi^k:(x, t)
    double l2 = 0.0;      // empirical L^2(Omega) norm
    double bound = 0.0;   // (p-1)^{k/2} l2
    double se = 0.0;      // standard error of the L^p estimate
    bool pass = false;    // lp <= bound + 3 se
};

HyperCheck hypercontractivity_check(int radius, int order, double p, double t, int replicas,
                                    std::uint64_t seed, int workers = 1);

/// Log-log slope of E||:Psi^l:(t+h) - :Psi^l:(t)||^2_{H^{-eps}} against h.
double time_regularity_slope(int radius, int order, double eps, double t,
                             const std::vector<double>& hs, int replicas, std::uint64_t seed,
                             int workers = 1);

}  // namespace snlw

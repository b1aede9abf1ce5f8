#pragma once

#include <array>
#include <complex>
#include <functional>
#include <memory>
#include <vector>

namespace snlw {

/// Smallest 5-smooth (2^a 3^b 5^c) integer >= n. FFT-friendly sizes.
std::size_t next_fast_size(std::size_t n);
/// Smallest even 5-smooth integer >= n.
std::size_t next_fast_even_size(std::size_t n);

class FrequencyLattice;
using LatticePtr = std::shared_ptr<const FrequencyLattice>;

/// The retained frequency set Z^2_N = { n in Z^2 : |n| <= N } together with
/// the collocation grid size M for the unit torus T^2 = (R/Z)^2.
///
/// The default grid is M = 2(2N+1) rounded up to the next even 5-smooth
/// integer. That satisfies M >= 4N+2, so pointwise products of up to three
/// band-limited fields are alias-free on the retained band after projection.
/// Multiplier tables (|n|^2 per stored index) are precomputed and shared;
/// instances are created through the cached factory and treated as immutable.
class FrequencyLattice {
public:
    static LatticePtr create(int radius);
    static LatticePtr create(int radius, int gridSize);

    int radius() const { return radius_; }
    int grid_size() const { return gridSize_; }
    int side() const { return 2 * radius_ + 1; }
    std::size_t coeff_count() const { return static_cast<std::size_t>(side()) * side(); }

    bool contains(int n1, int n2) const {
        return static_cast<long long>(n1) * n1 + static_cast<long long>(n2) * n2 <=
               static_cast<long long>(radius_) * radius_;
    }
    std::size_t index(int n1, int n2) const {
        return static_cast<std::size_t>(n1 + radius_) * side() + (n2 + radius_);
    }
    /// |n|^2 for the stored index, or -1 outside the disk.
    long long norm_sq(std::size_t idx) const { return normSq_[idx]; }

    /// Modes of the half index set I = (Z_+ x {0}) u (Z x Z_+) inside the
    /// disk, excluding the origin. Together with 0 and the reflection
    /// n -> -n these enumerate Z^2_N once.
    const std::vector<std::array<int, 2>>& half_modes() const { return halfModes_; }

    /// Distinct |n|^2 values over 0 < |n| <= N with multiplicities.
    const std::vector<std::pair<long long, int>>& norm_multiplicities() const {
        return normMult_;
    }

    FrequencyLattice(const FrequencyLattice&) = delete;
    FrequencyLattice& operator=(const FrequencyLattice&) = delete;

private:
    FrequencyLattice(int radius, int gridSize);

    int radius_;
    int gridSize_;
    std::vector<long long> normSq_;
    std::vector<std::array<int, 2>> halfModes_;
    std::vector<std::pair<long long, int>> normMult_;
};

/// Hermitian-symmetric Fourier coefficients of a real field, supported on
/// |n| <= N. Value semantics; operations return new fields.
class SpectralField {
public:
    explicit SpectralField(LatticePtr lattice);

    const LatticePtr& lattice() const { return lattice_; }
    int radius() const { return lattice_->radius(); }

    std::complex<double> get(int n1, int n2) const {
        if (!lattice_->contains(n1, n2)) return {0.0, 0.0};
        return coeffs_[lattice_->index(n1, n2)];
    }
    /// Sets u_hat(n) and its mirror conj at -n. Throws outside the disk.
    void set(int n1, int n2, std::complex<double> value);
    /// Raw coefficient access (square (2N+1)^2 block, zero off-disk).
    std::vector<std::complex<double>>& coeffs() { return coeffs_; }
    const std::vector<std::complex<double>>& coeffs() const { return coeffs_; }

    /// Enforce u_hat(-n) = conj(u_hat(n)) exactly (pairwise averaging).
    void symmetrize();
    bool is_hermitian(double tol) const;
    double max_abs() const;

private:
    LatticePtr lattice_;
    std::vector<std::complex<double>> coeffs_;
};

/// Real samples on the uniform M x M grid { (j1/M, j2/M) }.
class GridField {
public:
    explicit GridField(LatticePtr lattice);

    const LatticePtr& lattice() const { return lattice_; }
    int size() const { return lattice_->grid_size(); }

    double get(int j1, int j2) const {
        return values_[static_cast<std::size_t>(j1) * size() + j2];
    }
    void set(int j1, int j2, double v) {
        values_[static_cast<std::size_t>(j1) * size() + j2] = v;
    }
    std::vector<double>& values() { return values_; }
    const std::vector<double>& values() const { return values_; }
    double max_abs() const;

private:
    LatticePtr lattice_;
    std::vector<double> values_;
};

/// Sharp Fourier truncation P_{N'}: coefficients with |n| <= N' kept, output
/// lattice radius min(N, N').
SpectralField project_dirichlet(const SpectralField& f, int radiusPrime);

/// Fourier-multiplier mollification: u_hat(n) *= kernelHat(n/scale).
/// kernelHat is the R^2 Fourier transform of a mean-one kernel, so
/// kernelHat(0) must equal 1.
SpectralField mollify(const SpectralField& f,
                      const std::function<double(double, double)>& kernelHat, double scale);

/// Bessel potential <grad>^s: u_hat(n) *= (1 + |n|^2)^{s/2}.
SpectralField bessel_potential(const SpectralField& f, double s);

/// Sobolev norm (sum_n <n>^{2s} |u_hat(n)|^2)^{1/2} (e_n orthonormal).
double h_norm(const SpectralField& f, double s);

/// H^s distance between fields of possibly different radii.
double hs_distance(const SpectralField& a, const SpectralField& b, double s);

SpectralField add(const SpectralField& a, const SpectralField& b);
SpectralField scale(const SpectralField& f, double factor);

GridField to_grid(const SpectralField& f);
GridField to_grid(const SpectralField& f, int gridSize);
SpectralField from_grid(const GridField& g);
SpectralField from_grid(const GridField& g, int radius);

/// Quadrature estimate of the L^r(T^2) norm from grid averages (volume 1);
/// r = infinity returns the grid max of |g|.
double lr_norm(const GridField& g, double r);

/// Composite-trapezoid estimate of (int_0^T ||g(t)||_{L^r}^q dt)^{1/q} on a
/// uniform time grid; q = infinity takes the sup over samples.
double strichartz_norm(const std::vector<GridField>& series, double q, double r, double dt);
double strichartz_norm_values(const std::vector<double>& lrNorms, double q, double dt);

/// Full-spectrum Sobolev norm of a grid field: sum over all DFT modes of the
/// M x M grid (centered representatives). Exact whenever the grid resolves
/// the field's spectrum without aliasing.
double sobolev_norm_of_grid(const GridField& g, double s);
/// W^{s,inf} estimator: grid max of |F^{-1}(<n>^s u_hat)| over the full grid
/// spectrum. An estimator, not the exact Banach norm.
double wsinf_estimate_of_grid(const GridField& g, double s);

}  // namespace snlw

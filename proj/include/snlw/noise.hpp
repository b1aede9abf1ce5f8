#pragma once

#include <complex>
#include <cstdint>

namespace snlw {

/// Driver configuration for one cylindrical-Wiener-process realization.
/// dt is the path's own base step: consumers that integrate on coarser grids
/// must use integer multiples of it, so that refining a solver step re-reads
/// the same underlying realization.
struct NoiseConfig {
    std::uint64_t seed = 0;
    int radius = 0;      // truncation N: modes |n| <= N
    double dt = 0.0;     // base time step, > 0
    double horizon = 0.0;  // T >= dt
    int replicaId = 0;
};

/// One realization of the per-mode complex Brownian drivers beta~_n.
///
/// Deterministic function of (seed, replicaId, mode, step): every mode in the
/// half index set owns a counter-based substream, so restriction to a smaller
/// radius and replica parallelism reproduce identical increments without any
/// sequential draw order. beta~_{-n} is conj(beta~_n), never sampled.
///
/// The per-(mode, step) randomness is three standard normals per real
/// component. They back the jointly Gaussian triple
///   (d beta~, int sin((h-s)w)/w d beta~, int cos((h-s)w) d beta~)
/// through its Cholesky factor; the Brownian increment itself is always
/// sqrt(h) * g0, independent of the dispersion w.
class ModePath {
public:
    explicit ModePath(const NoiseConfig& config);

    const NoiseConfig& config() const { return config_; }
    int radius() const { return config_.radius; }
    double dt() const { return config_.dt; }
    double horizon() const { return config_.horizon; }
    long steps() const { return steps_; }

    /// Increment of beta~_n over path step j. Variance dt (complex modes:
    /// Re and Im each dt/2; the zero mode is real with variance dt).
    std::complex<double> increment(int n1, int n2, long step) const;

    /// k-th standard normal backing step `step` of mode (n1, n2); k in
    /// [0, 6). k = 0..2 drive the real component, k = 3..5 the imaginary
    /// one. (n1, n2) must be the canonical half-set representative.
    double step_normal(int n1, int n2, long step, int k) const;

    /// Same increments on |n| <= radiusPrime, the rest dropped. Guarantees
    /// P_{N'} Psi_N = Psi_{N'} pathwise.
    ModePath restrict_to(int radiusPrime) const;

    /// True if (n1, n2) is the stored representative: the half set
    /// I = (Z_+ x {0}) u (Z x Z_+), or the origin.
    static bool is_canonical(int n1, int n2) {
        return (n2 > 0) || (n2 == 0 && n1 >= 0);
    }

private:
    NoiseConfig config_;
    long steps_;
    std::uint64_t pathKey_;  // mixed (seed, replicaId)
};

/// Counter-based standard normal: deterministic in (seed, stream, index).
/// Utility for seeded auxiliary randomness (e.g. initial-data ensembles).
double keyed_normal(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

}  // namespace snlw

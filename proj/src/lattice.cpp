#include "snlw/lattice.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "snlw/stats.hpp"

namespace snlw {

namespace {

bool is_5_smooth(std::size_t n) {
    for (std::size_t p : {2, 3, 5})
        while (n % p == 0) n /= p;
    return n == 1;
}

// ---------------------------------------------------------------------------
// FFTW plan cache. Plans are created once per grid size under a lock and then
// shared read-only; execution uses the new-array interface, which is safe to
// call concurrently on distinct buffers. FFTW_ESTIMATE keeps plan selection
// deterministic across runs.
// ---------------------------------------------------------------------------
class PlanCache {
public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    struct Plans {
        fftw_plan forward;
        fftw_plan backward;
    };

    Plans get(int m) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = plans_.find(m);
        if (it != plans_.end()) return it->second;
        std::size_t count = static_cast<std::size_t>(m) * m;
        fftw_complex* buf = fftw_alloc_complex(count);
        Plans p;
        p.forward = fftw_plan_dft_2d(m, m, buf, buf, FFTW_FORWARD,
                                     FFTW_ESTIMATE | FFTW_UNALIGNED);
        p.backward = fftw_plan_dft_2d(m, m, buf, buf, FFTW_BACKWARD,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
        fftw_free(buf);
        plans_[m] = p;
        return p;
    }

private:
    PlanCache() = default;
    std::mutex mutex_;
    std::map<int, Plans> plans_;
};

void fft2d(std::vector<std::complex<double>>& data, int m, bool forward) {
    auto plans = PlanCache::instance().get(m);
    fftw_complex* ptr = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(forward ? plans.forward : plans.backward, ptr, ptr);
}

int wrap_mode(int n, int m) {
    int r = n % m;
    return r < 0 ? r + m : r;
}

// Centered frequency representative of DFT bin k on an M-point grid.
int centered_freq(int k, int m) { return k <= (m - 1) / 2 ? k : k - m; }

}  // namespace

std::size_t next_fast_size(std::size_t n) {
    if (n == 0) return 1;
    std::size_t v = n;
    while (!is_5_smooth(v)) ++v;
    return v;
}

std::size_t next_fast_even_size(std::size_t n) {
    std::size_t v = std::max<std::size_t>(n, 2);
    if (v % 2 != 0) ++v;
    while (!is_5_smooth(v)) v += 2;
    return v;
}

// ---------------------------------------------------------------------------
// FrequencyLattice
// ---------------------------------------------------------------------------

FrequencyLattice::FrequencyLattice(int radius, int gridSize)
    : radius_(radius), gridSize_(gridSize) {
    if (radius < 0) throw std::invalid_argument("lattice radius must be >= 0");
    if (gridSize < 2 * radius + 2 || gridSize % 2 != 0)
        throw std::invalid_argument("grid size must be even and >= 2N+2");
    int s = side();
    normSq_.assign(static_cast<std::size_t>(s) * s, -1);
    std::map<long long, int> mult;
    for (int n1 = -radius_; n1 <= radius_; ++n1) {
        for (int n2 = -radius_; n2 <= radius_; ++n2) {
            long long d = static_cast<long long>(n1) * n1 + static_cast<long long>(n2) * n2;
            if (d > static_cast<long long>(radius_) * radius_) continue;
            normSq_[index(n1, n2)] = d;
            bool inHalf = (n2 > 0) || (n2 == 0 && n1 > 0);
            if (inHalf) {
                halfModes_.push_back({n1, n2});
                mult[d] += 2;  // counts n and -n
            }
        }
    }
    normMult_.assign(mult.begin(), mult.end());
}

LatticePtr FrequencyLattice::create(int radius) {
    int m = static_cast<int>(next_fast_even_size(2 * (2 * static_cast<std::size_t>(std::max(radius, 0)) + 1)));
    return create(radius, m);
}

LatticePtr FrequencyLattice::create(int radius, int gridSize) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::weak_ptr<const FrequencyLattice>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(radius, gridSize);
    auto it = cache.find(key);
    if (it != cache.end()) {
        if (auto p = it->second.lock()) return p;
    }
    auto p = LatticePtr(new FrequencyLattice(radius, gridSize));
    cache[key] = p;
    return p;
}

// ---------------------------------------------------------------------------
// SpectralField / GridField
// ---------------------------------------------------------------------------

SpectralField::SpectralField(LatticePtr lattice)
    : lattice_(std::move(lattice)), coeffs_(lattice_->coeff_count(), {0.0, 0.0}) {}

void SpectralField::set(int n1, int n2, std::complex<double> value) {
    if (!lattice_->contains(n1, n2))
        throw std::out_of_range("SpectralField::set outside |n| <= N");
    coeffs_[lattice_->index(n1, n2)] = value;
    coeffs_[lattice_->index(-n1, -n2)] = std::conj(value);
}

void SpectralField::symmetrize() {
    int r = lattice_->radius();
    for (int n1 = 0; n1 <= r; ++n1) {
        for (int n2 = (n1 == 0 ? 0 : -r); n2 <= r; ++n2) {
            if (!lattice_->contains(n1, n2)) continue;
            std::size_t i = lattice_->index(n1, n2);
            std::size_t j = lattice_->index(-n1, -n2);
            if (i == j) {
                coeffs_[i] = {coeffs_[i].real(), 0.0};
                continue;
            }
            std::complex<double> avg = 0.5 * (coeffs_[i] + std::conj(coeffs_[j]));
            coeffs_[i] = avg;
            coeffs_[j] = std::conj(avg);
        }
    }
}

bool SpectralField::is_hermitian(double tol) const {
    int r = lattice_->radius();
    for (int n1 = -r; n1 <= r; ++n1)
        for (int n2 = -r; n2 <= r; ++n2) {
            if (!lattice_->contains(n1, n2)) continue;
            std::complex<double> d =
                coeffs_[lattice_->index(n1, n2)] -
                std::conj(coeffs_[lattice_->index(-n1, -n2)]);
            if (std::abs(d) > tol) return false;
        }
    return true;
}

double SpectralField::max_abs() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

GridField::GridField(LatticePtr lattice)
    : lattice_(std::move(lattice)),
      values_(static_cast<std::size_t>(lattice_->grid_size()) * lattice_->grid_size(), 0.0) {}

double GridField::max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

SpectralField project_dirichlet(const SpectralField& f, int radiusPrime) {
    if (radiusPrime < 0) throw std::invalid_argument("projection radius must be >= 0");
    int outRadius = std::min(f.radius(), radiusPrime);
    LatticePtr lat = outRadius == f.radius() ? f.lattice() : FrequencyLattice::create(outRadius);
    SpectralField out(lat);
    long long cap = static_cast<long long>(radiusPrime) * radiusPrime;
    int r = outRadius;
    for (int n1 = -r; n1 <= r; ++n1)
        for (int n2 = -r; n2 <= r; ++n2) {
            long long d = static_cast<long long>(n1) * n1 + static_cast<long long>(n2) * n2;
            if (d > static_cast<long long>(r) * r || d > cap) continue;
            out.coeffs()[lat->index(n1, n2)] = f.get(n1, n2);
        }
    return out;
}

SpectralField mollify(const SpectralField& f,
                      const std::function<double(double, double)>& kernelHat, double scale) {
    if (scale <= 0) throw std::invalid_argument("mollify: scale must be positive");
    if (std::abs(kernelHat(0.0, 0.0) - 1.0) > 1e-12)
        throw std::invalid_argument("mollify: kernelHat(0) must equal 1 (mean-one kernel)");
    SpectralField out(f.lattice());
    int r = f.radius();
    for (int n1 = -r; n1 <= r; ++n1)
        for (int n2 = -r; n2 <= r; ++n2) {
            if (!f.lattice()->contains(n1, n2)) continue;
            double w = kernelHat(n1 / scale, n2 / scale);
            out.coeffs()[f.lattice()->index(n1, n2)] = w * f.get(n1, n2);
        }
    return out;
}

SpectralField bessel_potential(const SpectralField& f, double s) {
    SpectralField out(f.lattice());
    const auto& lat = *f.lattice();
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        long long d = lat.norm_sq(i);
        if (d < 0) continue;
        out.coeffs()[i] = std::pow(1.0 + static_cast<double>(d), 0.5 * s) * f.coeffs()[i];
    }
    return out;
}

double h_norm(const SpectralField& f, double s) {
    CompensatedSum sum;
    const auto& lat = *f.lattice();
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        long long d = lat.norm_sq(i);
        if (d < 0) continue;
        double w = std::pow(1.0 + static_cast<double>(d), s);
        sum.add(w * std::norm(f.coeffs()[i]));
    }
    return std::sqrt(sum.value());
}

double hs_distance(const SpectralField& a, const SpectralField& b, double s) {
    int r = std::max(a.radius(), b.radius());
    CompensatedSum sum;
    for (int n1 = -r; n1 <= r; ++n1)
        for (int n2 = -r; n2 <= r; ++n2) {
            long long d = static_cast<long long>(n1) * n1 + static_cast<long long>(n2) * n2;
            if (d > static_cast<long long>(r) * r) continue;
            std::complex<double> diff = a.get(n1, n2) - b.get(n1, n2);
            if (diff == std::complex<double>(0.0, 0.0)) continue;
            sum.add(std::pow(1.0 + static_cast<double>(d), s) * std::norm(diff));
        }
    return std::sqrt(sum.value());
}

SpectralField add(const SpectralField& a, const SpectralField& b) {
    const SpectralField& big = a.radius() >= b.radius() ? a : b;
    const SpectralField& small = a.radius() >= b.radius() ? b : a;
    SpectralField out = big;
    int r = small.radius();
    for (int n1 = -r; n1 <= r; ++n1)
        for (int n2 = -r; n2 <= r; ++n2) {
            if (!small.lattice()->contains(n1, n2)) continue;
            out.coeffs()[big.lattice()->index(n1, n2)] += small.get(n1, n2);
        }
    return out;
}

SpectralField scale(const SpectralField& f, double factor) {
    SpectralField out = f;
    for (auto& c : out.coeffs()) c *= factor;
    return out;
}

GridField to_grid(const SpectralField& f) { return to_grid(f, f.lattice()->grid_size()); }

GridField to_grid(const SpectralField& f, int gridSize) {
    int r = f.radius();
    if (gridSize < 2 * r + 2)
        throw std::invalid_argument("to_grid: grid size cannot represent the band");
    LatticePtr lat = gridSize == f.lattice()->grid_size()
                         ? f.lattice()
                         : FrequencyLattice::create(r, gridSize);
    std::vector<std::complex<double>> buf(static_cast<std::size_t>(gridSize) * gridSize,
                                          {0.0, 0.0});
    for (int n1 = -r; n1 <= r; ++n1)
        for (int n2 = -r; n2 <= r; ++n2) {
            if (!f.lattice()->contains(n1, n2)) continue;
            std::complex<double> c = f.coeffs()[f.lattice()->index(n1, n2)];
            if (c == std::complex<double>(0.0, 0.0)) continue;
            buf[static_cast<std::size_t>(wrap_mode(n1, gridSize)) * gridSize +
                wrap_mode(n2, gridSize)] = c;
        }
    fft2d(buf, gridSize, /*forward=*/false);
    GridField out(lat);
    for (std::size_t i = 0; i < buf.size(); ++i) out.values()[i] = buf[i].real();
    return out;
}

SpectralField from_grid(const GridField& g) { return from_grid(g, g.lattice()->radius()); }

SpectralField from_grid(const GridField& g, int radius) {
    int m = g.size();
    if (m < 2 * radius + 2)
        throw std::invalid_argument("from_grid: requested band exceeds grid resolution");
    std::vector<std::complex<double>> buf(static_cast<std::size_t>(m) * m);
    for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = {g.values()[i], 0.0};
    fft2d(buf, m, /*forward=*/true);
    LatticePtr lat = radius == g.lattice()->radius() && m == g.lattice()->grid_size()
                         ? g.lattice()
                         : FrequencyLattice::create(radius, m);
    SpectralField out(lat);
    double inv = 1.0 / (static_cast<double>(m) * m);
    for (int n1 = -radius; n1 <= radius; ++n1)
        for (int n2 = -radius; n2 <= radius; ++n2) {
            if (!lat->contains(n1, n2)) continue;
            out.coeffs()[lat->index(n1, n2)] =
                inv * buf[static_cast<std::size_t>(wrap_mode(n1, m)) * m + wrap_mode(n2, m)];
        }
    out.symmetrize();
    return out;
}

double lr_norm(const GridField& g, double r) {
    if (std::isinf(r)) return g.max_abs();
    if (r < 1.0) throw std::invalid_argument("lr_norm: r must be >= 1 or infinity");
    CompensatedSum sum;
    for (double v : g.values()) sum.add(std::pow(std::abs(v), r));
    double count = static_cast<double>(g.values().size());
    return std::pow(sum.value() / count, 1.0 / r);
}

double strichartz_norm_values(const std::vector<double>& lrNorms, double q, double dt) {
    if (lrNorms.empty()) throw std::invalid_argument("strichartz_norm: empty series");
    if (std::isinf(q)) return *std::max_element(lrNorms.begin(), lrNorms.end());
    if (q < 1.0) throw std::invalid_argument("strichartz_norm: q must be >= 1 or infinity");
    if (lrNorms.size() == 1) return 0.0;
    CompensatedSum sum;  // composite trapezoid
    for (std::size_t i = 0; i < lrNorms.size(); ++i) {
        double w = (i == 0 || i + 1 == lrNorms.size()) ? 0.5 : 1.0;
        sum.add(w * std::pow(lrNorms[i], q));
    }
    return std::pow(sum.value() * dt, 1.0 / q);
}

double strichartz_norm(const std::vector<GridField>& series, double q, double r, double dt) {
    if (series.empty()) throw std::invalid_argument("strichartz_norm: empty series");
    std::vector<double> norms;
    norms.reserve(series.size());
    for (const auto& g : series) norms.push_back(lr_norm(g, r));
    return strichartz_norm_values(norms, q, dt);
}

double sobolev_norm_of_grid(const GridField& g, double s) {
    int m = g.size();
    std::vector<std::complex<double>> buf(static_cast<std::size_t>(m) * m);
    for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = {g.values()[i], 0.0};
    fft2d(buf, m, /*forward=*/true);
    double inv = 1.0 / (static_cast<double>(m) * m);
    CompensatedSum sum;
    for (int k1 = 0; k1 < m; ++k1) {
        long long f1 = centered_freq(k1, m);
        for (int k2 = 0; k2 < m; ++k2) {
            long long f2 = centered_freq(k2, m);
            double w = std::pow(1.0 + static_cast<double>(f1 * f1 + f2 * f2), s);
            sum.add(w * std::norm(inv * buf[static_cast<std::size_t>(k1) * m + k2]));
        }
    }
    return std::sqrt(sum.value());
}

double wsinf_estimate_of_grid(const GridField& g, double s) {
    int m = g.size();
    std::vector<std::complex<double>> buf(static_cast<std::size_t>(m) * m);
    for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = {g.values()[i], 0.0};
    fft2d(buf, m, /*forward=*/true);
    double inv = 1.0 / (static_cast<double>(m) * m);
    for (int k1 = 0; k1 < m; ++k1) {
        long long f1 = centered_freq(k1, m);
        for (int k2 = 0; k2 < m; ++k2) {
            long long f2 = centered_freq(k2, m);
            double w = std::pow(1.0 + static_cast<double>(f1 * f1 + f2 * f2), 0.5 * s);
            buf[static_cast<std::size_t>(k1) * m + k2] *= inv * w;
        }
    }
    fft2d(buf, m, /*forward=*/false);
    double mx = 0.0;
    for (const auto& c : buf) mx = std::max(mx, std::abs(c.real()));
    return mx;
}

}  // namespace snlw

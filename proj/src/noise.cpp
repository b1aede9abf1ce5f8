#include "snlw/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace snlw {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

struct Block {
    std::uint32_t w[4];
};

// Philox4x32-10: counter-based, passes standard statistical batteries,
// and gives O(1) random access by (key, counter).
Block philox(std::uint64_t key, std::uint32_t c0, std::uint32_t c1, std::uint32_t c2,
             std::uint32_t c3) {
    std::uint32_t k0 = static_cast<std::uint32_t>(key);
    std::uint32_t k1 = static_cast<std::uint32_t>(key >> 32);
    for (int round = 0; round < 10; ++round) {
        std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * c0;
        std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * c2;
        std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
        std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
        std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
        std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
        std::uint32_t n0 = hi1 ^ c1 ^ k0;
        std::uint32_t n1 = lo1;
        std::uint32_t n2 = hi0 ^ c3 ^ k1;
        std::uint32_t n3 = lo0;
        c0 = n0; c1 = n1; c2 = n2; c3 = n3;
        k0 += kPhiloxW0;
        k1 += kPhiloxW1;
    }
    return Block{{c0, c1, c2, c3}};
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

double uniform_open(std::uint32_t hi, std::uint32_t lo) {
    std::uint64_t u = (static_cast<std::uint64_t>(hi) << 32) | lo;
    return static_cast<double>(u >> 11) * 0x1.0p-53 + 0x1.0p-54;  // in (0, 1)
}

// Two standard normals from one Philox block via Box-Muller.
void block_normals(const Block& b, double out[2]) {
    double u1 = uniform_open(b.w[0], b.w[1]);
    double u2 = uniform_open(b.w[2], b.w[3]);
    double r = std::sqrt(-2.0 * std::log(u1));
    double phi = 2.0 * M_PI * u2;
    out[0] = r * std::cos(phi);
    out[1] = r * std::sin(phi);
}

std::uint64_t pack_mode(int n1, int n2) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(n1)) << 32) |
           static_cast<std::uint32_t>(n2);
}

}  // namespace

ModePath::ModePath(const NoiseConfig& config) : config_(config) {
    if (config_.dt <= 0.0) throw std::invalid_argument("NoiseConfig: dt must be positive");
    if (config_.horizon < config_.dt)
        throw std::invalid_argument("NoiseConfig: horizon must be >= dt");
    if (config_.radius < 0) throw std::invalid_argument("NoiseConfig: radius must be >= 0");
    steps_ = static_cast<long>(std::ceil(config_.horizon / config_.dt - 1e-9));
    pathKey_ = splitmix64(config_.seed ^
                          splitmix64(static_cast<std::uint64_t>(
                              static_cast<std::int64_t>(config_.replicaId))));
}

double ModePath::step_normal(int n1, int n2, long step, int k) const {
    if (!is_canonical(n1, n2))
        throw std::invalid_argument("ModePath::step_normal: mode must be canonical");
    if (step < 0 || step >= steps_)
        throw std::out_of_range("ModePath::step_normal: step index out of range");
    if (k < 0 || k >= 6) throw std::out_of_range("ModePath::step_normal: k in [0,6)");
    std::uint64_t modeKey = splitmix64(pathKey_ ^ pack_mode(n1, n2));
    std::uint32_t block = static_cast<std::uint32_t>(k / 2);
    Block b = philox(modeKey, static_cast<std::uint32_t>(step),
                     static_cast<std::uint32_t>(static_cast<std::uint64_t>(step) >> 32),
                     block, 0x534E4C57u);
    double z[2];
    block_normals(b, z);
    return z[k % 2];
}

std::complex<double> ModePath::increment(int n1, int n2, long step) const {
    long long rsq = static_cast<long long>(n1) * n1 + static_cast<long long>(n2) * n2;
    if (rsq > static_cast<long long>(config_.radius) * config_.radius)
        throw std::out_of_range("ModePath::increment: mode outside |n| <= N");
    if (n1 == 0 && n2 == 0)
        return {std::sqrt(config_.dt) * step_normal(0, 0, step, 0), 0.0};
    if (!is_canonical(n1, n2)) return std::conj(increment(-n1, -n2, step));
    double a = std::sqrt(0.5 * config_.dt);
    return {a * step_normal(n1, n2, step, 0), a * step_normal(n1, n2, step, 3)};
}

ModePath ModePath::restrict_to(int radiusPrime) const {
    if (radiusPrime > config_.radius)
        throw std::invalid_argument("ModePath::restrict_to: radius must not grow");
    NoiseConfig c = config_;
    c.radius = radiusPrime;
    return ModePath(c);
}

double keyed_normal(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    std::uint64_t key = splitmix64(seed ^ splitmix64(stream));
    Block b = philox(key, static_cast<std::uint32_t>(index / 2),
                     static_cast<std::uint32_t>((index / 2) >> 32), 0x6B4E524Du, 0u);
    double z[2];
    block_normals(b, z);
    return z[index % 2];
}

}  // namespace snlw

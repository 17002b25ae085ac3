#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace rdad {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Stable per-index seed schedule: replicate b of root seed s always gets the
// same stream, regardless of execution order or thread count.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
    return splitmix64(root ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

// mt19937_64 plus hand-rolled distributions. The standard distribution
// classes are implementation-defined, which would break the bitwise
// reproducibility contract across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    // [0, 1)
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    // (0, 1)
    double uniform_pos() {
        double u;
        do {
            u = uniform();
        } while (u == 0.0);
        return u;
    }

    // Unbiased integer in [0, n)
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    // Standard normal (Box-Muller, second value cached)
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_pos();
        const double u2 = uniform();
        const double mag = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * 3.14159265358979323846 * u2;
        spare_ = mag * std::sin(angle);
        has_spare_ = true;
        return mag * std::cos(angle);
    }

    // Biexponential (Laplace) with location 0 and the given scale
    double laplace(double scale) {
        const double u = uniform_pos() - 0.5;
        const double mag = std::log(1.0 - 2.0 * std::abs(u));
        return u < 0.0 ? scale * mag : -scale * mag;
    }

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace rdad

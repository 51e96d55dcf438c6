#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

// Seeded random streams and exact discrete/continuous samplers.
//
// Every Monte Carlo draw in this project runs on a stream derived from
// (seed, element index), so results are independent of thread scheduling:
// the OpenMP kernels and their serial references produce bitwise identical
// output by construction.

namespace photonstat {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

// Child-stream seed for element `idx` of a run seeded with `seed`.
inline std::uint64_t substream(std::uint64_t seed, std::uint64_t idx) {
    SplitMix64 sm{seed ^ (0x9E3779B97F4A7C15ULL * (idx + 0x632BE59BD9B4E019ULL))};
    sm.next();
    return sm.next();
}

// xoshiro256++ seeded through SplitMix64.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) {
        SplitMix64 sm{seed};
        for (auto& w : s_) w = sm.next();
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform in [0,1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    // uniform in (0,1]
    double uniform_pos() { return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53; }

    // standard normal, Box-Muller (one value per call, two uniforms consumed)
    double normal() {
        const double u1 = uniform_pos();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
    }

    // exponential with unit mean
    double exponential() { return -std::log(uniform_pos()); }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t s_[4];
};

namespace detail {

// Hoermann's PTRS transformed-rejection sampler, exact for mean >= 10.
inline int poisson_ptrs(RngStream& rng, double mean) {
    const double slam = std::sqrt(mean);
    const double loglam = std::log(mean);
    const double b = 0.931 + 2.53 * slam;
    const double a = -0.059 + 0.02483 * b;
    const double invalpha = 1.1239 + 1.1328 / (b - 3.4);
    const double vr = 0.9277 - 3.6224 / (b - 2.0);
    for (;;) {
        const double u = rng.uniform() - 0.5;
        const double v = rng.uniform_pos();
        const double us = 0.5 - std::fabs(u);
        const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
        if (us >= 0.07 && v <= vr) return static_cast<int>(kf);
        if (kf < 0.0 || (us < 0.013 && v > us)) continue;
        if (std::log(v) + std::log(invalpha) - std::log(a / (us * us) + b) <=
            kf * loglam - mean - std::lgamma(kf + 1.0))
            return static_cast<int>(kf);
    }
}

}  // namespace detail

inline int poisson(RngStream& rng, double mean) {
    if (!(mean > 0.0)) return 0;
    if (mean < 30.0) {
        // Knuth product method
        const double limit = std::exp(-mean);
        int k = 0;
        double p = 1.0;
        do {
            ++k;
            p *= rng.uniform();
        } while (p > limit);
        return k - 1;
    }
    return detail::poisson_ptrs(rng, mean);
}

// Binomial(n, p). Bernoulli summation for small n, geometric waiting-time
// inversion otherwise (both exact); p > 1/2 handled by reflection.
inline int binomial_thin(RngStream& rng, int n, double p) {
    if (n <= 0 || !(p > 0.0)) return 0;
    if (p >= 1.0) return n;
    if (p > 0.5) return n - binomial_thin(rng, n, 1.0 - p);
    if (n <= 64) {
        int c = 0;
        for (int i = 0; i < n; ++i)
            if (rng.uniform() < p) ++c;
        return c;
    }
    const double lq = std::log1p(-p);
    long long pos = 0;
    int count = 0;
    for (;;) {
        pos += static_cast<long long>(std::floor(std::log(rng.uniform_pos()) / lq)) + 1;
        if (pos > n) break;
        ++count;
    }
    return count;
}

// Gamma(shape, scale) for shape >= 1, Marsaglia-Tsang.
inline double gamma_dist(RngStream& rng, double shape, double scale) {
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = rng.normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.uniform_pos();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v * scale;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v * scale;
    }
}

// Photon number of a single thermal mode with mean n_th (geometric law).
inline int thermal_photon(RngStream& rng, double n_th) {
    if (!(n_th > 0.0)) return 0;
    const double lq = std::log(n_th) - std::log1p(n_th);
    const double g = std::floor(std::log(rng.uniform_pos()) / lq);
    if (g >= static_cast<double>(std::numeric_limits<int>::max() / 2))
        return std::numeric_limits<int>::max() / 2;
    return static_cast<int>(g);
}

}  // namespace photonstat

#ifndef SCLGP_PRNG_HPP
#define SCLGP_PRNG_HPP

#include <cmath>
#include <cstdint>

namespace sclgp {

// Cross-platform-stable seeded PRNG (xoshiro256** seeded through splitmix64).
// std::mt19937 + std distributions are implementation-defined, so results
// would not be bit-reproducible across standard libraries; this is.
class Prng {
  public:
    explicit Prng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& w : state_) w = splitmix64(x);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0,1) with 53 bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n) by rejection; unbiased and portable.
    std::uint64_t next_below(std::uint64_t n) {
        if (n == 0) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % n;
    }

    long long next_range(long long lo, long long hi) {  // inclusive bounds
        return lo + static_cast<long long>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool next_bernoulli(double p) { return next_double() < p; }

    // Marsaglia polar method; consumes a variable number of uniforms but is a
    // pure function of the stream, so replay is deterministic.
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * next_double() - 1.0;
            v = 2.0 * next_double() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
    }

    // Deterministic substream derivation for chunked parallel sampling.
    static std::uint64_t derive(std::uint64_t master, std::uint64_t index) {
        std::uint64_t x = master ^ (0x9e3779b97f4a7c15ULL + index * 0xbf58476d1ce4e5b9ULL);
        return splitmix64(x);
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    static std::uint64_t splitmix64(std::uint64_t& x) {
        x += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_[4];
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace sclgp

#endif

#ifndef SOREC_RNG_HPP
#define SOREC_RNG_HPP

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace sorec {

// splitmix64 finalizer (Vigna). Full-avalanche mix used both as the
// stream generator and to derive independent sub-stream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derive a sub-stream seed from a root seed and a key path, e.g.
// derive_seed(root, node, run). Any ordered tuple of integers gives an
// independent, order-insensitive-to-parallelism stream.
inline std::uint64_t derive_seed(std::uint64_t root, std::initializer_list<std::uint64_t> keys) {
    std::uint64_t s = splitmix64(root);
    for (std::uint64_t k : keys)
        s = splitmix64(s ^ (k + 0x9e3779b97f4a7c15ULL));
    return s;
}

// Small deterministic PRNG. The sequence depends only on the seed, never
// on global state or wall clock.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return next_double() < p;
    }

    // Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) {
        return next_u64() % n;
    }

    // Number of failures before the first success of a per-trial
    // probability p process (support {0, 1, 2, ...}).
    std::int64_t geometric_failures(double p) {
        if (p >= 1.0) return 0;
        double u = next_double();
        return static_cast<std::int64_t>(std::floor(std::log1p(-u) / std::log1p(-p)));
    }

private:
    std::uint64_t state_;
};

} // namespace sorec

#endif

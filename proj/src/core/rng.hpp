#pragma once

#include <cstdint>
#include <vector>

namespace ug {

// Deterministic counter-based generator built on the SplitMix64 finalizer
// (Steele, Lea, Flood 2014). Output i of stream (seed, stream) is
// mix(seed ^ mix(stream) , i): pure 64-bit arithmetic, identical on every
// platform, and any (seed, stream, counter) triple can be evaluated
// independently, so derived streams can run in parallel and still merge
// deterministically.
class Rng {
public:
    explicit Rng(uint64_t seed, uint64_t stream = 0)
        : base_(seed ^ scramble(stream * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL)) {}

    uint64_t next() { return scramble(base_ + (++counter_) * 0x9e3779b97f4a7c15ULL); }

    // Uniform in [0, bound), bound >= 1. Rejection-free modulo is fine here:
    // bound is tiny relative to 2^64 in every use, and determinism is what
    // matters, not the ~2^-50 modulo bias.
    uint64_t next_below(uint64_t bound) { return next() % bound; }

    double next_unit() { return double(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) {
        if (p >= 1.0) return true;
        if (p <= 0.0) return false;
        return next_unit() < p;
    }

    // k distinct values from {0..n-1} by partial Fisher-Yates, in draw order.
    std::vector<uint32_t> sample_distinct(uint32_t n, uint32_t k) {
        std::vector<uint32_t> pool(n);
        for (uint32_t i = 0; i < n; ++i) pool[i] = i;
        std::vector<uint32_t> out(k);
        for (uint32_t i = 0; i < k; ++i) {
            uint64_t j = i + next_below(n - i);
            std::swap(pool[i], pool[j]);
            out[i] = pool[i];
        }
        return out;
    }

    static uint64_t derive_seed(uint64_t seed, uint64_t index) {
        return scramble(seed + 0x9e3779b97f4a7c15ULL * (index + 1));
    }

private:
    static uint64_t scramble(uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }

    uint64_t base_;
    uint64_t counter_ = 0;
};

}  // namespace ug

#pragma once
// Seeded random streams with deterministic hierarchical splitting.
// Distribution helpers are hand-rolled on top of mt19937_64 so that
// outputs are bit-identical across standard libraries and platforms.

#include <cstdint>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace stegid {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Child seed from (seed, tag, index). Distinct tags or indices give
// independent streams; the hierarchy master -> trial -> component keeps
// every pipeline stage re-runnable in isolation.
inline uint64_t derive_seed(uint64_t seed, uint64_t tag, uint64_t index = 0) {
    uint64_t h = splitmix64(seed ^ 0x0A02BDBF7BB3C0A7ULL);
    h = splitmix64(h ^ tag);
    h = splitmix64(h ^ index);
    return h;
}

// Stream tags used across the toolkit; centralised so the seed tree is
// auditable from one place.
namespace stream {
inline constexpr uint64_t kTrial = 1;
inline constexpr uint64_t kSource = 2;
inline constexpr uint64_t kImage = 3;
inline constexpr uint64_t kEmbed = 4;
inline constexpr uint64_t kDetector = 5;
inline constexpr uint64_t kSubModel = 6;
inline constexpr uint64_t kTruncate = 7;
inline constexpr uint64_t kGuilty = 8;
inline constexpr uint64_t kCrop = 9;
inline constexpr uint64_t kTrain = 10;
inline constexpr uint64_t kCell = 11;
}  // namespace stream

class Rng {
public:
    explicit Rng(uint64_t seed) : seed_(seed), gen_(seed) {}

    uint64_t seed() const { return seed_; }

    Rng fork(uint64_t tag, uint64_t index = 0) const {
        return Rng(derive_seed(seed_, tag, index));
    }

    uint64_t next_u64() { return gen_(); }

    // Uniform integer in [lo, hi] inclusive, rejection-sampled.
    int64_t uniform_int(int64_t lo, int64_t hi) {
        if (lo > hi) throw std::invalid_argument("Rng::uniform_int: empty range");
        uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo) + 1;
        if (span == 0) return static_cast<int64_t>(next_u64());  // full 64-bit range
        uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return lo + static_cast<int64_t>(x % span);
    }

    // Uniform double in [0,1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller; the spare is cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(uniform_int(0, static_cast<int64_t>(i) - 1));
            std::swap(v[i - 1], v[j]);
        }
    }

    // k distinct indices from [0, n), in draw order (partial Fisher-Yates).
    std::vector<int> sample_without_replacement(int n, int k) {
        if (k < 0 || k > n) throw std::invalid_argument("Rng::sample: k out of range");
        std::vector<int> idx(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
        for (int i = 0; i < k; ++i) {
            int j = static_cast<int>(uniform_int(i, n - 1));
            std::swap(idx[static_cast<size_t>(i)], idx[static_cast<size_t>(j)]);
        }
        idx.resize(static_cast<size_t>(k));
        return idx;
    }

private:
    uint64_t seed_;
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace stegid

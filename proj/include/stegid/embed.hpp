#pragma once
// Batch steganography simulator: capacity accounting, the four
// payload-spreading strategies, and nsF5-style embedding-impact simulation
// on coefficient arrays (magnitudes moved toward zero at the change rate
// implied by the payload).

#include "stegid/image.hpp"
#include "stegid/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace stegid {

enum class Strategy { MaxGreedy, MaxRandom, Linear, Even };

const char* strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);

struct Allocation {
    std::vector<int64_t> lengths;  // bits per image
    Strategy strategy;
};

struct EmbedRecord {
    int image_id = -1;
    int64_t payload_bits = 0;
    double rho = 0.0;       // per-coefficient change rate
    int64_t changes = 0;    // coefficients actually changed
};

// Count of nonzero AC coefficients (the bpnc capacity basis). DC excluded.
int64_t capacity(const CoefArray& c);

// Solves H(rho) = alpha for rho in [0, 1/2], H the binary entropy;
// bisection to 1e-10. Models near-optimal wet-paper coding efficiency.
double inv_binary_entropy(double alpha);

// Distributes total_bits over images with the given capacities.
//   max-greedy: fill in decreasing capacity order until exhausted
//   max-random: same, but over a seeded random image order
//   linear:     proportional shares, remainder to largest capacities
//   even:       equal shares, excess over capacity overflows to later images
// Throws if total_bits exceeds the summed capacity.
Allocation allocate(Strategy s, const std::vector<int64_t>& capacities, int64_t total_bits,
                    Rng& rng);

struct Nsf5Result {
    CoefArray stego;
    EmbedRecord record;
};

// alpha = payload / capacity; rho = H^{-1}(alpha) (or rho = alpha when
// worst_case_rate). Each nonzero AC coefficient is independently decremented
// in magnitude with probability rho. Deterministic under the rng seed.
Nsf5Result nsf5_simulate(const CoefArray& cover, int64_t payload_bits, Rng& rng,
                         bool worst_case_rate = false);

}  // namespace stegid

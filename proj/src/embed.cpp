#include "stegid/embed.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace stegid {

const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::MaxGreedy: return "max-greedy";
        case Strategy::MaxRandom: return "max-random";
        case Strategy::Linear: return "linear";
        case Strategy::Even: return "even";
    }
    return "?";
}

Strategy strategy_from_name(const std::string& name) {
    if (name == "max-greedy") return Strategy::MaxGreedy;
    if (name == "max-random") return Strategy::MaxRandom;
    if (name == "linear") return Strategy::Linear;
    if (name == "even") return Strategy::Even;
    throw std::invalid_argument("unknown strategy: " + name);
}

int64_t capacity(const CoefArray& c) {
    int64_t n = 0;
    const size_t blocks = static_cast<size_t>(c.n_blocks());
    for (size_t b = 0; b < blocks; ++b) {
        const int16_t* blk = c.coefs.data() + b * 64;
        for (int i = 1; i < 64; ++i)  // index 0 is DC
            if (blk[i] != 0) ++n;
    }
    return n;
}

namespace {

double binary_entropy(double rho) {
    if (rho <= 0.0 || rho >= 1.0) return 0.0;
    return -rho * std::log2(rho) - (1.0 - rho) * std::log2(1.0 - rho);
}

// Fill images to capacity following `order` until the payload runs out.
std::vector<int64_t> fill_in_order(const std::vector<int64_t>& caps, const std::vector<int>& order,
                                   int64_t total) {
    std::vector<int64_t> len(caps.size(), 0);
    int64_t remaining = total;
    for (int idx : order) {
        if (remaining <= 0) break;
        int64_t take = std::min(remaining, caps[static_cast<size_t>(idx)]);
        len[static_cast<size_t>(idx)] = take;
        remaining -= take;
    }
    return len;
}

// Image indices sorted by decreasing capacity, ties by lower index.
std::vector<int> capacity_order(const std::vector<int64_t>& caps) {
    std::vector<int> order(caps.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return caps[static_cast<size_t>(a)] > caps[static_cast<size_t>(b)];
    });
    return order;
}

}  // namespace

double inv_binary_entropy(double alpha) {
    if (alpha < 0.0 || alpha > 1.0)
        throw std::invalid_argument("inv_binary_entropy: alpha must be in [0,1]");
    if (alpha == 0.0) return 0.0;
    if (alpha >= 1.0) return 0.5;
    double lo = 0.0, hi = 0.5;
    while (hi - lo > 1e-10) {
        double mid = 0.5 * (lo + hi);
        if (binary_entropy(mid) < alpha)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

Allocation allocate(Strategy s, const std::vector<int64_t>& caps, int64_t total, Rng& rng) {
    if (caps.empty()) throw std::invalid_argument("allocate: no images");
    for (int64_t c : caps)
        if (c < 0) throw std::invalid_argument("allocate: negative capacity");
    int64_t cap_sum = std::accumulate(caps.begin(), caps.end(), int64_t{0});
    if (total < 0 || total > cap_sum)
        throw std::invalid_argument("allocate: payload exceeds total capacity");

    const int n = static_cast<int>(caps.size());
    Allocation out;
    out.strategy = s;

    switch (s) {
        case Strategy::MaxGreedy:
            out.lengths = fill_in_order(caps, capacity_order(caps), total);
            break;
        case Strategy::MaxRandom: {
            std::vector<int> order(caps.size());
            std::iota(order.begin(), order.end(), 0);
            rng.shuffle(order);
            out.lengths = fill_in_order(caps, order, total);
            break;
        }
        case Strategy::Linear: {
            out.lengths.assign(caps.size(), 0);
            int64_t assigned = 0;
            for (int i = 0; i < n; ++i) {
                // floor(c_i * L / sum), capacities fit comfortably in doubles
                // but the product can overflow int64 for large corpora, so use
                // integer math via __int128.
                __int128 prod = static_cast<__int128>(caps[static_cast<size_t>(i)]) * total;
                int64_t share = cap_sum > 0 ? static_cast<int64_t>(prod / cap_sum) : 0;
                out.lengths[static_cast<size_t>(i)] = share;
                assigned += share;
            }
            // Remainder goes one bit at a time to the largest capacities.
            auto order = capacity_order(caps);
            int64_t leftover = total - assigned;
            size_t oi = 0;
            while (leftover > 0) {
                int idx = order[oi % order.size()];
                if (out.lengths[static_cast<size_t>(idx)] < caps[static_cast<size_t>(idx)]) {
                    ++out.lengths[static_cast<size_t>(idx)];
                    --leftover;
                }
                ++oi;
            }
            break;
        }
        case Strategy::Even: {
            out.lengths.assign(caps.size(), 0);
            int64_t base = total / n;
            int64_t extra = total % n;  // first `extra` images get one more bit
            int64_t carry = 0;
            for (int i = 0; i < n; ++i) {
                int64_t want = base + (i < extra ? 1 : 0) + carry;
                int64_t take = std::min(want, caps[static_cast<size_t>(i)]);
                out.lengths[static_cast<size_t>(i)] = take;
                carry = want - take;  // overflow spills into the next image
            }
            // Anything still carried wraps onto earlier images with slack.
            for (int i = 0; i < n && carry > 0; ++i) {
                int64_t slack = caps[static_cast<size_t>(i)] - out.lengths[static_cast<size_t>(i)];
                int64_t take = std::min(carry, slack);
                out.lengths[static_cast<size_t>(i)] += take;
                carry -= take;
            }
            break;
        }
    }
    return out;
}

Nsf5Result nsf5_simulate(const CoefArray& cover, int64_t payload_bits, Rng& rng,
                         bool worst_case_rate) {
    int64_t cap = capacity(cover);
    if (payload_bits < 0 || payload_bits > cap)
        throw std::invalid_argument("nsf5_simulate: payload exceeds capacity");

    double alpha = cap > 0 ? static_cast<double>(payload_bits) / static_cast<double>(cap) : 0.0;
    double rho = worst_case_rate ? alpha : inv_binary_entropy(alpha);

    Nsf5Result out;
    out.stego = cover;
    out.record.payload_bits = payload_bits;
    out.record.rho = rho;

    // One uniform draw per nonzero AC regardless of rho, so that under a
    // fixed seed the changed set grows monotonically with the payload.
    const size_t blocks = static_cast<size_t>(cover.n_blocks());
    for (size_t b = 0; b < blocks; ++b) {
        int16_t* blk = out.stego.coefs.data() + b * 64;
        for (int i = 1; i < 64; ++i) {
            if (blk[i] == 0) continue;
            if (rng.uniform() < rho) {
                blk[i] = static_cast<int16_t>(blk[i] > 0 ? blk[i] - 1 : blk[i] + 1);
                ++out.record.changes;
            }
        }
    }
    return out;
}

}  // namespace stegid

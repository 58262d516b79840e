#include "stegid/outlier.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace stegid {

namespace {

constexpr double kDensitySentinel = 1e12;

// Signed-sqrt MMD can go slightly negative for near-identical sets; LOF
// needs a nonnegative dissimilarity, so negatives count as coincident.
inline double nonneg(double d) { return d > 0.0 ? d : 0.0; }

}  // namespace

double k_distance(int p, const DistanceMatrix& d, int k) {
    if (k < 1 || k >= d.n) throw std::invalid_argument("k_distance: need 1 <= k < point count");
    std::vector<double> dist;
    dist.reserve(static_cast<size_t>(d.n) - 1);
    for (int o = 0; o < d.n; ++o)
        if (o != p) dist.push_back(nonneg(d.at(p, o)));
    std::nth_element(dist.begin(), dist.begin() + (k - 1), dist.end());
    return dist[static_cast<size_t>(k) - 1];
}

std::vector<double> lof_scores(const DistanceMatrix& d, int k) {
    const int n = d.n;
    if (n < k + 2) throw std::invalid_argument("lof_scores: need more than k+1 points");

    std::vector<double> kdist(static_cast<size_t>(n));
    for (int p = 0; p < n; ++p) kdist[static_cast<size_t>(p)] = k_distance(p, d, k);

    // k-neighborhoods may exceed k members when distances tie.
    std::vector<std::vector<int>> nbrs(static_cast<size_t>(n));
    for (int p = 0; p < n; ++p)
        for (int o = 0; o < n; ++o)
            if (o != p && nonneg(d.at(p, o)) <= kdist[static_cast<size_t>(p)])
                nbrs[static_cast<size_t>(p)].push_back(o);

    std::vector<double> lrd(static_cast<size_t>(n));
    for (int p = 0; p < n; ++p) {
        double reach_sum = 0.0;
        for (int o : nbrs[static_cast<size_t>(p)])
            reach_sum += std::max(kdist[static_cast<size_t>(o)], nonneg(d.at(p, o)));
        lrd[static_cast<size_t>(p)] =
            reach_sum > 0.0 ? static_cast<double>(nbrs[static_cast<size_t>(p)].size()) / reach_sum
                            : kDensitySentinel;
    }

    std::vector<double> lof(static_cast<size_t>(n));
    for (int p = 0; p < n; ++p) {
        double s = 0.0;
        for (int o : nbrs[static_cast<size_t>(p)])
            s += lrd[static_cast<size_t>(o)] / lrd[static_cast<size_t>(p)];
        lof[static_cast<size_t>(p)] = s / static_cast<double>(nbrs[static_cast<size_t>(p)].size());
    }
    return lof;
}

SuspicionRanking rank_by_scores(const std::vector<int>& actor_ids,
                                const std::vector<double>& scores) {
    if (actor_ids.size() != scores.size())
        throw std::invalid_argument("rank_by_scores: size mismatch");
    std::vector<size_t> order(actor_ids.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        return actor_ids[a] < actor_ids[b];  // canonical tie rule
    });
    SuspicionRanking out;
    out.actor_ids.reserve(order.size());
    out.scores.reserve(order.size());
    for (size_t i : order) {
        out.actor_ids.push_back(actor_ids[i]);
        out.scores.push_back(scores[i]);
    }
    return out;
}

SuspicionRanking identify_lof(const std::vector<FeatureSet>& sets, int k,
                              const MeasureSpec& measure, uint64_t seed) {
    if (static_cast<int>(sets.size()) <= k + 1)
        throw std::invalid_argument("identify_lof: need n > k+1 actors");
    FeatureMatrix m = normalize_columns(stack_sets(sets));
    std::vector<int> ids;
    auto grouped = group_rows_by_actor(m, ids);
    DistanceMatrix d = actor_distance_matrix(grouped, ids, measure, seed);
    return rank_by_scores(ids, lof_scores(d, k));
}

}  // namespace stegid

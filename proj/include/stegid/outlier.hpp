#pragma once
// Local outlier factor over a precomputed distance matrix and the
// LOF-based identification framework (actors as points, set distances).

#include "stegid/setdist.hpp"

#include <vector>

namespace stegid {

// Distance from point p to its k-th nearest other point (duplicates count).
double k_distance(int p, const DistanceMatrix& d, int k);

// LOF per point: neighborhoods by k-distance (ties may enlarge them),
// reachability distances, local reachability density, then the density
// ratio. Zero reachability sums map LRD to a large sentinel; two coincident
// dense points then get ratio exactly 1.
std::vector<double> lof_scores(const DistanceMatrix& d, int k);

struct SuspicionRanking {
    std::vector<int> actor_ids;   // most suspicious first
    std::vector<double> scores;   // matching LOF values, non-increasing
};

SuspicionRanking rank_by_scores(const std::vector<int>& actor_ids,
                                const std::vector<double>& scores);

// Algorithm-2 pipeline: normalize over all rows, inter-set distances under
// the measure (singletons fall back to Euclidean), LOF, rank descending.
SuspicionRanking identify_lof(const std::vector<FeatureSet>& sets, int k,
                              const MeasureSpec& measure, uint64_t seed);

}  // namespace stegid

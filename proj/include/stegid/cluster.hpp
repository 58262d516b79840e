#pragma once
// Basic agglomerative clustering with the four linkages, dendrogram
// construction, and the clustering-based identification framework
// (final-two-clusters accusation).

#include "stegid/rng.hpp"
#include "stegid/setdist.hpp"

#include <string>
#include <utility>
#include <vector>

namespace stegid {

enum class Linkage { Single, Complete, Centroid, Average };

const char* linkage_name(Linkage l);
Linkage linkage_from_name(const std::string& name);

struct Merge {
    std::vector<int> a;  // member actor ids, sorted
    std::vector<int> b;
    double height = 0.0;
};

struct Dendrogram {
    int n = 0;
    std::vector<Merge> merges;  // n-1 merges
};

// At each step merges the active pair minimizing the linkage distance,
// recomputed from the original inter-point distances. Ties break toward the
// pair with the lexicographically smallest (min id, max-of-min ids) key.
// `conventional_average` switches Average to the inter-cluster mean (the
// printed equation includes intra-cluster pairs; that literal form is the
// default).
Dendrogram agglomerate(const DistanceMatrix& d, Linkage link, bool conventional_average = false);

// Operands of the last merge, smaller cluster first (ties: lower min id).
std::pair<std::vector<int>, std::vector<int>> final_two_clusters(const Dendrogram& t);

struct Accusation {
    std::vector<int> accused;      // k actor ids
    size_t c1_size = 0;
    size_t c2_size = 0;
    std::vector<int> ranking;      // all actors, most suspicious first
};

// k <= |C1|: k seeded-uniform picks from C1; otherwise all of C1 plus
// k - |C1| picks from C2.
Accusation accuse(const std::vector<int>& c1, const std::vector<int>& c2, int k, Rng& rng);

// Full framework: normalize over all rows, MMD distances, agglomerate,
// final two clusters, accuse. Deterministic under the seed.
Accusation identify_clustering(const std::vector<FeatureSet>& sets, Linkage linkage,
                               const MeasureSpec& measure, int k, uint64_t seed,
                               bool conventional_average = false);

}  // namespace stegid

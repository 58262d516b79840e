#pragma once
// Two ensemble schemes: the crop-based clustering ensemble with majority
// voting, and feature-subsampling + image-partition fusion over LOF
// anomaly scores.

#include "stegid/image.hpp"
#include "stegid/outlier.hpp"
#include "stegid/rng.hpp"
#include "stegid/setdist.hpp"

#include <cstdint>
#include <vector>

namespace stegid {

// Uniform random crop window; offsets are pixel-granular (not 8-aligned):
// the re-blocking on recompression is what creates sub-model diversity.
PixelImage crop_random(const PixelImage& img, int crop_width, int crop_height, Rng& rng,
                       int* off_x = nullptr, int* off_y = nullptr);

// Mean of all cross-pair Euclidean distances between the two sets.
double set_distance_avg(const VecList& a, const VecList& b);

// Sequential absorption: seed cluster = closest pair, repeatedly absorb the
// remaining actor closest (on average) to the cluster; the survivor is the
// suspicious actor. Distances per set_distance_avg. Ties break to lower id.
int li_submodel(const std::vector<VecList>& actor_sets, const std::vector<int>& actor_ids);

// Modal element; ties broken by a seeded uniform choice among the tied.
int majority_vote(const std::vector<int>& verdicts, Rng& rng);

// Contiguous slices of size q = m/p, in order. m must be divisible by p.
std::vector<VecList> partition_points(const VecList& vectors, int p);

struct RankedPoint {
    double score = 0.0;  // anomaly score u_j
    int actor_id = 0;    // v_j
    int point_index = 0; // w_j (carried for manifests, unused by the formula)
};

// s(a_i) = sum_j (pn+1-j) * [v_j == a_i] / p over the descending-sorted
// points. Returns per-actor scores aligned with actor_ids.
std::vector<double> fusion_score(const std::vector<RankedPoint>& sorted_points, int p,
                                 const std::vector<int>& actor_ids);

// s_F(a_i) = sum_t (n+1-rank_t(a_i)) / T. Each ranking must be a
// permutation of actor_ids.
std::vector<double> rank_fusion(const std::vector<std::vector<int>>& rankings,
                                const std::vector<int>& actor_ids);

// d drawn uniformly from [ceil(H/2), H-1]; d distinct indices from [0,H).
std::vector<int> feature_subsample(int feature_dim, Rng& rng);

struct LiEnsembleConfig {
    int submodels = 9;          // odd default reduces tie frequency
    int crop_width = 48;
    int crop_height = 48;
};

struct LiEnsembleResult {
    int accused = -1;
    std::vector<int> sub_verdicts;
    std::vector<uint64_t> sub_seeds;
    std::vector<std::vector<std::pair<int, int>>> crop_offsets;  // [submodel][image]
};

// T x (crop -> recompress -> LI-250 -> normalize -> absorption sub-model),
// then majority vote. Images are given as coefficient arrays per actor.
LiEnsembleResult ensemble_li(const std::vector<std::vector<CoefArray>>& actor_images,
                             const std::vector<int>& actor_ids, const LiEnsembleConfig& cfg,
                             uint64_t seed);

struct WuEnsembleConfig {
    int submodels = 9;
    int partitions = 1;        // p; each actor's m vectors split into p sets
    int lof_k = 10;
    bool full_features = false;  // skip subsampling (reduction to plain LOF)
    MeasureSpec measure{};
};

struct WuEnsembleResult {
    SuspicionRanking ranking;
    std::vector<uint64_t> sub_seeds;
    std::vector<std::vector<int>> feature_indices;  // per sub-model
    std::vector<std::vector<int>> sub_rankings;
};

// T x (feature subsample -> partition -> LOF over p*n points -> positional
// fusion) then rank fusion across sub-models. Sets must share vector count.
WuEnsembleResult ensemble_wu(const std::vector<FeatureSet>& sets, const WuEnsembleConfig& cfg,
                             uint64_t seed);

}  // namespace stegid

#pragma once
// Feature preprocessing and inter-actor distance measures: column
// normalization to zero mean / unit variance, the unbiased MMD estimator
// with linear and Gaussian kernels, the mean-embedding distance, and
// pairwise distance-matrix assembly.

#include "stegid/features.hpp"
#include "stegid/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace stegid {

using VecList = std::vector<std::vector<double>>;

struct FeatureMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;      // row-major
    std::vector<int> row_actor;    // actor id per row
    int schema_id = 0;             // 0 raw, 1 pev274, 2 li250

    double at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
    double& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    std::vector<double> row(int r) const {
        return {data.begin() + static_cast<ptrdiff_t>(r) * cols,
                data.begin() + static_cast<ptrdiff_t>(r + 1) * cols};
    }
};

int schema_id_of(Schema s);

// Stacks the sets into one matrix, rows grouped by ascending actor id.
FeatureMatrix stack_sets(const std::vector<FeatureSet>& sets);

// Shifts/scales every column to zero mean and unit (population) variance
// over all rows. Constant columns map to all-zero.
FeatureMatrix normalize_columns(const FeatureMatrix& m);

// Rows regrouped per actor, ascending actor id. Returns parallel id list.
std::vector<VecList> group_rows_by_actor(const FeatureMatrix& m, std::vector<int>& actor_ids);

struct KernelSpec {
    enum class Kind { Linear, Gaussian };
    Kind kind = Kind::Linear;
    double gamma = 1.0;  // gaussian only
};

double kernel_eval(const KernelSpec& k, const std::vector<double>& x, const std::vector<double>& y);

// Unbiased MMD estimate: signed sqrt of (1/(m^2-m)) sum_{i!=j} h[i,j] with
// h[i,j] = k(x_i,x_j)+k(y_i,y_j)-k(x_i,y_j)-k(x_j,y_i). Requires equal set
// sizes; the larger set is truncated uniformly at random under the rng.
// Both sets are brought to a canonical (lexicographic) order first, so the
// estimate depends only on the set pair, not on vector arrival order.
// Sets of fewer than 2 vectors are rejected.
double mmd_unbiased(const VecList& x, const VecList& y, const KernelSpec& k, Rng& rng);

// gamma = 1/eta^2 with eta the median pairwise L2 distance. Throws when all
// vectors coincide (eta = 0).
double median_gamma(const VecList& vectors);

// ||mean(X) - mean(Y)||_2; defined for singleton sets.
double mean_embedding_distance(const VecList& x, const VecList& y);

enum class SetMeasure { LinearMmd, GaussianMmd, MeanEmbedding };

struct MeasureSpec {
    SetMeasure kind = SetMeasure::LinearMmd;
    double gamma = 0.0;  // 0 = compute via median_gamma over all vectors
};

const char* measure_name(SetMeasure m);
SetMeasure measure_from_name(const std::string& name);

struct DistanceMatrix {
    int n = 0;
    std::vector<double> d;  // row-major n*n, symmetric, zero diagonal
    std::vector<int> actor_ids;
    std::string measure_tag;

    double at(int i, int j) const { return d[static_cast<size_t>(i) * n + j]; }
    double& at(int i, int j) { return d[static_cast<size_t>(i) * n + j]; }
};

// Distance between two sets under the measure; sets with fewer than 2
// vectors fall back to the mean-embedding (Euclidean) distance.
double set_distance(const VecList& x, const VecList& y, const MeasureSpec& m, Rng& rng);

// Symmetric matrix over the given sets (assumed already normalized
// globally). Each unordered pair is computed once; the truncation stream
// for pair (i,j) is derived from (seed, i, j) so the result is
// order-independent. With an auto gamma, the Gaussian bandwidth is the
// median over all vectors of all sets.
DistanceMatrix actor_distance_matrix(const std::vector<VecList>& sets,
                                     const std::vector<int>& actor_ids, const MeasureSpec& m,
                                     uint64_t seed);

DistanceMatrix euclidean_distance_matrix(const VecList& points);

}  // namespace stegid

#pragma once
// Linear feature projections: principal component transformation, maximum
// covariance, ridge least squares, and calibrated least squares, plus
// application of a learned basis to feature matrices.

#include "stegid/setdist.hpp"

#include <string>
#include <vector>

namespace stegid {

enum class ProjectionMethod { Pct, Mcv, Ols, Cls };

const char* projection_method_name(ProjectionMethod m);
ProjectionMethod projection_method_from_name(const std::string& name);

struct ProjectionBasis {
    ProjectionMethod method = ProjectionMethod::Pct;
    int input_dim = 0;
    int k = 0;               // achieved direction count (may be below request)
    double lambda = 0.0;
    std::vector<double> w;   // column-major input_dim x k

    double at(int row, int col) const { return w[static_cast<size_t>(col) * input_dim + row]; }
    std::vector<double> direction(int col) const {
        return {w.begin() + static_cast<ptrdiff_t>(col) * input_dim,
                w.begin() + static_cast<ptrdiff_t>(col + 1) * input_dim};
    }
};

// Top-k eigenvectors of X^T X, eigenvalues non-increasing; sign convention:
// the largest-magnitude entry of each direction is positive.
ProjectionBasis pct(const FeatureMatrix& x, int k);

// Iterated analytic maximum-covariance directions w = (Y^T X_k)^T with
// deflation X_k = X_{k-1}(I - w w^T); unit-normalized. Stops early (and
// reports the achieved k) when the covariance vanishes.
ProjectionBasis mcv(const FeatureMatrix& xs, const std::vector<double>& ys, int k);

// w = (X^T X + lambda I)^{-1} X^T Y. With lambda = 0 a singular system is
// rejected.
std::vector<double> ols(const FeatureMatrix& xs, const std::vector<double>& ys, double lambda);

// w_k = (Xc_k^T Xc_k + lambda I)^{-1} Xs_k^T Y with both matrices deflated
// by each previous (unit) direction. Directions keep their regression
// magnitudes; orthogonality is enforced to roundoff. Requires lambda > 0.
ProjectionBasis cls(const FeatureMatrix& xs, const std::vector<double>& ys,
                    const FeatureMatrix& xc, double lambda, int k);

// F * W; row-to-actor map and schema tag (raw) carried over.
FeatureMatrix apply_projection(const FeatureMatrix& f, const ProjectionBasis& basis);

// Relative ridge default: 1e-3 * trace(X^T X) / d.
double default_lambda(const FeatureMatrix& x);

struct TrainingData {
    FeatureMatrix stego;              // X^s, columns pre-normalized
    std::vector<double> change_rates; // Y^s: realized change rate per stego row
    std::vector<double> payload_rates;// alternative label (bpnc), same rows
    FeatureMatrix cover;              // X^c
};

}  // namespace stegid

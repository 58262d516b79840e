#include "stegid/project.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace stegid {

namespace {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

Matrix to_eigen(const FeatureMatrix& m) {
    return Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                          Eigen::RowMajor>>(m.data.data(), m.rows, m.cols);
}

// Largest-magnitude entry positive; first index wins magnitude ties.
void fix_sign(Vector& w) {
    int best = 0;
    for (int i = 1; i < w.size(); ++i)
        if (std::abs(w[i]) > std::abs(w[best])) best = i;
    if (w[best] < 0.0) w = -w;
}

ProjectionBasis make_basis(ProjectionMethod method, const Matrix& w, double lambda) {
    ProjectionBasis out;
    out.method = method;
    out.input_dim = static_cast<int>(w.rows());
    out.k = static_cast<int>(w.cols());
    out.lambda = lambda;
    out.w.resize(static_cast<size_t>(w.rows()) * static_cast<size_t>(w.cols()));
    for (int c = 0; c < w.cols(); ++c)
        for (int r = 0; r < w.rows(); ++r)
            out.w[static_cast<size_t>(c) * static_cast<size_t>(w.rows()) + static_cast<size_t>(r)] =
                w(r, c);
    return out;
}

Vector check_ys(const FeatureMatrix& xs, const std::vector<double>& ys) {
    if (static_cast<int>(ys.size()) != xs.rows)
        throw std::invalid_argument("projection: Y length must match stego row count");
    return Eigen::Map<const Vector>(ys.data(), static_cast<Eigen::Index>(ys.size()));
}

}  // namespace

const char* projection_method_name(ProjectionMethod m) {
    switch (m) {
        case ProjectionMethod::Pct: return "pct";
        case ProjectionMethod::Mcv: return "mcv";
        case ProjectionMethod::Ols: return "ols";
        case ProjectionMethod::Cls: return "cls";
    }
    return "?";
}

ProjectionMethod projection_method_from_name(const std::string& name) {
    if (name == "pct") return ProjectionMethod::Pct;
    if (name == "mcv") return ProjectionMethod::Mcv;
    if (name == "ols") return ProjectionMethod::Ols;
    if (name == "cls") return ProjectionMethod::Cls;
    throw std::invalid_argument("unknown projection method: " + name);
}

ProjectionBasis pct(const FeatureMatrix& x, int k) {
    if (k < 1 || k > x.cols) throw std::invalid_argument("pct: k must be in [1, d]");
    Matrix xm = to_eigen(x);
    Matrix gram = xm.transpose() * xm;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(gram);
    if (solver.info() != Eigen::Success) throw std::runtime_error("pct: eigensolve failed");

    // Eigen returns eigenvalues ascending; take the top k reversed.
    Matrix w(x.cols, k);
    for (int i = 0; i < k; ++i) {
        Vector v = solver.eigenvectors().col(x.cols - 1 - i);
        fix_sign(v);
        w.col(i) = v;
    }
    return make_basis(ProjectionMethod::Pct, w, 0.0);
}

ProjectionBasis mcv(const FeatureMatrix& xs, const std::vector<double>& ys, int k) {
    if (k < 1 || k > xs.cols) throw std::invalid_argument("mcv: k must be in [1, d]");
    Vector y = check_ys(xs, ys);
    Matrix x = to_eigen(xs);

    // Feature-space deflation X(I - w w^T) annihilates the next covariance
    // exactly (X'^T y = (I - w w^T) X^T y = 0 since w || X^T y), so only one
    // direction would ever exist. Deflate the fitted score t = Xw out of the
    // sample space instead (the PLS1 weight sequence); successive weights
    // stay mutually orthogonal and the k = 1 direction is unchanged.
    const double scale = std::max(1.0, x.cwiseAbs().maxCoeff() * y.cwiseAbs().maxCoeff());
    Matrix w(xs.cols, k);
    int achieved = 0;
    for (int i = 0; i < k; ++i) {
        Vector cov = x.transpose() * y;  // (Y^T X_k)^T
        double norm = cov.norm();
        if (norm <= 1e-10 * scale) break;  // covariance exhausted
        Vector dir = cov / norm;
        w.col(achieved++) = dir;
        Vector t = x * dir;
        double tt = t.squaredNorm();
        if (tt <= 1e-30) break;
        Vector loadings = x.transpose() * t / tt;
        x -= t * loadings.transpose();
    }
    if (achieved == 0) throw std::invalid_argument("mcv: zero covariance between X and Y");
    return make_basis(ProjectionMethod::Mcv, w.leftCols(achieved), 0.0);
}

std::vector<double> ols(const FeatureMatrix& xs, const std::vector<double>& ys, double lambda) {
    if (lambda < 0.0) throw std::invalid_argument("ols: lambda must be >= 0");
    Vector y = check_ys(xs, ys);
    Matrix x = to_eigen(xs);
    Matrix gram = x.transpose() * x;
    gram.diagonal().array() += lambda;
    Vector rhs = x.transpose() * y;

    if (lambda == 0.0) {
        // LDLT happily solves consistent singular systems, so detect rank
        // deficiency from the eigenvalue range.
        Eigen::SelfAdjointEigenSolver<Matrix> es(gram, Eigen::EigenvaluesOnly);
        double emin = es.eigenvalues().minCoeff();
        double emax = es.eigenvalues().maxCoeff();
        if (emax <= 0.0 || emin <= 1e-12 * emax)
            throw std::invalid_argument("ols: X^T X is singular; use lambda > 0");
    }

    Eigen::LDLT<Matrix> ldlt(gram);
    Vector w = ldlt.solve(rhs);
    double resid = (gram * w - rhs).norm();
    double ref = std::max(rhs.norm(), 1e-300);
    if (ldlt.info() != Eigen::Success || resid > 1e-8 * ref)
        throw std::runtime_error("ols: solve failed");
    return {w.data(), w.data() + w.size()};
}

ProjectionBasis cls(const FeatureMatrix& xs, const std::vector<double>& ys,
                    const FeatureMatrix& xc, double lambda, int k) {
    if (lambda <= 0.0) throw std::invalid_argument("cls: lambda must be > 0");
    if (k < 1 || k > xs.cols) throw std::invalid_argument("cls: k must be in [1, d]");
    if (xc.cols != xs.cols) throw std::invalid_argument("cls: cover/stego column mismatch");
    Vector y = check_ys(xs, ys);
    Matrix xsm = to_eigen(xs);
    Matrix xcm = to_eigen(xc);

    Matrix w(xs.cols, k);
    Matrix unit(xs.cols, k);  // unit directions, for deflation and orthogonality
    int achieved = 0;
    for (int i = 0; i < k; ++i) {
        Matrix gram = xcm.transpose() * xcm;
        gram.diagonal().array() += lambda;

        // Condition estimate from the symmetric eigenvalue range.
        Eigen::SelfAdjointEigenSolver<Matrix> es(gram, Eigen::EigenvaluesOnly);
        double emin = es.eigenvalues().minCoeff();
        double emax = es.eigenvalues().maxCoeff();
        if (emin <= 0.0 || emax / emin > 1e14)
            throw std::runtime_error("cls: ill-conditioned system, cond ~ " +
                                     std::to_string(emin > 0.0 ? emax / emin : INFINITY));

        Vector rhs = xsm.transpose() * y;
        Vector wi = Eigen::LDLT<Matrix>(gram).solve(rhs);

        // Kill roundoff drift against previous directions.
        for (int j = 0; j < achieved; ++j) wi -= unit.col(j).dot(wi) * unit.col(j);
        double norm = wi.norm();
        if (norm <= 1e-14) break;  // regression signal exhausted

        w.col(achieved) = wi;
        unit.col(achieved) = wi / norm;
        xsm -= (xsm * unit.col(achieved)) * unit.col(achieved).transpose();
        xcm -= (xcm * unit.col(achieved)) * unit.col(achieved).transpose();
        ++achieved;
    }
    if (achieved == 0) throw std::invalid_argument("cls: no usable direction found");
    return make_basis(ProjectionMethod::Cls, w.leftCols(achieved), lambda);
}

FeatureMatrix apply_projection(const FeatureMatrix& f, const ProjectionBasis& basis) {
    if (f.cols != basis.input_dim)
        throw std::invalid_argument("apply_projection: dimension mismatch");
    Matrix x = to_eigen(f);
    Eigen::Map<const Matrix> w(basis.w.data(), basis.input_dim, basis.k);
    Matrix y = x * w;

    FeatureMatrix out;
    out.rows = f.rows;
    out.cols = basis.k;
    out.schema_id = 0;  // projected features are raw
    out.row_actor = f.row_actor;
    out.data.resize(static_cast<size_t>(out.rows) * static_cast<size_t>(out.cols));
    for (int r = 0; r < out.rows; ++r)
        for (int c = 0; c < out.cols; ++c) out.at(r, c) = y(r, c);
    return out;
}

double default_lambda(const FeatureMatrix& x) {
    Matrix xm = to_eigen(x);
    double trace = (xm.transpose() * xm).trace();
    return 1e-3 * trace / static_cast<double>(x.cols);
}

}  // namespace stegid

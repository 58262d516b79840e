#include "stegid/project.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace stegid;

namespace {

FeatureMatrix matrix_from(const std::vector<std::vector<double>>& rows) {
    FeatureMatrix m;
    m.rows = static_cast<int>(rows.size());
    m.cols = static_cast<int>(rows.front().size());
    for (const auto& r : rows) m.data.insert(m.data.end(), r.begin(), r.end());
    m.row_actor.assign(static_cast<size_t>(m.rows), 0);
    return m;
}

FeatureMatrix random_matrix(Rng& rng, int rows, int cols, double scale = 1.0) {
    FeatureMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.data.resize(static_cast<size_t>(rows) * cols);
    for (auto& v : m.data) v = scale * rng.normal();
    m.row_actor.assign(static_cast<size_t>(rows), 0);
    return m;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<std::vector<double>> gram(const FeatureMatrix& x) {
    std::vector<std::vector<double>> g(static_cast<size_t>(x.cols),
                                       std::vector<double>(static_cast<size_t>(x.cols), 0.0));
    for (int r = 0; r < x.rows; ++r)
        for (int i = 0; i < x.cols; ++i)
            for (int j = 0; j < x.cols; ++j)
                g[static_cast<size_t>(i)][static_cast<size_t>(j)] += x.at(r, i) * x.at(r, j);
    return g;
}

}  // namespace

TEST_SUITE_BEGIN("project");

TEST_CASE("pct on a one-axis point pair") {
    FeatureMatrix x = matrix_from({{1.0, 0.0}, {-1.0, 0.0}});
    ProjectionBasis b = pct(x, 1);
    REQUIRE(b.k == 1);
    CHECK(b.at(0, 0) == doctest::Approx(1.0).epsilon(1e-12));  // sign convention
    CHECK(b.at(1, 0) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("pct eigen residuals and oracle subspace") {
    Rng rng(600);
    for (int t = 0; t < 25; ++t) {
        FeatureMatrix x = random_matrix(rng, 6, 4);
        ProjectionBasis b = pct(x, 4);
        auto g = gram(x);

        // Residual ||G w - lambda w|| per direction, lambda from the quotient.
        for (int c = 0; c < 4; ++c) {
            auto w = b.direction(c);
            std::vector<double> gw(4, 0.0);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    gw[static_cast<size_t>(i)] +=
                        g[static_cast<size_t>(i)][static_cast<size_t>(j)] * w[static_cast<size_t>(j)];
            double lambda = dot(gw, w);
            double resid = 0;
            for (int i = 0; i < 4; ++i) {
                double r = gw[static_cast<size_t>(i)] - lambda * w[static_cast<size_t>(i)];
                resid += r * r;
            }
            CHECK(std::sqrt(resid) < 1e-8);
        }

        // Jacobi oracle: same eigenvalues (descending) and aligned directions.
        std::vector<double> evals;
        std::vector<std::vector<double>> evecs;
        oracle::jacobi_eigen(g, evals, evecs);
        for (int c = 0; c < 4; ++c) {
            auto w = b.direction(c);
            std::vector<double> gw(4, 0.0);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    gw[static_cast<size_t>(i)] +=
                        g[static_cast<size_t>(i)][static_cast<size_t>(j)] * w[static_cast<size_t>(j)];
            CHECK(dot(gw, w) == doctest::Approx(evals[static_cast<size_t>(c)]).epsilon(1e-7));
            double align = 0;
            for (int i = 0; i < 4; ++i)
                align += w[static_cast<size_t>(i)] * evecs[static_cast<size_t>(i)][static_cast<size_t>(c)];
            CHECK(std::fabs(align) == doctest::Approx(1.0).epsilon(1e-6));
        }
    }
    FeatureMatrix x = random_matrix(rng, 6, 4);
    CHECK_THROWS_AS(pct(x, 5), std::invalid_argument);
}

TEST_CASE("mcv finds the covariant axis") {
    // Y correlates with column 0 only.
    Rng rng(601);
    std::vector<std::vector<double>> rows;
    std::vector<double> ys;
    for (int i = 0; i < 30; ++i) {
        double y = rng.normal();
        rows.push_back({y, rng.normal(), rng.normal()});
        ys.push_back(y);
    }
    ProjectionBasis b = mcv(matrix_from(rows), ys, 2);
    REQUIRE(b.k == 2);
    CHECK(std::fabs(b.at(0, 0)) > 0.95);
    // Unit norms and pairwise orthogonality.
    for (int c = 0; c < b.k; ++c)
        CHECK(std::sqrt(dot(b.direction(c), b.direction(c))) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::fabs(dot(b.direction(0), b.direction(1))) < 1e-8);
}

TEST_CASE("mcv second direction matches a grid search over the complement") {
    Rng rng(602);
    FeatureMatrix x = random_matrix(rng, 20, 3);
    std::vector<double> ys;
    for (int i = 0; i < 20; ++i) ys.push_back(x.at(i, 0) + 0.5 * x.at(i, 1) + 0.2 * rng.normal());
    ProjectionBasis b = mcv(x, ys, 2);
    REQUIRE(b.k == 2);

    // Reproduce the deflation independently: remove the fitted score of w1
    // from the sample space, then maximize the residual covariance over the
    // unit circle orthogonal to w1 (where w2 must live).
    auto w1 = b.direction(0);
    std::vector<double> t(static_cast<size_t>(x.rows), 0.0);
    double tt = 0;
    for (int r = 0; r < x.rows; ++r) {
        for (int c = 0; c < 3; ++c) t[static_cast<size_t>(r)] += x.at(r, c) * w1[static_cast<size_t>(c)];
        tt += t[static_cast<size_t>(r)] * t[static_cast<size_t>(r)];
    }
    std::vector<double> loadings(3, 0.0);
    for (int c = 0; c < 3; ++c) {
        for (int r = 0; r < x.rows; ++r) loadings[static_cast<size_t>(c)] += x.at(r, c) * t[static_cast<size_t>(r)];
        loadings[static_cast<size_t>(c)] /= tt;
    }
    FeatureMatrix deflated = x;
    for (int r = 0; r < x.rows; ++r)
        for (int c = 0; c < 3; ++c)
            deflated.at(r, c) -= t[static_cast<size_t>(r)] * loadings[static_cast<size_t>(c)];

    // Orthonormal frame for the complement of w1.
    std::vector<double> u{-w1[1], w1[0], 0.0};
    double un = std::sqrt(dot(u, u));
    if (un < 1e-6) {
        u = {0.0, -w1[2], w1[1]};
        un = std::sqrt(dot(u, u));
    }
    for (auto& e : u) e /= un;
    std::vector<double> v{w1[1] * u[2] - w1[2] * u[1], w1[2] * u[0] - w1[0] * u[2],
                          w1[0] * u[1] - w1[1] * u[0]};

    auto objective = [&](const std::vector<double>& w) {
        double s = 0;
        for (int r = 0; r < deflated.rows; ++r) {
            double xw = 0;
            for (int c = 0; c < 3; ++c) xw += deflated.at(r, c) * w[static_cast<size_t>(c)];
            s += ys[static_cast<size_t>(r)] * xw;
        }
        return s;
    };
    double best = -1e300;
    std::vector<double> best_w(3, 0.0);
    const int grid = 20000;
    for (int g = 0; g < grid; ++g) {
        double a = 2.0 * M_PI * g / grid;
        std::vector<double> w(3);
        for (int c = 0; c < 3; ++c)
            w[static_cast<size_t>(c)] =
                std::cos(a) * u[static_cast<size_t>(c)] + std::sin(a) * v[static_cast<size_t>(c)];
        double o = objective(w);
        if (o > best) {
            best = o;
            best_w = w;
        }
    }
    double align = std::fabs(dot(best_w, b.direction(1)));
    CHECK(align > std::cos(2.0 * M_PI / grid) - 1e-9);
}

TEST_CASE("ols closed forms and the ridge limit") {
    // Orthonormal columns, lambda = 0: w = X^T y.
    FeatureMatrix x = matrix_from({{1.0, 0.0}, {0.0, 1.0}});
    std::vector<double> y{3.0, -2.0};
    auto w = ols(x, y, 0.0);
    CHECK(w[0] == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(w[1] == doctest::Approx(-2.0).epsilon(1e-10));

    // Heavy ridge shrinks toward zero.
    Rng rng(603);
    FeatureMatrix xr = random_matrix(rng, 12, 3);
    std::vector<double> yr;
    for (int i = 0; i < 12; ++i) yr.push_back(rng.normal());
    auto w_small = ols(xr, yr, 0.1);
    auto w_big = ols(xr, yr, 1e9);
    double ns = std::sqrt(dot(w_small, w_small)), nb = std::sqrt(dot(w_big, w_big));
    CHECK(nb < ns);
    CHECK(nb < 1e-6);

    // Singular system without ridge is rejected.
    FeatureMatrix sing = matrix_from({{1.0, 1.0}, {2.0, 2.0}, {3.0, 3.0}});
    std::vector<double> ys{1.0, 2.0, 3.0};
    CHECK_THROWS(ols(sing, ys, 0.0));
    CHECK_NOTHROW(ols(sing, ys, 1e-6));
}

TEST_CASE("ols matches an independent solver and is perturbation-optimal") {
    Rng rng(604);
    FeatureMatrix x = random_matrix(rng, 8, 3);
    std::vector<double> y;
    for (int i = 0; i < 8; ++i) y.push_back(rng.normal());
    const double lambda = 0.1;
    auto w = ols(x, y, lambda);

    auto g = gram(x);
    for (int i = 0; i < 3; ++i) g[static_cast<size_t>(i)][static_cast<size_t>(i)] += lambda;
    std::vector<double> rhs(3, 0.0);
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 3; ++c) rhs[static_cast<size_t>(c)] += x.at(r, c) * y[static_cast<size_t>(r)];
    auto w_oracle = oracle::gauss_solve(g, rhs);
    for (int c = 0; c < 3; ++c)
        CHECK(w[static_cast<size_t>(c)] == doctest::Approx(w_oracle[static_cast<size_t>(c)]).epsilon(1e-8));

    // Ridge objective at w beats 100 random perturbations.
    auto objective = [&](const std::vector<double>& wv) {
        double s = 0;
        for (int r = 0; r < 8; ++r) {
            double xw = 0;
            for (int c = 0; c < 3; ++c) xw += x.at(r, c) * wv[static_cast<size_t>(c)];
            s += (xw - y[static_cast<size_t>(r)]) * (xw - y[static_cast<size_t>(r)]);
        }
        return s + lambda * dot(wv, wv);
    };
    double at_w = objective(w);
    for (int t = 0; t < 100; ++t) {
        std::vector<double> wp = w;
        for (auto& e : wp) e += 1e-3 * rng.normal();
        CHECK(objective(wp) >= at_w - 1e-12);
    }
}

TEST_CASE("cls with identical cover and stego matrices is deflated ridge ols") {
    Rng rng(605);
    FeatureMatrix x = random_matrix(rng, 15, 4);
    std::vector<double> y;
    for (int i = 0; i < 15; ++i) y.push_back(rng.normal());
    const double lambda = 0.5;
    ProjectionBasis b = cls(x, y, x, lambda, 2);
    auto w1 = ols(x, y, lambda);
    for (int c = 0; c < 4; ++c)
        CHECK(b.at(c, 0) == doctest::Approx(w1[static_cast<size_t>(c)]).epsilon(1e-9));
}

TEST_CASE("cls favors the payload axis over the cover-variance axis") {
    // Cover variance lives on axis 0; the payload signal on axis 1.
    Rng rng(606);
    std::vector<std::vector<double>> stego_rows, cover_rows;
    std::vector<double> ys;
    for (int i = 0; i < 60; ++i) {
        double content = 3.0 * rng.normal();
        double rate = rng.uniform(0.0, 0.5);
        stego_rows.push_back({content, rate + 0.05 * rng.normal(), 0.1 * rng.normal()});
        cover_rows.push_back({3.0 * rng.normal(), 0.05 * rng.normal(), 0.1 * rng.normal()});
        ys.push_back(rate);
    }
    ProjectionBasis b = cls(matrix_from(stego_rows), ys, matrix_from(cover_rows), 1e-3, 1);
    CHECK(std::fabs(b.at(1, 0)) > std::fabs(b.at(0, 0)));
}

TEST_CASE("cls directions are orthogonal and deflation is idempotent") {
    Rng rng(607);
    FeatureMatrix xs = random_matrix(rng, 25, 5);
    FeatureMatrix xc = random_matrix(rng, 25, 5);
    std::vector<double> ys;
    for (int i = 0; i < 25; ++i) ys.push_back(rng.normal());
    ProjectionBasis b = cls(xs, ys, xc, 0.3, 3);
    REQUIRE(b.k == 3);
    for (int a = 0; a < b.k; ++a)
        for (int c = a + 1; c < b.k; ++c) {
            double cross = dot(b.direction(a), b.direction(c));
            double na = std::sqrt(dot(b.direction(a), b.direction(a)));
            double nc = std::sqrt(dot(b.direction(c), b.direction(c)));
            CHECK(std::fabs(cross) / (na * nc) < 1e-8);
        }

    // Deflating twice by the same unit direction changes nothing.
    auto w0 = b.direction(0);
    double n0 = std::sqrt(dot(w0, w0));
    for (auto& e : w0) e /= n0;
    auto deflate = [&](FeatureMatrix m) {
        for (int r = 0; r < m.rows; ++r) {
            double proj = 0;
            for (int c = 0; c < m.cols; ++c) proj += m.at(r, c) * w0[static_cast<size_t>(c)];
            for (int c = 0; c < m.cols; ++c) m.at(r, c) -= proj * w0[static_cast<size_t>(c)];
        }
        return m;
    };
    FeatureMatrix once = deflate(xs);
    FeatureMatrix twice = deflate(once);
    for (size_t i = 0; i < once.data.size(); ++i)
        CHECK(std::fabs(once.data[i] - twice.data[i]) < 1e-10);

    CHECK_THROWS_AS(cls(xs, ys, xc, 0.0, 2), std::invalid_argument);
}

TEST_CASE("apply_projection column extraction and identity") {
    FeatureMatrix f = matrix_from({{1.0, 2.0, 3.0}, {4.0, 5.0, 6.0}});
    ProjectionBasis identity;
    identity.method = ProjectionMethod::Pct;
    identity.input_dim = 3;
    identity.k = 3;
    identity.w = {1, 0, 0, 0, 1, 0, 0, 0, 1};
    FeatureMatrix same = apply_projection(f, identity);
    CHECK(same.data == f.data);

    ProjectionBasis e2;
    e2.method = ProjectionMethod::Pct;
    e2.input_dim = 3;
    e2.k = 1;
    e2.w = {0, 1, 0};
    FeatureMatrix col = apply_projection(f, e2);
    CHECK(col.cols == 1);
    CHECK(col.at(0, 0) == 2.0);
    CHECK(col.at(1, 0) == 5.0);

    ProjectionBasis wrong = e2;
    wrong.input_dim = 4;
    wrong.w = {0, 1, 0, 0};
    CHECK_THROWS_AS(apply_projection(f, wrong), std::invalid_argument);
}

TEST_SUITE_END();

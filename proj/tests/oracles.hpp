#pragma once
// Independent brute-force oracles for the test suites. These are written
// definitionally (explicit intermediate arrays, naive rescans) and must stay
// decoupled from the library implementations they check.

#include "stegid/cluster.hpp"
#include "stegid/features.hpp"
#include "stegid/image.hpp"
#include "stegid/setdist.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <set>
#include <vector>

namespace oracle {

// ---------------------------------------------------------------------------
// Markov transition matrices: build the four difference arrays explicitly,
// then count transitions per direction.
// ---------------------------------------------------------------------------

struct OracleMarkov {
    std::array<double, 81> h, v, d, m;
};

inline int omk_clip(int x) { return x < -4 ? -4 : (x > 4 ? 4 : x); }

inline OracleMarkov markov_reference(const stegid::CoefArray& c) {
    const int W = 8 * c.blocks_x, H = 8 * c.blocks_y;
    std::vector<std::vector<int>> A(static_cast<size_t>(H), std::vector<int>(static_cast<size_t>(W)));
    for (int by = 0; by < c.blocks_y; ++by)
        for (int bx = 0; bx < c.blocks_x; ++bx)
            for (int r = 0; r < 8; ++r)
                for (int cc = 0; cc < 8; ++cc)
                    A[static_cast<size_t>(8 * by + r)][static_cast<size_t>(8 * bx + cc)] =
                        std::abs(c.coef(bx, by, r, cc));

    // Difference arrays as explicit matrices, indexed [y][x].
    auto make = [&](int dx1, int dy1, int dx2, int dy2) {
        // F(x,y) = A(x+dx1, y+dy1) - A(x+dx2, y+dy2)
        int w = W - std::max(dx1, dx2);
        int h = H - std::max(dy1, dy2);
        std::vector<std::vector<int>> F(static_cast<size_t>(h), std::vector<int>(static_cast<size_t>(w)));
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x)
                F[static_cast<size_t>(y)][static_cast<size_t>(x)] =
                    A[static_cast<size_t>(y + dy1)][static_cast<size_t>(x + dx1)] -
                    A[static_cast<size_t>(y + dy2)][static_cast<size_t>(x + dx2)];
        return F;
    };
    auto tally = [&](const std::vector<std::vector<int>>& F, int sx, int sy) {
        std::array<double, 81> M{};
        std::array<double, 9> row{};
        int h = static_cast<int>(F.size()), w = static_cast<int>(F.front().size());
        for (int y = 0; y + sy < h; ++y)
            for (int x = 0; x + sx < w; ++x) {
                int i = omk_clip(F[static_cast<size_t>(y)][static_cast<size_t>(x)]);
                int j = omk_clip(F[static_cast<size_t>(y + sy)][static_cast<size_t>(x + sx)]);
                M[static_cast<size_t>(9 * (i + 4) + (j + 4))] += 1.0;
                row[static_cast<size_t>(i + 4)] += 1.0;
            }
        for (int i = 0; i < 9; ++i)
            for (int j = 0; j < 9; ++j) {
                double denom = row[static_cast<size_t>(i)];
                auto& cell = M[static_cast<size_t>(9 * i + j)];
                cell = denom > 0.0 ? cell / denom : 0.0;
            }
        return M;
    };

    OracleMarkov out;
    out.h = tally(make(0, 0, 1, 0), 1, 0);
    out.v = tally(make(0, 0, 0, 1), 0, 1);
    out.d = tally(make(0, 0, 1, 1), 1, 1);
    // F_m(x,y) = A(x+1,y) - A(x,y+1); transition steps +1 in x and +1 in y
    // respectively for the first and second element of the pair:
    // pair(F_m(x+1,y), F_m(x,y+1)).
    {
        auto F = make(1, 0, 0, 1);
        std::array<double, 81> M{};
        std::array<double, 9> row{};
        int h = static_cast<int>(F.size()), w = static_cast<int>(F.front().size());
        for (int y = 0; y + 1 < h; ++y)
            for (int x = 0; x + 1 < w; ++x) {
                int i = omk_clip(F[static_cast<size_t>(y)][static_cast<size_t>(x + 1)]);
                int j = omk_clip(F[static_cast<size_t>(y + 1)][static_cast<size_t>(x)]);
                M[static_cast<size_t>(9 * (i + 4) + (j + 4))] += 1.0;
                row[static_cast<size_t>(i + 4)] += 1.0;
            }
        for (int i = 0; i < 9; ++i)
            for (int j = 0; j < 9; ++j) {
                double denom = row[static_cast<size_t>(i)];
                auto& cell = M[static_cast<size_t>(9 * i + j)];
                cell = denom > 0.0 ? cell / denom : 0.0;
            }
        out.m = M;
    }
    return out;
}

// ---------------------------------------------------------------------------
// LI-250 joint densities, literal nested loops with explicit 5x5x5 bins.
// ---------------------------------------------------------------------------

inline std::vector<double> li250_reference(const stegid::CoefArray& c) {
    const int M = c.blocks_y, N = c.blocks_x;
    auto a = [&](int m, int n, int u, int v) {
        return std::abs(static_cast<int>(c.coef(n, m, u, v)));
    };
    double iah[5][5][5] = {}, iav[5][5][5] = {}, iad[5][5][5] = {};
    double irh[5][5][5] = {}, irv[5][5][5] = {}, ird[5][5][5] = {};
    auto add = [](double (&bins)[5][5][5], int x, int y, int z) {
        if (x >= 0 && x <= 4 && y >= 0 && y <= 4 && z >= 0 && z <= 4) bins[x][y][z] += 1.0;
    };

    for (int m = 0; m < M; ++m)
        for (int n = 0; n < N; ++n)
            for (int u = 0; u < 8; ++u)
                for (int v = 0; v < 8; ++v) {
                    if (v + 2 < 8) add(iah, a(m, n, u, v), a(m, n, u, v + 1), a(m, n, u, v + 2));
                    if (u + 2 < 8) add(iav, a(m, n, u, v), a(m, n, u + 1, v), a(m, n, u + 2, v));
                    if (u + 2 < 8 && v + 2 < 8)
                        add(iad, a(m, n, u, v), a(m, n, u + 1, v + 1), a(m, n, u + 2, v + 2));
                    if (n + 2 < N) add(irh, a(m, n, u, v), a(m, n + 1, u, v), a(m, n + 2, u, v));
                    if (m + 2 < M) add(irv, a(m, n, u, v), a(m + 1, n, u, v), a(m + 2, n, u, v));
                    if (m + 2 < M && n + 2 < N)
                        add(ird, a(m, n, u, v), a(m + 1, n + 1, u, v), a(m + 2, n + 2, u, v));
                }

    std::vector<double> out;
    out.reserve(250);
    double mn = static_cast<double>(M) * N;
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y)
            for (int z = 0; z < 5; ++z)
                out.push_back((iah[x][y][z] / (48.0 * mn) + iav[x][y][z] / (48.0 * mn) +
                               iad[x][y][z] / (36.0 * mn)) / 3.0);
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y)
            for (int z = 0; z < 5; ++z)
                out.push_back((irh[x][y][z] / (64.0 * M * (N - 2)) +
                               irv[x][y][z] / (64.0 * (M - 2) * N) +
                               ird[x][y][z] / (64.0 * (M - 2) * (N - 2))) / 3.0);
    return out;
}

// ---------------------------------------------------------------------------
// Unbiased MMD, direct double loop over ordered pairs (equal sizes only).
// Sets are sorted first, mirroring the library's canonical-order contract.
// ---------------------------------------------------------------------------

inline double mmd_reference(stegid::VecList x, stegid::VecList y, bool gaussian,
                            double gamma) {
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    auto k = [&](const std::vector<double>& a, const std::vector<double>& b) {
        if (!gaussian) {
            double s = 0;
            for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
            return s;
        }
        double d2 = 0;
        for (size_t i = 0; i < a.size(); ++i) d2 += (a[i] - b[i]) * (a[i] - b[i]);
        return std::exp(-gamma * d2);
    };
    const size_t m = x.size();
    double s = 0.0;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            s += k(x[i], x[j]) + k(y[i], y[j]) - k(x[i], y[j]) - k(x[j], y[i]);
        }
    s /= static_cast<double>(m * m - m);
    return s >= 0 ? std::sqrt(s) : -std::sqrt(-s);
}

// ---------------------------------------------------------------------------
// LOF, literal definitional pass over a distance matrix. Negative inputs are
// treated as zero (coincident), matching the library's documented contract.
// ---------------------------------------------------------------------------

inline std::vector<double> lof_reference(const stegid::DistanceMatrix& dm, int k) {
    const int n = dm.n;
    auto dist = [&](int a, int b) { return std::max(0.0, dm.at(a, b)); };

    auto kdist = [&](int p) {
        std::vector<double> ds;
        for (int o = 0; o < n; ++o)
            if (o != p) ds.push_back(dist(p, o));
        std::sort(ds.begin(), ds.end());
        return ds[static_cast<size_t>(k) - 1];
    };
    auto neighborhood = [&](int p) {
        std::vector<int> nb;
        double dk = kdist(p);
        for (int o = 0; o < n; ++o)
            if (o != p && dist(p, o) <= dk) nb.push_back(o);
        return nb;
    };
    auto lrd = [&](int p) {
        auto nb = neighborhood(p);
        double sum = 0.0;
        for (int o : nb) sum += std::max(kdist(o), dist(p, o));
        if (sum <= 0.0) return 1e12;
        return static_cast<double>(nb.size()) / sum;
    };
    std::vector<double> out;
    for (int p = 0; p < n; ++p) {
        auto nb = neighborhood(p);
        double s = 0.0;
        for (int o : nb) s += lrd(o) / lrd(p);
        out.push_back(s / static_cast<double>(nb.size()));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Agglomerative clustering, naive rescan with explicit member sets.
// ---------------------------------------------------------------------------

struct OracleMerge {
    std::set<int> a, b;
    double height;
};

inline double cluster_dist_reference(const stegid::DistanceMatrix& dm, const std::set<int>& x,
                                     const std::set<int>& y, stegid::Linkage link) {
    using stegid::Linkage;
    if (link == Linkage::Single) {
        double best = std::numeric_limits<double>::infinity();
        for (int a : x)
            for (int b : y) best = std::min(best, dm.at(a, b));
        return best;
    }
    if (link == Linkage::Complete) {
        double best = -std::numeric_limits<double>::infinity();
        for (int a : x)
            for (int b : y) best = std::max(best, dm.at(a, b));
        return best;
    }
    if (link == Linkage::Centroid) {
        double s = 0;
        for (int a : x)
            for (int b : y) s += dm.at(a, b);
        return s / (static_cast<double>(x.size()) * static_cast<double>(y.size()));
    }
    // Average per the printed equation: ordered pairs within the union.
    std::set<int> u;
    u.insert(x.begin(), x.end());
    u.insert(y.begin(), y.end());
    double s = 0;
    for (int a : u)
        for (int b : u)
            if (a != b) s += dm.at(a, b);
    double t = static_cast<double>(u.size());
    return s / (t * t - t);
}

inline std::vector<OracleMerge> agglomerate_reference(const stegid::DistanceMatrix& dm,
                                                      stegid::Linkage link) {
    std::vector<std::set<int>> clusters;
    for (int i = 0; i < dm.n; ++i) clusters.push_back({i});
    std::vector<OracleMerge> merges;
    while (clusters.size() > 1) {
        double best = std::numeric_limits<double>::infinity();
        std::pair<int, int> best_key{-1, -1};
        size_t bi = 0, bj = 1;
        for (size_t i = 0; i < clusters.size(); ++i)
            for (size_t j = 0; j < clusters.size(); ++j) {
                if (i == j) continue;
                int mi = *clusters[i].begin(), mj = *clusters[j].begin();
                if (mi > mj) continue;  // treat unordered pairs once, low id first
                double d = cluster_dist_reference(dm, clusters[i], clusters[j], link);
                std::pair<int, int> key{mi, mj};
                if (d < best || (d == best && key < best_key)) {
                    best = d;
                    best_key = key;
                    bi = i;
                    bj = j;
                }
            }
        OracleMerge m;
        m.a = clusters[bi];
        m.b = clusters[bj];
        m.height = best;
        merges.push_back(m);
        std::set<int> merged;
        merged.insert(m.a.begin(), m.a.end());
        merged.insert(m.b.begin(), m.b.end());
        std::vector<std::set<int>> next;
        for (size_t t = 0; t < clusters.size(); ++t)
            if (t != bi && t != bj) next.push_back(clusters[t]);
        next.push_back(merged);
        clusters = next;
    }
    return merges;
}

// ---------------------------------------------------------------------------
// Mean cross-pair Euclidean distance.
// ---------------------------------------------------------------------------

inline double set_distance_avg_reference(const stegid::VecList& a, const stegid::VecList& b) {
    double s = 0;
    for (const auto& x : a)
        for (const auto& y : b) {
            double d2 = 0;
            for (size_t i = 0; i < x.size(); ++i) d2 += (x[i] - y[i]) * (x[i] - y[i]);
            s += std::sqrt(d2);
        }
    return s / (static_cast<double>(a.size()) * static_cast<double>(b.size()));
}

// ---------------------------------------------------------------------------
// Cyclic-Jacobi symmetric eigensolver (for the PCT oracle) and Gaussian
// elimination with partial pivoting (for the OLS oracle).
// ---------------------------------------------------------------------------

// Returns eigenvalues descending with matching eigenvectors as columns.
inline void jacobi_eigen(std::vector<std::vector<double>> a, std::vector<double>& eigenvalues,
                         std::vector<std::vector<double>>& eigenvectors) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<double>> v(static_cast<size_t>(n),
                                       std::vector<double>(static_cast<size_t>(n), 0.0));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1.0;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += a[static_cast<size_t>(p)][static_cast<size_t>(q)] *
                                                   a[static_cast<size_t>(p)][static_cast<size_t>(q)];
        if (off < 1e-24) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = a[static_cast<size_t>(p)][static_cast<size_t>(q)];
                if (std::fabs(apq) < 1e-300) continue;
                double app = a[static_cast<size_t>(p)][static_cast<size_t>(p)];
                double aqq = a[static_cast<size_t>(q)][static_cast<size_t>(q)];
                double theta = 0.5 * (aqq - app) / apq;
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int i = 0; i < n; ++i) {
                    double aip = a[static_cast<size_t>(i)][static_cast<size_t>(p)];
                    double aiq = a[static_cast<size_t>(i)][static_cast<size_t>(q)];
                    a[static_cast<size_t>(i)][static_cast<size_t>(p)] = c * aip - s * aiq;
                    a[static_cast<size_t>(i)][static_cast<size_t>(q)] = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    double api = a[static_cast<size_t>(p)][static_cast<size_t>(i)];
                    double aqi = a[static_cast<size_t>(q)][static_cast<size_t>(i)];
                    a[static_cast<size_t>(p)][static_cast<size_t>(i)] = c * api - s * aqi;
                    a[static_cast<size_t>(q)][static_cast<size_t>(i)] = s * api + c * aqi;
                }
                for (int i = 0; i < n; ++i) {
                    double vip = v[static_cast<size_t>(i)][static_cast<size_t>(p)];
                    double viq = v[static_cast<size_t>(i)][static_cast<size_t>(q)];
                    v[static_cast<size_t>(i)][static_cast<size_t>(p)] = c * vip - s * viq;
                    v[static_cast<size_t>(i)][static_cast<size_t>(q)] = s * vip + c * viq;
                }
            }
    }
    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return a[static_cast<size_t>(x)][static_cast<size_t>(x)] >
               a[static_cast<size_t>(y)][static_cast<size_t>(y)];
    });
    eigenvalues.assign(static_cast<size_t>(n), 0.0);
    eigenvectors.assign(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n), 0.0));
    for (int c = 0; c < n; ++c) {
        eigenvalues[static_cast<size_t>(c)] =
            a[static_cast<size_t>(order[static_cast<size_t>(c)])]
             [static_cast<size_t>(order[static_cast<size_t>(c)])];
        for (int r = 0; r < n; ++r)
            eigenvectors[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                v[static_cast<size_t>(r)][static_cast<size_t>(order[static_cast<size_t>(c)])];
    }
}

inline std::vector<double> gauss_solve(std::vector<std::vector<double>> a, std::vector<double> b) {
    const int n = static_cast<int>(a.size());
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(a[static_cast<size_t>(r)][static_cast<size_t>(col)]) >
                std::fabs(a[static_cast<size_t>(pivot)][static_cast<size_t>(col)]))
                pivot = r;
        std::swap(a[static_cast<size_t>(col)], a[static_cast<size_t>(pivot)]);
        std::swap(b[static_cast<size_t>(col)], b[static_cast<size_t>(pivot)]);
        double diag = a[static_cast<size_t>(col)][static_cast<size_t>(col)];
        for (int r = col + 1; r < n; ++r) {
            double f = a[static_cast<size_t>(r)][static_cast<size_t>(col)] / diag;
            for (int cc = col; cc < n; ++cc)
                a[static_cast<size_t>(r)][static_cast<size_t>(cc)] -=
                    f * a[static_cast<size_t>(col)][static_cast<size_t>(cc)];
            b[static_cast<size_t>(r)] -= f * b[static_cast<size_t>(col)];
        }
    }
    std::vector<double> x(static_cast<size_t>(n), 0.0);
    for (int r = n - 1; r >= 0; --r) {
        double s = b[static_cast<size_t>(r)];
        for (int cc = r + 1; cc < n; ++cc)
            s -= a[static_cast<size_t>(r)][static_cast<size_t>(cc)] * x[static_cast<size_t>(cc)];
        x[static_cast<size_t>(r)] = s / a[static_cast<size_t>(r)][static_cast<size_t>(r)];
    }
    return x;
}

// Random small coefficient arrays for oracle comparisons.
inline stegid::CoefArray random_coef_array(stegid::Rng& rng, int blocks_x, int blocks_y,
                                           int magnitude = 6) {
    stegid::CoefArray c;
    c.blocks_x = blocks_x;
    c.blocks_y = blocks_y;
    c.table = stegid::quality_to_table(80);
    c.coefs.resize(static_cast<size_t>(c.n_blocks()) * 64);
    for (auto& v : c.coefs)
        v = static_cast<int16_t>(rng.uniform_int(-magnitude, magnitude));
    return c;
}

}  // namespace oracle

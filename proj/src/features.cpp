#include "stegid/features.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace stegid {

const char* schema_name(Schema s) { return s == Schema::Pev274 ? "pev274" : "li250"; }

Schema schema_from_name(const std::string& name) {
    if (name == "pev274") return Schema::Pev274;
    if (name == "li250") return Schema::Li250;
    throw std::invalid_argument("unknown feature schema: " + name);
}

namespace {

inline int clip4(int v) { return std::clamp(v, -4, 4); }

// |coefficients| arranged in image layout: each 8x8 block of pixels replaced
// by its block of DCT coefficients.
std::vector<int> abs_image_layout(const CoefArray& c) {
    const int w = c.width(), h = c.height();
    std::vector<int> a(static_cast<size_t>(w) * h);
    for (int by = 0; by < c.blocks_y; ++by)
        for (int bx = 0; bx < c.blocks_x; ++bx) {
            const int16_t* blk = c.block(bx, by);
            for (int r = 0; r < 8; ++r)
                for (int cc = 0; cc < 8; ++cc)
                    a[static_cast<size_t>(8 * by + r) * w + (8 * bx + cc)] = std::abs(blk[8 * r + cc]);
        }
    return a;
}

void normalize_rows(MarkovMatrix& m, const std::array<double, 9>& row_totals) {
    for (int i = 0; i < 9; ++i) {
        if (row_totals[static_cast<size_t>(i)] > 0.0)
            for (int j = 0; j < 9; ++j) m[static_cast<size_t>(9 * i + j)] /= row_totals[static_cast<size_t>(i)];
        else
            for (int j = 0; j < 9; ++j) m[static_cast<size_t>(9 * i + j)] = 0.0;
    }
}

}  // namespace

MarkovTpms markov_tpm(const CoefArray& c) {
    const int w = c.width(), h = c.height();
    const std::vector<int> a = abs_image_layout(c);
    auto at = [&](int x, int y) { return a[static_cast<size_t>(y) * w + x]; };

    MarkovTpms out{};
    std::array<double, 9> rh{}, rv{}, rd{}, rm{};

    // Horizontal: F_h(x,y) = A(x,y) - A(x+1,y); transitions step +1 in x.
    for (int y = 0; y < h; ++y)
        for (int x = 0; x + 2 < w; ++x) {
            int i = clip4(at(x, y) - at(x + 1, y));
            int j = clip4(at(x + 1, y) - at(x + 2, y));
            out.h[static_cast<size_t>(9 * (i + 4) + (j + 4))] += 1.0;
            rh[static_cast<size_t>(i + 4)] += 1.0;
        }
    // Vertical.
    for (int y = 0; y + 2 < h; ++y)
        for (int x = 0; x < w; ++x) {
            int i = clip4(at(x, y) - at(x, y + 1));
            int j = clip4(at(x, y + 1) - at(x, y + 2));
            out.v[static_cast<size_t>(9 * (i + 4) + (j + 4))] += 1.0;
            rv[static_cast<size_t>(i + 4)] += 1.0;
        }
    // Diagonal.
    for (int y = 0; y + 2 < h; ++y)
        for (int x = 0; x + 2 < w; ++x) {
            int i = clip4(at(x, y) - at(x + 1, y + 1));
            int j = clip4(at(x + 1, y + 1) - at(x + 2, y + 2));
            out.d[static_cast<size_t>(9 * (i + 4) + (j + 4))] += 1.0;
            rd[static_cast<size_t>(i + 4)] += 1.0;
        }
    // Minor diagonal: F_m(x,y) = A(x+1,y) - A(x,y+1); pair (F_m(x+1,y), F_m(x,y+1)).
    for (int y = 0; y + 2 < h; ++y)
        for (int x = 0; x + 2 < w; ++x) {
            int i = clip4(at(x + 2, y) - at(x + 1, y + 1));
            int j = clip4(at(x + 1, y + 1) - at(x, y + 2));
            out.m[static_cast<size_t>(9 * (i + 4) + (j + 4))] += 1.0;
            rm[static_cast<size_t>(i + 4)] += 1.0;
        }

    normalize_rows(out.h, rh);
    normalize_rows(out.v, rv);
    normalize_rows(out.d, rd);
    normalize_rows(out.m, rm);
    return out;
}

namespace {

// Per-image statistics feeding the calibrated DCT part of PEV-274.
struct PevStats {
    double hist_global[11];      // l in [-5,5], exact bins
    double hist_mode[5][11];     // modes {(1,2),(2,1),(3,1),(2,2),(1,3)}, 1-indexed
    double dual[11][9];          // d in [-5,5] saturated x 9 lowest AC modes
    double cooc[5][5];           // C_{s,t}, (s,t) in [-2,2]^2
    double variation;
    double b1, b2;
};

constexpr int kModes5[5][2] = {{0, 1}, {1, 0}, {2, 0}, {1, 1}, {0, 2}};
constexpr int kModes9[9][2] = {{1, 0}, {2, 0}, {3, 0}, {0, 1}, {1, 1},
                               {2, 1}, {0, 2}, {1, 2}, {0, 3}};

PevStats pev_stats(const CoefArray& c, const PixelImage& decoded) {
    PevStats s{};
    const int nb = c.n_blocks();
    const double coef_count = 64.0 * nb;

    // Histograms and dual histograms in one pass over blocks.
    for (int by = 0; by < c.blocks_y; ++by)
        for (int bx = 0; bx < c.blocks_x; ++bx) {
            const int16_t* blk = c.block(bx, by);
            for (int i = 0; i < 64; ++i) {
                int v = blk[i];
                if (v >= -5 && v <= 5) s.hist_global[v + 5] += 1.0;
            }
            for (int m = 0; m < 5; ++m) {
                int v = blk[8 * kModes5[m][0] + kModes5[m][1]];
                if (v >= -5 && v <= 5) s.hist_mode[m][v + 5] += 1.0;
            }
            for (int m = 0; m < 9; ++m) {
                int v = std::clamp(static_cast<int>(blk[8 * kModes9[m][0] + kModes9[m][1]]), -5, 5);
                s.dual[v + 5][m] += 1.0;
            }
        }
    for (double& x : s.hist_global) x /= coef_count;
    for (auto& row : s.hist_mode)
        for (double& x : row) x /= coef_count;
    for (auto& row : s.dual)
        for (double& x : row) x /= coef_count;

    // Variation and co-occurrence over row-scan and column-scan block
    // sequences, per mode, with the paper's 1/(|I_r|+|I_c|) normalization.
    double var_sum = 0.0;
    for (int r = 0; r < 8; ++r)
        for (int cc = 0; cc < 8; ++cc) {
            // Row scan: raster order is consecutive in memory.
            for (int k = 0; k + 1 < nb; ++k) {
                int v0 = c.coefs[static_cast<size_t>(k) * 64 + 8 * r + cc];
                int v1 = c.coefs[static_cast<size_t>(k + 1) * 64 + 8 * r + cc];
                var_sum += std::abs(v0 - v1);
                if (v0 >= -2 && v0 <= 2 && v1 >= -2 && v1 <= 2) s.cooc[v0 + 2][v1 + 2] += 1.0;
            }
            // Column scan.
            int prev = 0;
            bool have_prev = false;
            for (int bx = 0; bx < c.blocks_x; ++bx)
                for (int by = 0; by < c.blocks_y; ++by) {
                    int v = c.coef(bx, by, r, cc);
                    if (have_prev) {
                        var_sum += std::abs(prev - v);
                        if (prev >= -2 && prev <= 2 && v >= -2 && v <= 2)
                            s.cooc[prev + 2][v + 2] += 1.0;
                    }
                    prev = v;
                    have_prev = true;
                }
        }
    s.variation = var_sum / (2.0 * nb);
    for (auto& row : s.cooc)
        for (double& x : row) x /= 2.0 * nb;

    // Blockiness B_alpha over the decompressed image.
    const int M = decoded.height, N = decoded.width;
    const int row_bounds = (M - 1) / 8, col_bounds = (N - 1) / 8;
    double b1 = 0.0, b2 = 0.0;
    for (int i = 1; i <= row_bounds; ++i)
        for (int j = 0; j < N; ++j) {
            double d = std::abs(decoded.at(j, 8 * i - 1) - decoded.at(j, 8 * i));
            b1 += d;
            b2 += d * d;
        }
    for (int j = 1; j <= col_bounds; ++j)
        for (int i = 0; i < M; ++i) {
            double d = std::abs(decoded.at(8 * j - 1, i) - decoded.at(8 * j, i));
            b1 += d;
            b2 += d * d;
        }
    double denom = static_cast<double>(N) * row_bounds + static_cast<double>(M) * col_bounds;
    s.b1 = b1 / denom;
    s.b2 = b2 / denom;
    return s;
}

std::array<MarkovMatrix, 4> markov_as_array(const MarkovTpms& t) { return {t.h, t.v, t.d, t.m}; }

}  // namespace

std::array<double, 81> pev_markov_avg(const CoefArray& c) {
    CoefArray j2 = calibrate(c);
    auto m1 = markov_as_array(markov_tpm(c));
    auto m2 = markov_as_array(markov_tpm(j2));
    std::array<double, 81> avg{};
    for (int dir = 0; dir < 4; ++dir)
        for (int i = 0; i < 81; ++i)
            avg[static_cast<size_t>(i)] +=
                (m1[static_cast<size_t>(dir)][static_cast<size_t>(i)] -
                 m2[static_cast<size_t>(dir)][static_cast<size_t>(i)]) / 4.0;
    return avg;
}

FeatureVector pev274(const CoefArray& c) {
    if (c.blocks_x < 3 || c.blocks_y < 3)
        throw std::invalid_argument("pev274: image too small for calibration (need >= 24x24 px)");

    PixelImage dec1 = decompress(c);
    PixelImage cropped = crop(dec1, 4, 4, 8 * (c.blocks_x - 1), 8 * (c.blocks_y - 1));
    CoefArray j2 = compress(cropped, c.table);
    PixelImage dec2 = decompress(j2);

    PevStats s1 = pev_stats(c, dec1);
    PevStats s2 = pev_stats(j2, dec2);

    FeatureVector out;
    out.schema = Schema::Pev274;
    out.values.reserve(kPev274Dim);

    for (int l = 0; l < 11; ++l) out.values.push_back(s1.hist_global[l] - s2.hist_global[l]);
    for (int m = 0; m < 5; ++m)
        for (int l = 0; l < 11; ++l) out.values.push_back(s1.hist_mode[m][l] - s2.hist_mode[m][l]);
    for (int d = 0; d < 11; ++d)
        for (int m = 0; m < 9; ++m) out.values.push_back(s1.dual[d][m] - s2.dual[d][m]);
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) out.values.push_back(s1.cooc[a][b] - s2.cooc[a][b]);
    out.values.push_back(s1.variation - s2.variation);
    out.values.push_back(s1.b1 - s2.b1);
    out.values.push_back(s1.b2 - s2.b2);

    auto m1 = markov_as_array(markov_tpm(c));
    auto m2 = markov_as_array(markov_tpm(j2));
    for (int i = 0; i < 81; ++i) {
        double v = 0.0;
        for (int dir = 0; dir < 4; ++dir)
            v += (m1[static_cast<size_t>(dir)][static_cast<size_t>(i)] -
                  m2[static_cast<size_t>(dir)][static_cast<size_t>(i)]) / 4.0;
        out.values.push_back(v);
    }
    return out;
}

FeatureVector li250(const CoefArray& c) {
    if (c.blocks_x < 3 || c.blocks_y < 3)
        throw std::invalid_argument("li250: block grid must be at least 3x3");

    const int M = c.blocks_y, N = c.blocks_x;  // block rows, block columns
    auto absc = [&](int m, int n, int r, int cc) {
        return std::abs(static_cast<int>(c.coef(n, m, r, cc)));
    };
    auto bump = [](std::array<double, 125>& bins, int x, int y, int z) {
        if (x <= 4 && y <= 4 && z <= 4) bins[static_cast<size_t>(25 * x + 5 * y + z)] += 1.0;
    };

    std::array<double, 125> iah{}, iav{}, iad{}, irh{}, irv{}, ird{};

    for (int m = 0; m < M; ++m)
        for (int n = 0; n < N; ++n) {
            for (int r = 0; r < 8; ++r)
                for (int cc = 0; cc + 2 < 8; ++cc)
                    bump(iah, absc(m, n, r, cc), absc(m, n, r, cc + 1), absc(m, n, r, cc + 2));
            for (int r = 0; r + 2 < 8; ++r)
                for (int cc = 0; cc < 8; ++cc)
                    bump(iav, absc(m, n, r, cc), absc(m, n, r + 1, cc), absc(m, n, r + 2, cc));
            for (int r = 0; r + 2 < 8; ++r)
                for (int cc = 0; cc + 2 < 8; ++cc)
                    bump(iad, absc(m, n, r, cc), absc(m, n, r + 1, cc + 1), absc(m, n, r + 2, cc + 2));
        }
    for (int m = 0; m < M; ++m)
        for (int n = 0; n + 2 < N; ++n)
            for (int r = 0; r < 8; ++r)
                for (int cc = 0; cc < 8; ++cc)
                    bump(irh, absc(m, n, r, cc), absc(m, n + 1, r, cc), absc(m, n + 2, r, cc));
    for (int m = 0; m + 2 < M; ++m)
        for (int n = 0; n < N; ++n)
            for (int r = 0; r < 8; ++r)
                for (int cc = 0; cc < 8; ++cc)
                    bump(irv, absc(m, n, r, cc), absc(m + 1, n, r, cc), absc(m + 2, n, r, cc));
    for (int m = 0; m + 2 < M; ++m)
        for (int n = 0; n + 2 < N; ++n)
            for (int r = 0; r < 8; ++r)
                for (int cc = 0; cc < 8; ++cc)
                    bump(ird, absc(m, n, r, cc), absc(m + 1, n + 1, r, cc), absc(m + 2, n + 2, r, cc));

    const double mn = static_cast<double>(M) * N;
    FeatureVector out;
    out.schema = Schema::Li250;
    out.values.reserve(kLi250Dim);
    for (int i = 0; i < 125; ++i) {
        double h = iah[static_cast<size_t>(i)] / (48.0 * mn);
        double v = iav[static_cast<size_t>(i)] / (48.0 * mn);
        double d = iad[static_cast<size_t>(i)] / (36.0 * mn);
        out.values.push_back((h + v + d) / 3.0);
    }
    const double dh = 64.0 * M * (N - 2), dv = 64.0 * (M - 2) * N, dd = 64.0 * (M - 2) * (N - 2);
    for (int i = 0; i < 125; ++i) {
        double h = irh[static_cast<size_t>(i)] / dh;
        double v = irv[static_cast<size_t>(i)] / dv;
        double d = ird[static_cast<size_t>(i)] / dd;
        out.values.push_back((h + v + d) / 3.0);
    }
    return out;
}

FeatureVector extract(Schema schema, const CoefArray& c) {
    return schema == Schema::Pev274 ? pev274(c) : li250(c);
}

}  // namespace stegid

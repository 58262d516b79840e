#include "stegid/image.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stegid {
namespace {

// cos_tab[k][n] = cos((2n+1) k pi / 16), scale[k] = C(k) = 1/sqrt(2) for k=0 else 1.
struct DctTables {
    double cos_tab[8][8];
    double scale[8];
    DctTables() {
        for (int k = 0; k < 8; ++k) {
            scale[k] = (k == 0) ? 1.0 / std::numbers::sqrt2 : 1.0;
            for (int n = 0; n < 8; ++n)
                cos_tab[k][n] = std::cos((2 * n + 1) * k * std::numbers::pi / 16.0);
        }
    }
};

const DctTables& tables() {
    static const DctTables t;
    return t;
}

constexpr std::array<uint16_t, 64> kBaseLuminanceTable = {
    16, 11, 10, 16, 24,  40,  51,  61,   //
    12, 12, 14, 19, 26,  58,  60,  55,   //
    14, 13, 16, 24, 40,  57,  69,  56,   //
    14, 17, 22, 29, 51,  87,  80,  62,   //
    18, 22, 37, 56, 68,  109, 103, 77,   //
    24, 35, 55, 64, 81,  104, 113, 92,   //
    49, 64, 78, 87, 103, 121, 120, 101,  //
    72, 92, 95, 98, 112, 100, 103, 99,
};

void check_compressible(const PixelImage& img) {
    if (img.width < 16 || img.height < 16)
        throw std::invalid_argument("compress: image must be at least 16x16");
    if (img.width % 8 != 0 || img.height % 8 != 0)
        throw std::invalid_argument("compress: dimensions must be multiples of 8");
    if (img.samples.size() != static_cast<size_t>(img.width) * img.height)
        throw std::invalid_argument("compress: sample buffer size mismatch");
}

}  // namespace

Ycbcr rgb_to_ycbcr(double r, double g, double b) {
    double y = 0.299 * r + 0.587 * g + 0.114 * b;
    return {y, 0.564 * (b - y), 0.713 * (r - y)};
}

Block block_dct(const Block& f) {
    const auto& t = tables();
    // Separable: first transform rows (horizontal frequency), then columns.
    double tmp[8][8];
    for (int r = 0; r < 8; ++r) {
        for (int uc = 0; uc < 8; ++uc) {
            double s = 0.0;
            for (int c = 0; c < 8; ++c) s += f[8 * r + c] * t.cos_tab[uc][c];
            tmp[r][uc] = s;
        }
    }
    Block out{};
    for (int ur = 0; ur < 8; ++ur) {
        for (int uc = 0; uc < 8; ++uc) {
            double s = 0.0;
            for (int r = 0; r < 8; ++r) s += tmp[r][uc] * t.cos_tab[ur][r];
            out[8 * ur + uc] = 0.25 * t.scale[ur] * t.scale[uc] * s;
        }
    }
    return out;
}

Block block_idct(const Block& coefs) {
    const auto& t = tables();
    double tmp[8][8];
    for (int ur = 0; ur < 8; ++ur) {
        for (int c = 0; c < 8; ++c) {
            double s = 0.0;
            for (int uc = 0; uc < 8; ++uc)
                s += t.scale[uc] * coefs[8 * ur + uc] * t.cos_tab[uc][c];
            tmp[ur][c] = s;
        }
    }
    Block out{};
    for (int r = 0; r < 8; ++r) {
        for (int c = 0; c < 8; ++c) {
            double s = 0.0;
            for (int ur = 0; ur < 8; ++ur) s += t.scale[ur] * tmp[ur][c] * t.cos_tab[ur][r];
            out[8 * r + c] = 0.25 * s;
        }
    }
    return out;
}

QuantTable quality_to_table(int qf) {
    if (qf < 1 || qf > 100) throw std::invalid_argument("quality_to_table: qf must be in [1,100]");
    int s = qf < 50 ? 5000 / qf : 200 - 2 * qf;
    QuantTable t;
    for (int i = 0; i < 64; ++i) {
        int v = (kBaseLuminanceTable[static_cast<size_t>(i)] * s + 50) / 100;
        t.q[static_cast<size_t>(i)] = static_cast<uint16_t>(std::clamp(v, 1, 255));
    }
    return t;
}

CoefArray compress(const PixelImage& img, const QuantTable& table) {
    check_compressible(img);
    CoefArray out;
    out.blocks_x = img.width / 8;
    out.blocks_y = img.height / 8;
    out.table = table;
    out.coefs.resize(static_cast<size_t>(out.n_blocks()) * 64);
    Block f;
    for (int by = 0; by < out.blocks_y; ++by) {
        for (int bx = 0; bx < out.blocks_x; ++bx) {
            for (int r = 0; r < 8; ++r)
                for (int c = 0; c < 8; ++c)
                    f[8 * r + c] = img.at(8 * bx + c, 8 * by + r) - 128.0;
            Block F = block_dct(f);
            int16_t* dst = out.block(bx, by);
            for (int i = 0; i < 64; ++i)
                dst[i] = static_cast<int16_t>(std::lround(F[static_cast<size_t>(i)] / table.q[static_cast<size_t>(i)]));
        }
    }
    return out;
}

CoefArray compress(const PixelImage& img, int qf) { return compress(img, quality_to_table(qf)); }

PixelImage decompress(const CoefArray& c) {
    PixelImage img;
    img.width = c.width();
    img.height = c.height();
    img.samples.resize(static_cast<size_t>(img.width) * img.height);
    Block F;
    for (int by = 0; by < c.blocks_y; ++by) {
        for (int bx = 0; bx < c.blocks_x; ++bx) {
            const int16_t* src = c.block(bx, by);
            for (int i = 0; i < 64; ++i)
                F[static_cast<size_t>(i)] = static_cast<double>(src[i]) * c.table.q[static_cast<size_t>(i)];
            Block f = block_idct(F);
            for (int r = 0; r < 8; ++r)
                for (int c2 = 0; c2 < 8; ++c2)
                    img.at(8 * bx + c2, 8 * by + r) = std::clamp(f[8 * r + c2] + 128.0, 0.0, 255.0);
        }
    }
    return img;
}

PixelImage crop(const PixelImage& img, int left, int top, int new_width, int new_height) {
    if (left < 0 || top < 0 || left + new_width > img.width || top + new_height > img.height)
        throw std::invalid_argument("crop: window out of bounds");
    PixelImage out;
    out.width = new_width;
    out.height = new_height;
    out.samples.resize(static_cast<size_t>(new_width) * new_height);
    for (int y = 0; y < new_height; ++y)
        for (int x = 0; x < new_width; ++x) out.at(x, y) = img.at(left + x, top + y);
    return out;
}

CoefArray calibrate(const CoefArray& c) {
    if (c.blocks_x < 3 || c.blocks_y < 3)
        throw std::invalid_argument("calibrate: image too small to crop (need >= 24x24 px)");
    PixelImage img = decompress(c);
    PixelImage cropped = crop(img, 4, 4, 8 * (c.blocks_x - 1), 8 * (c.blocks_y - 1));
    return compress(cropped, c.table);
}

}  // namespace stegid

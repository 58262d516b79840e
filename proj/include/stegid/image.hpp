#pragma once
// DCT-domain image model: color transform, 8x8 block DCT, quantization,
// a minimal luminance-only compress/decompress pipeline and the
// crop-recompress calibration used by steganalysis features.
//
// Conventions:
//   * pixel samples are row-major doubles in [0,255]
//   * an 8x8 block is stored row-major, index = 8*r + c
//   * coefficient (r,c) holds vertical frequency r, horizontal frequency c;
//     (0,0) is the DC term
//   * blocks of a CoefArray are stored in raster order (left-to-right,
//     top-to-bottom)

#include <array>
#include <cstdint>
#include <vector>

namespace stegid {

struct PixelImage {
    int width = 0;
    int height = 0;
    std::vector<double> samples;  // row-major luminance

    double at(int x, int y) const { return samples[static_cast<size_t>(y) * width + x]; }
    double& at(int x, int y) { return samples[static_cast<size_t>(y) * width + x]; }
};

struct QuantTable {
    std::array<uint16_t, 64> q{};  // row-major, entries in [1,255]

    uint16_t at(int r, int c) const { return q[static_cast<size_t>(r) * 8 + c]; }
    bool operator==(const QuantTable&) const = default;
};

struct CoefArray {
    int blocks_x = 0;
    int blocks_y = 0;
    std::vector<int16_t> coefs;  // n_blocks * 64, block raster order
    QuantTable table;

    int n_blocks() const { return blocks_x * blocks_y; }
    int width() const { return 8 * blocks_x; }
    int height() const { return 8 * blocks_y; }

    const int16_t* block(int bx, int by) const {
        return coefs.data() + (static_cast<size_t>(by) * blocks_x + bx) * 64;
    }
    int16_t* block(int bx, int by) {
        return coefs.data() + (static_cast<size_t>(by) * blocks_x + bx) * 64;
    }
    int16_t coef(int bx, int by, int r, int c) const { return block(bx, by)[8 * r + c]; }
};

struct Ycbcr {
    double y;
    double cb;
    double cr;
};

// Y = 0.299 R + 0.587 G + 0.114 B, Cb = 0.564 (B - Y), Cr = 0.713 (R - Y).
Ycbcr rgb_to_ycbcr(double r, double g, double b);

using Block = std::array<double, 64>;

// Orthonormal 8x8 DCT-II and its inverse; idct(dct(f)) == f to ~1e-13.
Block block_dct(const Block& f);
Block block_idct(const Block& coefs);

// Annex-K luminance table scaled by the usual quality-factor law
// (S = 5000/qf below 50, else 200 - 2 qf; entry = clamp((T*S+50)/100, 1, 255)).
QuantTable quality_to_table(int qf);

// Level shift by -128, per-block DCT, round-to-nearest quantization.
// Dimensions must be multiples of 8 and at least 16.
CoefArray compress(const PixelImage& img, const QuantTable& table);
CoefArray compress(const PixelImage& img, int qf);

// Dequantize, inverse DCT, level shift +128, clamp to [0,255].
PixelImage decompress(const CoefArray& c);

PixelImage crop(const PixelImage& img, int left, int top, int new_width, int new_height);

// Decompress, crop 4 px from top and left, recompress with the same table.
// The result has one block less in each direction.
CoefArray calibrate(const CoefArray& c);

}  // namespace stegid

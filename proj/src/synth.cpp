#include "stegid/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace stegid {
namespace {

// One 3x3 box-blur pass with replicated borders.
void box_blur(std::vector<double>& a, int w, int h) {
    std::vector<double> out(a.size());
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double s = 0.0;
            for (int dy = -1; dy <= 1; ++dy) {
                int yy = std::clamp(y + dy, 0, h - 1);
                for (int dx = -1; dx <= 1; ++dx) {
                    int xx = std::clamp(x + dx, 0, w - 1);
                    s += a[static_cast<size_t>(yy) * w + xx];
                }
            }
            out[static_cast<size_t>(y) * w + x] = s / 9.0;
        }
    }
    a.swap(out);
}

}  // namespace

CoverSourceParams draw_source_params(uint64_t source_id, int width, int height, Rng& rng) {
    CoverSourceParams p;
    p.source_id = source_id;
    p.width = width;
    p.height = height;
    p.mean_level = rng.uniform(124.5, 131.5);
    p.lowfreq_amp = rng.uniform(27.9, 32.1);
    p.texture_sigma = rng.uniform(13.8125, 14.6875);
    p.smooth_mix = rng.uniform(0.4125, 0.5875);
    return p;
}

PixelImage synth_cover(const CoverSourceParams& params, Rng& rng) {
    const int w = params.width;
    const int h = params.height;
    const size_t npix = static_cast<size_t>(w) * h;

    const double busy = rng.uniform(params.busy_min, params.busy_max);

    // Smooth scene content: a handful of random directional waves.
    struct Wave {
        double wx, wy, phase, amp;
    };
    Wave waves[4];
    for (auto& wave : waves) {
        wave.wx = 2.0 * std::numbers::pi * rng.uniform(0.4, 2.6) / w;
        wave.wy = 2.0 * std::numbers::pi * rng.uniform(0.4, 2.6) / h;
        if (rng.uniform() < 0.5) wave.wx = -wave.wx;
        wave.phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
        wave.amp = params.lowfreq_amp * rng.uniform(0.4, 1.0);
    }

    // Fine texture: a source-specific blend of white and blurred noise
    // (continuous spectrum knob), rescaled to the source sigma times the
    // per-image busyness.
    std::vector<double> tex(npix);
    for (auto& t : tex) t = rng.normal();
    std::vector<double> blurred = tex;
    box_blur(blurred, w, h);
    for (size_t i = 0; i < npix; ++i)
        tex[i] = (1.0 - params.smooth_mix) * tex[i] + params.smooth_mix * blurred[i];
    double sumsq = 0.0;
    for (double t : tex) sumsq += t * t;
    double sd = std::sqrt(sumsq / static_cast<double>(npix));
    double gain = sd > 0.0 ? params.texture_sigma * busy / sd : 0.0;

    PixelImage img;
    img.width = w;
    img.height = h;
    img.samples.resize(npix);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double v = params.mean_level;
            for (const auto& wave : waves)
                v += wave.amp * std::cos(wave.wx * x + wave.wy * y + wave.phase);
            v += gain * tex[static_cast<size_t>(y) * w + x];
            img.at(x, y) = std::clamp(v, 0.0, 255.0);
        }
    }
    return img;
}

}  // namespace stegid

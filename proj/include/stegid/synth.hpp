#pragma once
// Parameterized synthetic cover sources standing in for distinct actors'
// cameras. Each source has its own texture character (noise level, spatial
// correlation, brightness); individual images vary in content and in how
// busy they are, so per-image capacities spread within an actor.

#include "stegid/image.hpp"
#include "stegid/rng.hpp"

#include <cstdint>

namespace stegid {

struct CoverSourceParams {
    uint64_t source_id = 0;
    int width = 64;
    int height = 64;
    double mean_level = 128.0;   // average luminance of the source
    double lowfreq_amp = 30.0;   // amplitude of smooth scene content
    double texture_sigma = 14.0; // fine-texture noise level (pixel units)
    double smooth_mix = 0.5;     // texture correlation: blend of white and blurred noise
    double busy_min = 0.55;      // per-image texture multiplier range
    double busy_max = 1.75;
};

// Draws a reproducible parameter set for one source. Distinct sources get
// measurably distinct feature statistics without dwarfing embedding signals.
CoverSourceParams draw_source_params(uint64_t source_id, int width, int height, Rng& rng);

// Deterministic under the rng seed: smooth cosine content plus source-shaped
// correlated noise, clamped to [0,255].
PixelImage synth_cover(const CoverSourceParams& params, Rng& rng);

}  // namespace stegid

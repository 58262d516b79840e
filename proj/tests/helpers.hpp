#pragma once
// Shared fixtures for the unit suites.

#include "stegid/embed.hpp"
#include "stegid/image.hpp"
#include "stegid/synth.hpp"

namespace testutil {

inline stegid::PixelImage constant_image(int w, int h, double value) {
    stegid::PixelImage img;
    img.width = w;
    img.height = h;
    img.samples.assign(static_cast<size_t>(w) * h, value);
    return img;
}

inline stegid::CoverSourceParams small_source(uint64_t id = 0, int size = 64) {
    stegid::CoverSourceParams p;
    p.source_id = id;
    p.width = p.height = size;
    return p;
}

// A compressed synthetic cover; the workhorse non-trivial input.
inline stegid::CoefArray synth_coef(uint64_t seed, int size = 64, int qf = 80) {
    stegid::Rng rng(seed);
    return stegid::compress(stegid::synth_cover(small_source(0, size), rng), qf);
}

}  // namespace testutil

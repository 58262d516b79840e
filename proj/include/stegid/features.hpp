#pragma once
// JPEG steganalysis feature extractors.
//
// PEV-274: calibrated DCT + Markov features. Every DCT-part entry is the
// difference feature(J1) - feature(J2) where J2 is the calibrated
// (decompress / crop 4px / recompress) version of J1. Layout, in order:
//   [ 11] global histogram, l in [-5,5]
//   [ 55] per-mode histograms for modes {(1,2),(2,1),(3,1),(2,2),(1,3)}
//   [ 99] dual histograms for d in [-5,5] x 9 lowest AC modes (saturated bins)
//   [ 25] co-occurrence C_{s,t}, (s,t) in [-2,2]^2
//   [  3] V, B_1, B_2
//   [ 81] averaged calibrated Markov matrix, differences clipped to [-4,4]
// Histogram and dual-histogram counts are divided by the image's own 64*n_B
// before differencing so J1 and J2 (one block fewer per direction) compare.
//
// LI-250: high-order joint densities of |coefficients|, 125 intra-block +
// 125 inter-block entries over triples with components in [0,4]; each part
// averaged over three directions. Out-of-range triples drop mass.

#include "stegid/image.hpp"

#include <array>
#include <string>
#include <vector>

namespace stegid {

enum class Schema { Pev274, Li250 };

inline constexpr int kPev274Dim = 274;
inline constexpr int kLi250Dim = 250;

inline constexpr int schema_dim(Schema s) { return s == Schema::Pev274 ? kPev274Dim : kLi250Dim; }
const char* schema_name(Schema s);
Schema schema_from_name(const std::string& name);

struct FeatureVector {
    Schema schema = Schema::Pev274;
    std::vector<double> values;
};

struct FeatureSet {
    int actor_id = 0;
    std::vector<FeatureVector> vectors;  // one per image, uniform schema
};

// 9x9 transition matrix over clipped differences i,j in [-4,4];
// entry (i,j) at index 9*(i+4) + (j+4). Defined rows sum to 1.
using MarkovMatrix = std::array<double, 81>;

struct MarkovTpms {
    MarkovMatrix h, v, d, m;
};

// Transition probability matrices of the four difference arrays taken on
// absolute coefficient values in image layout. Rows with no transitions
// are all-zero.
MarkovTpms markov_tpm(const CoefArray& c);

// Calibrated difference M(J1) - M(J2) per direction, averaged: 81 entries.
std::array<double, 81> pev_markov_avg(const CoefArray& c);

FeatureVector pev274(const CoefArray& c);
FeatureVector li250(const CoefArray& c);

FeatureVector extract(Schema schema, const CoefArray& c);

}  // namespace stegid

#pragma once
// File formats.
//
// STCA (coefficient array, little-endian):
//   magic "STCA", version u16, blocks_x u32, blocks_y u32,
//   64 x u16 quantization table (row-major),
//   then n_blocks x 64 i16 coefficients, blocks in raster order, each block
//   row-major in natural (row, col) frequency order (no zig-zag).
//
// STFM (feature matrix, little-endian):
//   magic "STFM", version u16, schema u16 (0 raw, 1 pev274, 2 li250),
//   rows u32, cols u32, f64 row-major.
//
// STPB (projection basis, little-endian):
//   magic "STPB", version u16, method u16 (0 pct, 1 mcv, 2 ols, 3 cls),
//   d u32, k u32, lambda f64, then d*k f64 column-major.
//
// PixelImage is exchanged as binary 8-bit PGM (P5). CSV exports use 17
// significant digits so round-trips are exact.

#include "stegid/cluster.hpp"
#include "stegid/image.hpp"
#include "stegid/outlier.hpp"
#include "stegid/project.hpp"
#include "stegid/setdist.hpp"

#include <filesystem>
#include <string>

namespace stegid {

void write_stca(const std::filesystem::path& path, const CoefArray& c);
CoefArray read_stca(const std::filesystem::path& path);

void write_pgm(const std::filesystem::path& path, const PixelImage& img);
PixelImage read_pgm(const std::filesystem::path& path);

void write_stfm(const std::filesystem::path& path, const FeatureMatrix& m);
FeatureMatrix read_stfm(const std::filesystem::path& path);

// Header row: <schema>_<column index>. Values only; actor identity lives in
// the per-actor file layout and manifests.
void write_feature_csv(const std::filesystem::path& path, const FeatureMatrix& m);

// First line is a JSON comment carrying the measure tag, then a header with
// actor ids.
void write_distance_csv(const std::filesystem::path& path, const DistanceMatrix& d);
DistanceMatrix read_distance_csv(const std::filesystem::path& path);

// step,membersA,membersB,height with members joined by '|'.
void write_dendrogram_csv(const std::filesystem::path& path, const Dendrogram& t);
// Graphviz DOT with merge heights as internal node labels.
void write_dendrogram_dot(const std::filesystem::path& path, const Dendrogram& t);

void write_ranking_csv(const std::filesystem::path& path, const SuspicionRanking& r);
void write_ranking_json(const std::filesystem::path& path, const SuspicionRanking& r);

void write_stpb(const std::filesystem::path& path, const ProjectionBasis& b);
ProjectionBasis read_stpb(const std::filesystem::path& path);
void write_basis_csv(const std::filesystem::path& path, const ProjectionBasis& b);

// 17-significant-digit float formatting shared by the CSV writers.
std::string format_double(double v);

}  // namespace stegid

#include "stegid/io.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <cstdio>
#include <unistd.h>
#include <filesystem>
#include <fstream>

using namespace stegid;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("stegid_io_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string file_bytes(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("stca round trip and frozen header bytes") {
    TempDir tmp;
    CoefArray c = testutil::synth_coef(42, 24);
    fs::path p = tmp.path / "a.stca";
    write_stca(p, c);
    CoefArray back = read_stca(p);
    CHECK(back.blocks_x == c.blocks_x);
    CHECK(back.blocks_y == c.blocks_y);
    CHECK(back.coefs == c.coefs);
    CHECK(back.table == c.table);

    // Layout freeze: magic, version u16 = 1, blocks 3x3 little-endian, then
    // the first table entry of the QF-80 luminance table (6).
    std::string bytes = file_bytes(p);
    REQUIRE(bytes.size() >= 16);
    CHECK(bytes.substr(0, 4) == "STCA");
    CHECK(static_cast<unsigned char>(bytes[4]) == 1);
    CHECK(static_cast<unsigned char>(bytes[5]) == 0);
    CHECK(static_cast<unsigned char>(bytes[6]) == 3);   // blocks_x lo byte
    CHECK(static_cast<unsigned char>(bytes[10]) == 3);  // blocks_y lo byte
    CHECK(static_cast<unsigned char>(bytes[14]) == 6);  // table[0] lo byte
    CHECK(bytes.size() == 4 + 2 + 4 + 4 + 64 * 2 + static_cast<size_t>(c.n_blocks()) * 64 * 2);
}

TEST_CASE("stca rejects corrupt input") {
    TempDir tmp;
    fs::path p = tmp.path / "bad.stca";
    {
        std::ofstream os(p, std::ios::binary);
        os << "NOPE";
    }
    CHECK_THROWS(read_stca(p));
}

TEST_CASE("pgm round trip quantizes to 8 bits") {
    TempDir tmp;
    PixelImage img = testutil::constant_image(16, 8, 0.0);
    for (size_t i = 0; i < img.samples.size(); ++i) img.samples[i] = static_cast<double>(i % 256);
    fs::path p = tmp.path / "img.pgm";
    write_pgm(p, img);
    PixelImage back = read_pgm(p);
    CHECK(back.width == img.width);
    CHECK(back.height == img.height);
    for (size_t i = 0; i < img.samples.size(); ++i) CHECK(back.samples[i] == img.samples[i]);
}

TEST_CASE("stfm round trip preserves schema and payload exactly") {
    TempDir tmp;
    FeatureMatrix m;
    m.rows = 3;
    m.cols = 4;
    m.schema_id = 1;
    Rng rng(9);
    for (int i = 0; i < 12; ++i) m.data.push_back(rng.normal() * 1e-7);
    m.row_actor = {0, 0, 0};
    fs::path p = tmp.path / "f.stfm";
    write_stfm(p, m);
    FeatureMatrix back = read_stfm(p);
    CHECK(back.rows == 3);
    CHECK(back.cols == 4);
    CHECK(back.schema_id == 1);
    CHECK(back.data == m.data);  // f64 bit-exact
}

TEST_CASE("distance csv round trip with measure tag") {
    TempDir tmp;
    DistanceMatrix d;
    d.n = 3;
    d.actor_ids = {4, 7, 9};
    d.measure_tag = "linear-mmd";
    d.d = {0, 1.5, -0.25, 1.5, 0, 3.125, -0.25, 3.125, 0};
    fs::path p = tmp.path / "d.csv";
    write_distance_csv(p, d);
    DistanceMatrix back = read_distance_csv(p);
    CHECK(back.n == 3);
    CHECK(back.actor_ids == d.actor_ids);
    CHECK(back.measure_tag == d.measure_tag);
    CHECK(back.d == d.d);
}

TEST_CASE("dendrogram exports carry every merge") {
    TempDir tmp;
    Dendrogram t;
    t.n = 3;
    t.merges.push_back({{0}, {2}, 0.5});
    t.merges.push_back({{0, 2}, {1}, 2.0});
    write_dendrogram_csv(tmp.path / "t.csv", t);
    write_dendrogram_dot(tmp.path / "t.dot", t);

    std::string csv = file_bytes(tmp.path / "t.csv");
    CHECK(csv.find("1,0,2,0.5") != std::string::npos);
    CHECK(csv.find("2,0|2,1,2") != std::string::npos);
    std::string dot = file_bytes(tmp.path / "t.dot");
    CHECK(dot.find("graph dendrogram") != std::string::npos);
    CHECK(dot.find("leaf_1") != std::string::npos);
    CHECK(dot.find("merge_2") != std::string::npos);
}

TEST_CASE("ranking exports") {
    TempDir tmp;
    SuspicionRanking r;
    r.actor_ids = {2, 0, 1};
    r.scores = {3.5, 1.25, 0.75};
    write_ranking_csv(tmp.path / "r.csv", r);
    write_ranking_json(tmp.path / "r.json", r);
    std::string csv = file_bytes(tmp.path / "r.csv");
    CHECK(csv.find("1,2,3.5") != std::string::npos);
    std::string j = file_bytes(tmp.path / "r.json");
    CHECK(j.find("\"actor\": 2") != std::string::npos);
}

TEST_CASE("stpb round trip") {
    TempDir tmp;
    ProjectionBasis b;
    b.method = ProjectionMethod::Cls;
    b.input_dim = 3;
    b.k = 2;
    b.lambda = 0.125;
    b.w = {1e-3, 2e-3, 3e-3, -1.0, 0.5, 0.25};
    fs::path p = tmp.path / "b.stpb";
    write_stpb(p, b);
    ProjectionBasis back = read_stpb(p);
    CHECK(back.method == ProjectionMethod::Cls);
    CHECK(back.input_dim == 3);
    CHECK(back.k == 2);
    CHECK(back.lambda == 0.125);
    CHECK(back.w == b.w);
}

TEST_CASE("writers produce byte-identical files on rerun") {
    TempDir tmp;
    CoefArray c = testutil::synth_coef(77, 32);
    write_stca(tmp.path / "1.stca", c);
    write_stca(tmp.path / "2.stca", c);
    CHECK(file_bytes(tmp.path / "1.stca") == file_bytes(tmp.path / "2.stca"));

    FeatureMatrix m;
    m.rows = 2;
    m.cols = 3;
    m.schema_id = 2;
    m.data = {0.1, -2.5e-17, 3.0, 4.0, 5.0, 6.0};
    m.row_actor = {0, 1};
    write_feature_csv(tmp.path / "1.csv", m);
    write_feature_csv(tmp.path / "2.csv", m);
    CHECK(file_bytes(tmp.path / "1.csv") == file_bytes(tmp.path / "2.csv"));
    std::string csv = file_bytes(tmp.path / "1.csv");
    CHECK(csv.rfind("li250_0,li250_1,li250_2\n", 0) == 0);
}

TEST_SUITE_END();

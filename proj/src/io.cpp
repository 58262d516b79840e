#include "stegid/io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace stegid {

namespace {

void put_u16(std::ostream& os, uint16_t v) {
    char b[2] = {static_cast<char>(v & 0xFF), static_cast<char>(v >> 8)};
    os.write(b, 2);
}

void put_u32(std::ostream& os, uint32_t v) {
    char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
    os.write(b, 4);
}

void put_i16(std::ostream& os, int16_t v) { put_u16(os, static_cast<uint16_t>(v)); }

void put_f64(std::ostream& os, double v) {
    uint64_t u = std::bit_cast<uint64_t>(v);
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((u >> (8 * i)) & 0xFF);
    os.write(b, 8);
}

uint16_t get_u16(std::istream& is) {
    unsigned char b[2];
    is.read(reinterpret_cast<char*>(b), 2);
    return static_cast<uint16_t>(b[0] | (b[1] << 8));
}

uint32_t get_u32(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    return static_cast<uint32_t>(b[0]) | (static_cast<uint32_t>(b[1]) << 8) |
           (static_cast<uint32_t>(b[2]) << 16) | (static_cast<uint32_t>(b[3]) << 24);
}

int16_t get_i16(std::istream& is) { return static_cast<int16_t>(get_u16(is)); }

double get_f64(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    uint64_t u = 0;
    for (int i = 0; i < 8; ++i) u |= static_cast<uint64_t>(b[i]) << (8 * i);
    return std::bit_cast<double>(u);
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
    return os;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open for reading: " + path.string());
    return is;
}

void expect_magic(std::istream& is, const char* magic, const std::filesystem::path& path) {
    char got[4];
    is.read(got, 4);
    if (!is || std::string_view(got, 4) != std::string_view(magic, 4))
        throw std::runtime_error("bad magic in " + path.string());
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_stca(const std::filesystem::path& path, const CoefArray& c) {
    auto os = open_out(path);
    os.write("STCA", 4);
    put_u16(os, 1);
    put_u32(os, static_cast<uint32_t>(c.blocks_x));
    put_u32(os, static_cast<uint32_t>(c.blocks_y));
    for (int i = 0; i < 64; ++i) put_u16(os, c.table.q[static_cast<size_t>(i)]);
    for (int16_t v : c.coefs) put_i16(os, v);
}

CoefArray read_stca(const std::filesystem::path& path) {
    auto is = open_in(path);
    expect_magic(is, "STCA", path);
    uint16_t version = get_u16(is);
    if (version != 1) throw std::runtime_error("unsupported STCA version");
    CoefArray c;
    c.blocks_x = static_cast<int>(get_u32(is));
    c.blocks_y = static_cast<int>(get_u32(is));
    if (c.blocks_x <= 0 || c.blocks_y <= 0 || c.blocks_x > 1 << 16 || c.blocks_y > 1 << 16)
        throw std::runtime_error("bad STCA block grid");
    for (int i = 0; i < 64; ++i) c.table.q[static_cast<size_t>(i)] = get_u16(is);
    c.coefs.resize(static_cast<size_t>(c.n_blocks()) * 64);
    for (auto& v : c.coefs) v = get_i16(is);
    if (!is) throw std::runtime_error("truncated STCA file: " + path.string());
    return c;
}

void write_pgm(const std::filesystem::path& path, const PixelImage& img) {
    auto os = open_out(path);
    os << "P5\n" << img.width << " " << img.height << "\n255\n";
    for (double v : img.samples) {
        double clamped = std::min(255.0, std::max(0.0, v));
        os.put(static_cast<char>(static_cast<unsigned char>(std::lround(clamped))));
    }
}

PixelImage read_pgm(const std::filesystem::path& path) {
    auto is = open_in(path);
    std::string magic;
    is >> magic;
    if (magic != "P5") throw std::runtime_error("not a binary PGM: " + path.string());
    int w = 0, h = 0, maxval = 0;
    is >> w >> h >> maxval;
    if (maxval != 255 || w <= 0 || h <= 0) throw std::runtime_error("unsupported PGM parameters");
    is.get();  // single whitespace after the header
    PixelImage img;
    img.width = w;
    img.height = h;
    img.samples.resize(static_cast<size_t>(w) * h);
    for (auto& v : img.samples) v = static_cast<double>(static_cast<unsigned char>(is.get()));
    if (!is) throw std::runtime_error("truncated PGM: " + path.string());
    return img;
}

void write_stfm(const std::filesystem::path& path, const FeatureMatrix& m) {
    auto os = open_out(path);
    os.write("STFM", 4);
    put_u16(os, 1);
    put_u16(os, static_cast<uint16_t>(m.schema_id));
    put_u32(os, static_cast<uint32_t>(m.rows));
    put_u32(os, static_cast<uint32_t>(m.cols));
    for (double v : m.data) put_f64(os, v);
}

FeatureMatrix read_stfm(const std::filesystem::path& path) {
    auto is = open_in(path);
    expect_magic(is, "STFM", path);
    if (get_u16(is) != 1) throw std::runtime_error("unsupported STFM version");
    FeatureMatrix m;
    m.schema_id = get_u16(is);
    m.rows = static_cast<int>(get_u32(is));
    m.cols = static_cast<int>(get_u32(is));
    if (m.rows < 0 || m.cols <= 0) throw std::runtime_error("bad STFM shape");
    m.data.resize(static_cast<size_t>(m.rows) * static_cast<size_t>(m.cols));
    for (auto& v : m.data) v = get_f64(is);
    if (!is) throw std::runtime_error("truncated STFM: " + path.string());
    m.row_actor.assign(static_cast<size_t>(m.rows), 0);
    return m;
}

namespace {
const char* schema_prefix(int schema_id) {
    switch (schema_id) {
        case 1: return "pev274";
        case 2: return "li250";
        default: return "f";
    }
}
}  // namespace

void write_feature_csv(const std::filesystem::path& path, const FeatureMatrix& m) {
    auto os = open_out(path);
    for (int c = 0; c < m.cols; ++c) {
        if (c) os << ",";
        os << schema_prefix(m.schema_id) << "_" << c;
    }
    os << "\n";
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) {
            if (c) os << ",";
            os << format_double(m.at(r, c));
        }
        os << "\n";
    }
}

void write_distance_csv(const std::filesystem::path& path, const DistanceMatrix& d) {
    auto os = open_out(path);
    nlohmann::json meta{{"measure", d.measure_tag}, {"n", d.n}};
    os << "# " << meta.dump() << "\n";
    os << "actor";
    for (int id : d.actor_ids) os << "," << id;
    os << "\n";
    for (int i = 0; i < d.n; ++i) {
        os << d.actor_ids[static_cast<size_t>(i)];
        for (int j = 0; j < d.n; ++j) os << "," << format_double(d.at(i, j));
        os << "\n";
    }
}

DistanceMatrix read_distance_csv(const std::filesystem::path& path) {
    auto is = open_in(path);
    std::string line;
    if (!std::getline(is, line) || line.rfind("# ", 0) != 0)
        throw std::runtime_error("distance csv: missing metadata comment");
    auto meta = nlohmann::json::parse(line.substr(2));
    DistanceMatrix d;
    d.measure_tag = meta.at("measure").get<std::string>();
    d.n = meta.at("n").get<int>();

    if (!std::getline(is, line)) throw std::runtime_error("distance csv: missing header");
    {
        std::stringstream ss(line);
        std::string cell;
        std::getline(ss, cell, ',');  // "actor"
        while (std::getline(ss, cell, ',')) d.actor_ids.push_back(std::stoi(cell));
    }
    if (static_cast<int>(d.actor_ids.size()) != d.n)
        throw std::runtime_error("distance csv: header/actor count mismatch");

    d.d.assign(static_cast<size_t>(d.n) * d.n, 0.0);
    for (int i = 0; i < d.n; ++i) {
        if (!std::getline(is, line)) throw std::runtime_error("distance csv: truncated");
        std::stringstream ss(line);
        std::string cell;
        std::getline(ss, cell, ',');  // row actor id
        for (int j = 0; j < d.n; ++j) {
            if (!std::getline(ss, cell, ',')) throw std::runtime_error("distance csv: short row");
            d.at(i, j) = std::stod(cell);
        }
    }
    return d;
}

namespace {
std::string join_ids(const std::vector<int>& ids) {
    std::string s;
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i) s += "|";
        s += std::to_string(ids[i]);
    }
    return s;
}
}  // namespace

void write_dendrogram_csv(const std::filesystem::path& path, const Dendrogram& t) {
    auto os = open_out(path);
    os << "step,membersA,membersB,height\n";
    for (size_t i = 0; i < t.merges.size(); ++i) {
        const Merge& m = t.merges[i];
        os << (i + 1) << "," << join_ids(m.a) << "," << join_ids(m.b) << ","
           << format_double(m.height) << "\n";
    }
}

void write_dendrogram_dot(const std::filesystem::path& path, const Dendrogram& t) {
    auto os = open_out(path);
    os << "graph dendrogram {\n  node [shape=box];\n";
    // Leaves, then one internal node per merge; clusters tracked by their
    // sorted member list.
    std::map<std::string, std::string> node_of;
    for (const Merge& m : t.merges)
        for (const auto* side : {&m.a, &m.b})
            for (int id : *side) {
                std::string key = std::to_string(id);
                if (!node_of.count(key)) {
                    std::string name = "leaf_" + key;
                    os << "  " << name << " [label=\"" << id << "\"];\n";
                    node_of[key] = name;
                }
            }
    for (size_t i = 0; i < t.merges.size(); ++i) {
        const Merge& m = t.merges[i];
        std::vector<int> all(m.a);
        all.insert(all.end(), m.b.begin(), m.b.end());
        std::sort(all.begin(), all.end());
        std::string name = "merge_" + std::to_string(i + 1);
        os << "  " << name << " [label=\"h=" << format_double(m.height) << "\"];\n";
        os << "  " << name << " -- " << node_of.at(join_ids(m.a)) << ";\n";
        os << "  " << name << " -- " << node_of.at(join_ids(m.b)) << ";\n";
        node_of[join_ids(all)] = name;
    }
    os << "}\n";
}

void write_ranking_csv(const std::filesystem::path& path, const SuspicionRanking& r) {
    auto os = open_out(path);
    os << "rank,actor,score\n";
    for (size_t i = 0; i < r.actor_ids.size(); ++i)
        os << (i + 1) << "," << r.actor_ids[i] << "," << format_double(r.scores[i]) << "\n";
}

void write_ranking_json(const std::filesystem::path& path, const SuspicionRanking& r) {
    nlohmann::json arr = nlohmann::json::array();
    for (size_t i = 0; i < r.actor_ids.size(); ++i)
        arr.push_back({{"rank", i + 1}, {"actor", r.actor_ids[i]}, {"score", r.scores[i]}});
    auto os = open_out(path);
    os << arr.dump(2) << "\n";
}

void write_stpb(const std::filesystem::path& path, const ProjectionBasis& b) {
    auto os = open_out(path);
    os.write("STPB", 4);
    put_u16(os, 1);
    put_u16(os, static_cast<uint16_t>(b.method));
    put_u32(os, static_cast<uint32_t>(b.input_dim));
    put_u32(os, static_cast<uint32_t>(b.k));
    put_f64(os, b.lambda);
    for (double v : b.w) put_f64(os, v);
}

ProjectionBasis read_stpb(const std::filesystem::path& path) {
    auto is = open_in(path);
    expect_magic(is, "STPB", path);
    if (get_u16(is) != 1) throw std::runtime_error("unsupported STPB version");
    ProjectionBasis b;
    b.method = static_cast<ProjectionMethod>(get_u16(is));
    b.input_dim = static_cast<int>(get_u32(is));
    b.k = static_cast<int>(get_u32(is));
    b.lambda = get_f64(is);
    if (b.input_dim <= 0 || b.k <= 0) throw std::runtime_error("bad STPB shape");
    b.w.resize(static_cast<size_t>(b.input_dim) * static_cast<size_t>(b.k));
    for (auto& v : b.w) v = get_f64(is);
    if (!is) throw std::runtime_error("truncated STPB: " + path.string());
    return b;
}

void write_basis_csv(const std::filesystem::path& path, const ProjectionBasis& b) {
    auto os = open_out(path);
    for (int c = 0; c < b.k; ++c) {
        if (c) os << ",";
        os << "w_" << c;
    }
    os << "\n";
    for (int r = 0; r < b.input_dim; ++r) {
        for (int c = 0; c < b.k; ++c) {
            if (c) os << ",";
            os << format_double(b.at(r, c));
        }
        os << "\n";
    }
}

}  // namespace stegid

// stegid: multi-actor image transmission simulator with batch embedding,
// JPEG-domain steganalysis features, and unsupervised guilty-actor
// identification. Subcommands compose into file-based pipelines; every
// command is deterministic given --seed.

#include "stegid/bench.hpp"
#include "stegid/io.hpp"
#include "stegid/parallel.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace stegid;

namespace {

std::string actor_dir_name(int id) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "actor_%03d", id);
    return buf;
}

std::string image_file_name(int id) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "img_%03d.stca", id);
    return buf;
}

// corpus dir: actor_<id>/ subdirectories of .stca files.
std::map<int, std::vector<CoefArray>> load_corpus(const fs::path& dir) {
    std::map<int, std::vector<CoefArray>> corpus;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_directory()) continue;
        std::string name = entry.path().filename().string();
        if (name.rfind("actor_", 0) != 0) continue;
        int id = std::stoi(name.substr(6));
        std::vector<fs::path> files;
        for (const auto& f : fs::directory_iterator(entry.path()))
            if (f.path().extension() == ".stca") files.push_back(f.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) corpus[id].push_back(read_stca(f));
    }
    if (corpus.empty()) throw std::runtime_error("no actor_* directories under " + dir.string());
    return corpus;
}

// feature dir: actor_<id>.stfm files (written by `features` or
// `project-apply`). All files must agree on column count.
FeatureMatrix load_feature_dir(const fs::path& dir) {
    std::map<int, FeatureMatrix> parts;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() != ".stfm") continue;
        std::string stem = entry.path().stem().string();
        if (stem.rfind("actor_", 0) != 0) continue;
        parts.emplace(std::stoi(stem.substr(6)), read_stfm(entry.path()));
    }
    if (parts.empty()) throw std::runtime_error("no actor_*.stfm under " + dir.string());
    FeatureMatrix all;
    all.cols = parts.begin()->second.cols;
    all.schema_id = parts.begin()->second.schema_id;
    for (auto& [id, m] : parts) {
        if (m.cols != all.cols) throw std::runtime_error("feature files disagree on columns");
        all.data.insert(all.data.end(), m.data.begin(), m.data.end());
        for (int r = 0; r < m.rows; ++r) all.row_actor.push_back(id);
        all.rows += m.rows;
    }
    return all;
}

std::vector<FeatureSet> sets_from_matrix(const FeatureMatrix& m) {
    Schema schema;
    if (m.schema_id == 1)
        schema = Schema::Pev274;
    else if (m.schema_id == 2)
        schema = Schema::Li250;
    else
        throw std::runtime_error("this command needs pev274/li250 features (not projected)");
    std::vector<int> ids;
    auto grouped = group_rows_by_actor(m, ids);
    std::vector<FeatureSet> sets;
    for (size_t i = 0; i < grouped.size(); ++i) {
        FeatureSet s;
        s.actor_id = ids[i];
        for (auto& v : grouped[i]) s.vectors.push_back(FeatureVector{schema, std::move(v)});
        sets.push_back(std::move(s));
    }
    return sets;
}

void write_feature_dir(const fs::path& dir, const FeatureMatrix& m) {
    fs::create_directories(dir);
    std::vector<int> ids;
    auto grouped = group_rows_by_actor(m, ids);
    json manifest;
    manifest["schema_id"] = m.schema_id;
    manifest["cols"] = m.cols;
    json actors = json::array();
    for (size_t i = 0; i < grouped.size(); ++i) {
        FeatureMatrix part;
        part.cols = m.cols;
        part.schema_id = m.schema_id;
        for (const auto& v : grouped[i]) {
            part.data.insert(part.data.end(), v.begin(), v.end());
            part.row_actor.push_back(ids[i]);
            ++part.rows;
        }
        std::string base = actor_dir_name(ids[i]);
        write_stfm(dir / (base + ".stfm"), part);
        write_feature_csv(dir / (base + ".csv"), part);
        actors.push_back({{"id", ids[i]}, {"rows", part.rows}, {"file", base + ".stfm"}});
    }
    manifest["actors"] = actors;
    std::ofstream os(dir / "features.json", std::ios::binary);
    os << manifest.dump(2) << "\n";
}

MeasureSpec measure_from_flags(const std::string& measure, double gamma) {
    MeasureSpec m;
    m.kind = measure_from_name(measure);
    m.gamma = gamma;
    return m;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot read config: " + path);
    json j = json::parse(is);
    return j.get<ExperimentConfig>();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stegid: batch-steganography simulation and steganographer identification"};
    app.require_subcommand(1);

    uint64_t seed = 1;
    std::string out_dir = "out";
    std::string config_path;
    int threads = 0;
    app.add_option("--seed", seed, "master seed")->capture_default_str();
    app.add_option("--out", out_dir, "output directory")->capture_default_str();
    app.add_option("--config", config_path, "JSON experiment config");
    app.add_option("--threads", threads, "worker threads (0 = hardware)")->capture_default_str();

    // gen-covers
    auto* gen = app.add_subcommand("gen-covers", "synthesize per-actor cover images");
    int g_actors = 10, g_images = 50, g_width = 64, g_height = 64, g_qf = 80;
    bool g_pgm = false;
    gen->add_option("--actors", g_actors)->capture_default_str();
    gen->add_option("--images", g_images)->capture_default_str();
    gen->add_option("--width", g_width)->capture_default_str();
    gen->add_option("--height", g_height)->capture_default_str();
    gen->add_option("--qf", g_qf)->capture_default_str();
    gen->add_flag("--pgm", g_pgm, "also write decompressed covers as PGM");

    // embed
    auto* emb = app.add_subcommand("embed", "embed payload into one actor's cover set");
    std::string e_in;
    double e_alpha = 0.3, e_proportion = 0.0;
    std::string e_strategy;
    bool e_worst = false;
    emb->add_option("--in", e_in, "directory of .stca covers")->required();
    emb->add_option("--alpha", e_alpha, "payload, bits per nonzero AC coefficient")
        ->capture_default_str();
    emb->add_option("--proportion", e_proportion,
                    "embed alpha bpnc into this share of images (proportion mode)");
    emb->add_option("--strategy", e_strategy,
                    "spread alpha * total capacity by strategy: max-greedy|max-random|linear|even");
    emb->add_flag("--worst-case-rate", e_worst, "use rho = alpha instead of entropy coding model");

    // features
    auto* feat = app.add_subcommand("features", "extract steganalysis features for a corpus");
    std::string f_in, f_schema = "pev274";
    feat->add_option("--in", f_in, "corpus directory (actor_* subdirs)")->required();
    feat->add_option("--schema", f_schema, "pev274|li250")->capture_default_str();

    // distances
    auto* dist = app.add_subcommand("distances", "normalized inter-actor distance matrix");
    std::string d_in, d_measure = "linear-mmd";
    double d_gamma = 0.0;
    dist->add_option("--in", d_in, "feature directory")->required();
    dist->add_option("--measure", d_measure, "linear-mmd|gaussian-mmd|mean-embedding")
        ->capture_default_str();
    dist->add_option("--gamma", d_gamma, "gaussian bandwidth (0 = median rule)")
        ->capture_default_str();

    // detect-cluster
    auto* dc = app.add_subcommand("detect-cluster", "hierarchical clustering identification");
    std::string dc_in, dc_linkage = "single", dc_measure = "linear-mmd";
    double dc_gamma = 0.0;
    int dc_k = 1;
    bool dc_conventional_avg = false;
    dc->add_option("--in", dc_in, "feature directory")->required();
    dc->add_option("--linkage", dc_linkage, "single|complete|centroid|average")
        ->capture_default_str();
    dc->add_option("--measure", dc_measure)->capture_default_str();
    dc->add_option("--gamma", dc_gamma)->capture_default_str();
    dc->add_option("--k", dc_k, "number of actors to accuse")->capture_default_str();
    dc->add_flag("--conventional-average", dc_conventional_avg,
                 "average linkage over inter-cluster pairs only");

    // detect-lof
    auto* dl = app.add_subcommand("detect-lof", "local-outlier-factor identification");
    std::string dl_in, dl_measure = "linear-mmd";
    double dl_gamma = 0.0;
    int dl_k = 10;
    dl->add_option("--in", dl_in, "feature directory")->required();
    dl->add_option("--k", dl_k, "neighbor count")->capture_default_str();
    dl->add_option("--measure", dl_measure)->capture_default_str();
    dl->add_option("--gamma", dl_gamma)->capture_default_str();

    // ensemble-li
    auto* eli = app.add_subcommand("ensemble-li", "crop-based clustering ensemble");
    std::string eli_in;
    int eli_T = 9, eli_cw = 48, eli_ch = 48;
    eli->add_option("--in", eli_in, "corpus directory (actor_* subdirs)")->required();
    eli->add_option("--T", eli_T, "sub-model count")->capture_default_str();
    eli->add_option("--crop-width", eli_cw)->capture_default_str();
    eli->add_option("--crop-height", eli_ch)->capture_default_str();

    // ensemble-wu
    auto* ewu = app.add_subcommand("ensemble-wu", "feature-subsampling + partition ensemble");
    std::string ewu_in, ewu_measure = "linear-mmd";
    int ewu_T = 9, ewu_p = 1, ewu_k = 10;
    ewu->add_option("--in", ewu_in, "feature directory")->required();
    ewu->add_option("--T", ewu_T, "sub-model count")->capture_default_str();
    ewu->add_option("--p", ewu_p, "partitions per actor")->capture_default_str();
    ewu->add_option("--k", ewu_k, "LOF neighbor count")->capture_default_str();
    ewu->add_option("--measure", ewu_measure)->capture_default_str();

    // project-fit
    auto* pf = app.add_subcommand("project-fit", "fit a linear feature projection");
    std::string pf_method = "cls", pf_schema = "pev274";
    int pf_k = 50, pf_sources = 6, pf_covers = 120, pf_width = 64, pf_height = 64, pf_qf = 80;
    double pf_lambda = 0.0;
    pf->add_option("--method", pf_method, "pct|mcv|ols|cls")->capture_default_str();
    pf->add_option("--k", pf_k, "direction count")->capture_default_str();
    pf->add_option("--lambda", pf_lambda, "ridge strength (0 = relative default)")
        ->capture_default_str();
    pf->add_option("--schema", pf_schema)->capture_default_str();
    pf->add_option("--train-sources", pf_sources)->capture_default_str();
    pf->add_option("--train-covers", pf_covers)->capture_default_str();
    pf->add_option("--width", pf_width)->capture_default_str();
    pf->add_option("--height", pf_height)->capture_default_str();
    pf->add_option("--qf", pf_qf)->capture_default_str();

    // project-apply
    auto* pa = app.add_subcommand("project-apply", "project a feature directory through a basis");
    std::string pa_in, pa_basis;
    pa->add_option("--in", pa_in, "feature directory")->required();
    pa->add_option("--basis", pa_basis, "basis .stpb file")->required();

    // bench
    auto* bench = app.add_subcommand("bench", "seeded multi-trial benchmark from a config");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "strategy x payload sweep (mean guilty rank)");
    std::vector<double> sw_alphas{0.1, 0.2, 0.4};
    std::vector<std::string> sw_strategies{"even", "linear", "max-random", "max-greedy"};
    sweep->add_option("--alphas", sw_alphas, "payload levels")->capture_default_str();
    sweep->add_option("--strategies", sw_strategies)->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        fs::path out(out_dir);

        if (*gen) {
            fs::create_directories(out);
            QuantTable table = quality_to_table(g_qf);
            json manifest;
            manifest["seed"] = seed;
            manifest["actors"] = g_actors;
            manifest["images"] = g_images;
            manifest["width"] = g_width;
            manifest["height"] = g_height;
            manifest["qf"] = g_qf;
            json sources = json::array();
            for (int a = 0; a < g_actors; ++a) {
                Rng src_rng(derive_seed(seed, stream::kSource, static_cast<uint64_t>(a)));
                CoverSourceParams p =
                    draw_source_params(static_cast<uint64_t>(a), g_width, g_height, src_rng);
                sources.push_back({{"id", a},
                                   {"mean_level", p.mean_level},
                                   {"lowfreq_amp", p.lowfreq_amp},
                                   {"texture_sigma", p.texture_sigma},
                                   {"smooth_mix", p.smooth_mix}});
                fs::path adir = out / actor_dir_name(a);
                fs::create_directories(adir);
                for (int j = 0; j < g_images; ++j) {
                    Rng img_rng(derive_seed(
                        seed, stream::kImage,
                        static_cast<uint64_t>(a) * static_cast<uint64_t>(g_images) + j));
                    PixelImage img = synth_cover(p, img_rng);
                    CoefArray c = compress(img, table);
                    write_stca(adir / image_file_name(j), c);
                    if (g_pgm) {
                        fs::path pgm = adir / image_file_name(j);
                        pgm.replace_extension(".pgm");
                        write_pgm(pgm, decompress(c));
                    }
                }
            }
            manifest["sources"] = sources;
            std::ofstream os(out / "covers.json", std::ios::binary);
            os << manifest.dump(2) << "\n";
            std::cout << "wrote " << g_actors << " actors x " << g_images << " covers to "
                      << out << "\n";
        }

        if (*emb) {
            if (e_proportion <= 0.0 && e_strategy.empty())
                throw std::runtime_error("embed: give --proportion or --strategy");
            fs::create_directories(out);
            std::vector<fs::path> files;
            for (const auto& f : fs::directory_iterator(e_in))
                if (f.path().extension() == ".stca") files.push_back(f.path());
            std::sort(files.begin(), files.end());
            if (files.empty()) throw std::runtime_error("embed: no .stca files in " + e_in);

            std::vector<CoefArray> imgs;
            imgs.reserve(files.size());
            for (const auto& f : files) imgs.push_back(read_stca(f));
            std::vector<EmbedRecord> records(imgs.size());
            for (size_t j = 0; j < imgs.size(); ++j) records[j].image_id = static_cast<int>(j);

            if (!e_strategy.empty()) {
                std::vector<int64_t> caps(imgs.size());
                int64_t total_cap = 0;
                for (size_t j = 0; j < imgs.size(); ++j) total_cap += caps[j] = capacity(imgs[j]);
                int64_t total =
                    static_cast<int64_t>(std::floor(e_alpha * static_cast<double>(total_cap)));
                Rng alloc_rng(derive_seed(seed, stream::kEmbed));
                Allocation alloc = allocate(strategy_from_name(e_strategy), caps, total, alloc_rng);
                for (size_t j = 0; j < imgs.size(); ++j) {
                    if (alloc.lengths[j] <= 0) continue;
                    Rng img_rng(derive_seed(seed, stream::kImage, j));
                    Nsf5Result r = nsf5_simulate(imgs[j], alloc.lengths[j], img_rng, e_worst);
                    imgs[j] = std::move(r.stego);
                    records[j] = r.record;
                    records[j].image_id = static_cast<int>(j);
                }
            } else {
                Rng pick_rng(derive_seed(seed, stream::kEmbed));
                int count =
                    static_cast<int>(std::ceil(e_proportion * static_cast<double>(imgs.size())));
                auto chosen =
                    pick_rng.sample_without_replacement(static_cast<int>(imgs.size()), count);
                std::sort(chosen.begin(), chosen.end());
                for (int j : chosen) {
                    int64_t cap = capacity(imgs[static_cast<size_t>(j)]);
                    int64_t payload = static_cast<int64_t>(std::floor(e_alpha * static_cast<double>(cap)));
                    if (payload <= 0) continue;
                    Rng img_rng(derive_seed(seed, stream::kImage, static_cast<uint64_t>(j)));
                    Nsf5Result r =
                        nsf5_simulate(imgs[static_cast<size_t>(j)], payload, img_rng, e_worst);
                    imgs[static_cast<size_t>(j)] = std::move(r.stego);
                    records[static_cast<size_t>(j)] = r.record;
                    records[static_cast<size_t>(j)].image_id = j;
                }
            }

            std::ofstream manifest(out / "embed_manifest.jsonl", std::ios::binary);
            for (size_t j = 0; j < imgs.size(); ++j) {
                write_stca(out / files[j].filename(), imgs[j]);
                json line{{"image_id", records[j].image_id},
                          {"payload_bits", records[j].payload_bits},
                          {"rho", records[j].rho},
                          {"changes", records[j].changes}};
                manifest << line.dump() << "\n";
            }
            std::cout << "embedded into " << imgs.size() << " images; manifest at "
                      << (out / "embed_manifest.jsonl") << "\n";
        }

        if (*feat) {
            Schema schema = schema_from_name(f_schema);
            auto corpus = load_corpus(f_in);
            FeatureMatrix all;
            all.cols = schema_dim(schema);
            all.schema_id = schema_id_of(schema);
            // Extraction dominates the pipeline; parallel with slot-indexed
            // output so the result is thread-count independent.
            struct Item {
                int actor;
                const CoefArray* coef;
            };
            std::vector<Item> items;
            for (const auto& [id, coef_list] : corpus)
                for (const auto& c : coef_list) items.push_back({id, &c});
            std::vector<std::vector<double>> rows(items.size());
            parallel_for(static_cast<int>(items.size()), threads, [&](int i) {
                rows[static_cast<size_t>(i)] =
                    extract(schema, *items[static_cast<size_t>(i)].coef).values;
            });
            for (size_t i = 0; i < items.size(); ++i) {
                all.data.insert(all.data.end(), rows[i].begin(), rows[i].end());
                all.row_actor.push_back(items[i].actor);
                ++all.rows;
            }
            write_feature_dir(out, all);
            std::cout << "extracted " << all.rows << " " << f_schema << " vectors to " << out
                      << "\n";
        }

        if (*dist) {
            FeatureMatrix m = normalize_columns(load_feature_dir(d_in));
            std::vector<int> ids;
            auto grouped = group_rows_by_actor(m, ids);
            DistanceMatrix dm =
                actor_distance_matrix(grouped, ids, measure_from_flags(d_measure, d_gamma), seed);
            fs::create_directories(out);
            write_distance_csv(out / "distances.csv", dm);
            std::cout << "wrote " << (out / "distances.csv") << "\n";
        }

        if (*dc) {
            FeatureMatrix m = normalize_columns(load_feature_dir(dc_in));
            std::vector<int> ids;
            auto grouped = group_rows_by_actor(m, ids);
            DistanceMatrix dm =
                actor_distance_matrix(grouped, ids, measure_from_flags(dc_measure, dc_gamma), seed);
            Dendrogram tree = agglomerate(dm, linkage_from_name(dc_linkage), dc_conventional_avg);
            auto [c1, c2] = final_two_clusters(tree);
            Rng rng(derive_seed(seed, stream::kDetector));
            Accusation acc = accuse(c1, c2, dc_k, rng);

            fs::create_directories(out);
            write_distance_csv(out / "distances.csv", dm);
            write_dendrogram_csv(out / "dendrogram.csv", tree);
            write_dendrogram_dot(out / "dendrogram.dot", tree);
            json j{{"accused", acc.accused}, {"c1", c1},
                   {"c2", c2},               {"ranking", acc.ranking},
                   {"linkage", dc_linkage},  {"measure", dm.measure_tag},
                   {"seed", seed}};
            std::ofstream os(out / "accusation.json", std::ios::binary);
            os << j.dump(2) << "\n";
            std::cout << "accused:";
            for (int id : acc.accused) std::cout << " " << id;
            std::cout << "\n";
        }

        if (*dl) {
            FeatureMatrix m = normalize_columns(load_feature_dir(dl_in));
            std::vector<int> ids;
            auto grouped = group_rows_by_actor(m, ids);
            DistanceMatrix dm =
                actor_distance_matrix(grouped, ids, measure_from_flags(dl_measure, dl_gamma), seed);
            SuspicionRanking r = rank_by_scores(ids, lof_scores(dm, dl_k));
            fs::create_directories(out);
            write_ranking_csv(out / "ranking.csv", r);
            write_ranking_json(out / "ranking.json", r);
            std::cout << "most suspicious: " << r.actor_ids.front() << " (LOF "
                      << format_double(r.scores.front()) << ")\n";
        }

        if (*eli) {
            auto corpus = load_corpus(eli_in);
            std::vector<std::vector<CoefArray>> images;
            std::vector<int> ids;
            for (auto& [id, coef_list] : corpus) {
                ids.push_back(id);
                images.push_back(std::move(coef_list));
            }
            LiEnsembleConfig cfg;
            cfg.submodels = eli_T;
            cfg.crop_width = eli_cw;
            cfg.crop_height = eli_ch;
            LiEnsembleResult r = ensemble_li(images, ids, cfg, seed);

            fs::create_directories(out);
            json manifest{{"master_seed", seed},       {"submodels", eli_T},
                          {"crop_width", eli_cw},      {"crop_height", eli_ch},
                          {"sub_seeds", r.sub_seeds},  {"sub_verdicts", r.sub_verdicts},
                          {"final_verdict", r.accused}};
            json offsets = json::array();
            for (const auto& sub : r.crop_offsets) {
                json jo = json::array();
                for (const auto& [x, y] : sub) jo.push_back({x, y});
                offsets.push_back(jo);
            }
            manifest["crop_offsets"] = offsets;
            std::ofstream os(out / "ensemble_li.json", std::ios::binary);
            os << manifest.dump(2) << "\n";
            std::cout << "ensemble verdict: actor " << r.accused << "\n";
        }

        if (*ewu) {
            FeatureMatrix m = load_feature_dir(ewu_in);
            WuEnsembleConfig cfg;
            cfg.submodels = ewu_T;
            cfg.partitions = ewu_p;
            cfg.lof_k = ewu_k;
            cfg.measure = measure_from_flags(ewu_measure, 0.0);
            WuEnsembleResult r = ensemble_wu(sets_from_matrix(m), cfg, seed);

            fs::create_directories(out);
            write_ranking_csv(out / "ranking.csv", r.ranking);
            write_ranking_json(out / "ranking.json", r.ranking);
            json manifest{{"master_seed", seed},
                          {"submodels", ewu_T},
                          {"partitions", ewu_p},
                          {"lof_k", ewu_k},
                          {"sub_seeds", r.sub_seeds},
                          {"feature_indices", r.feature_indices},
                          {"sub_rankings", r.sub_rankings},
                          {"final_ranking", r.ranking.actor_ids}};
            std::ofstream os(out / "ensemble_wu.json", std::ios::binary);
            os << manifest.dump(2) << "\n";
            std::cout << "most suspicious: " << r.ranking.actor_ids.front() << "\n";
        }

        if (*pf) {
            ExperimentConfig cfg;
            if (!config_path.empty()) cfg = load_config(config_path);
            cfg.schema = schema_from_name(pf_schema);
            cfg.width = pf_width;
            cfg.height = pf_height;
            cfg.qf = pf_qf;
            cfg.projection.enabled = true;
            cfg.projection.method = projection_method_from_name(pf_method);
            cfg.projection.k = pf_k;
            cfg.projection.lambda = pf_lambda;
            cfg.projection.train_seed = seed;
            cfg.projection.train_sources = pf_sources;
            cfg.projection.train_covers = pf_covers;
            ProjectionBasis b = fit_projection(cfg);
            fs::create_directories(out);
            write_stpb(out / "basis.stpb", b);
            write_basis_csv(out / "basis.csv", b);
            json manifest{{"method", projection_method_name(b.method)},
                          {"input_dim", b.input_dim},
                          {"k", b.k},
                          {"lambda", b.lambda},
                          {"train_seed", seed},
                          {"train_sources", pf_sources},
                          {"train_covers", pf_covers},
                          {"schema", pf_schema}};
            std::ofstream os(out / "basis.json", std::ios::binary);
            os << manifest.dump(2) << "\n";
            std::cout << "fit " << pf_method << " basis (" << b.input_dim << " x " << b.k
                      << ") to " << (out / "basis.stpb") << "\n";
        }

        if (*pa) {
            ProjectionBasis b = read_stpb(pa_basis);
            FeatureMatrix m = normalize_columns(load_feature_dir(pa_in));
            FeatureMatrix projected = apply_projection(m, b);
            write_feature_dir(out, projected);
            std::cout << "projected to " << b.k << " dims in " << out << "\n";
        }

        if (*bench) {
            if (config_path.empty()) throw std::runtime_error("bench: --config required");
            ExperimentConfig cfg = load_config(config_path);
            if (app.count("--seed")) cfg.master_seed = seed;
            if (threads) cfg.threads = threads;
            Report rep = run_experiment(cfg);
            write_report(out, rep);
            double wall = 0.0;
            for (const auto& t : rep.trials) wall += t.wall_seconds;
            std::cerr << "total trial wall time: " << wall << " s\n";
            std::cout << "accuracy " << rep.accuracy << ", average rank " << rep.avg_rank
                      << "; report in " << out << "\n";
        }

        if (*sweep) {
            ExperimentConfig cfg;
            if (!config_path.empty()) cfg = load_config(config_path);
            if (app.count("--seed")) cfg.master_seed = seed;
            if (threads) cfg.threads = threads;
            std::vector<Strategy> strategies;
            for (const auto& s : sw_strategies) strategies.push_back(strategy_from_name(s));
            auto cells = strategy_sweep(cfg, strategies, sw_alphas);
            fs::create_directories(out);
            write_sweep_csv(out / "sweep.csv", cells);
            json manifest{{"master_seed", cfg.master_seed},
                          {"alphas", sw_alphas},
                          {"strategies", sw_strategies}};
            to_json(manifest["base_config"], cfg);
            std::ofstream os(out / "sweep.json", std::ios::binary);
            os << manifest.dump(2) << "\n";
            std::cout << "wrote " << (out / "sweep.csv") << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

#include "stegid/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace stegid {

PixelImage crop_random(const PixelImage& img, int crop_width, int crop_height, Rng& rng,
                       int* off_x, int* off_y) {
    if (crop_width > img.width || crop_height > img.height)
        throw std::invalid_argument("crop_random: crop larger than image");
    int ox = static_cast<int>(rng.uniform_int(0, img.width - crop_width));
    int oy = static_cast<int>(rng.uniform_int(0, img.height - crop_height));
    if (off_x) *off_x = ox;
    if (off_y) *off_y = oy;
    return crop(img, ox, oy, crop_width, crop_height);
}

double set_distance_avg(const VecList& a, const VecList& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("set_distance_avg: empty set");
    double s = 0.0;
    for (const auto& x : a)
        for (const auto& y : b) {
            double d2 = 0.0;
            for (size_t t = 0; t < x.size(); ++t) {
                double d = x[t] - y[t];
                d2 += d * d;
            }
            s += std::sqrt(d2);
        }
    return s / (static_cast<double>(a.size()) * static_cast<double>(b.size()));
}

int li_submodel(const std::vector<VecList>& actor_sets, const std::vector<int>& actor_ids) {
    const int n = static_cast<int>(actor_sets.size());
    if (n < 3) throw std::invalid_argument("li_submodel: need at least 3 actors");
    if (actor_ids.size() != actor_sets.size())
        throw std::invalid_argument("li_submodel: ids/sets size mismatch");

    std::vector<double> dist(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double d = set_distance_avg(actor_sets[static_cast<size_t>(i)],
                                        actor_sets[static_cast<size_t>(j)]);
            dist[static_cast<size_t>(i) * n + j] = d;
            dist[static_cast<size_t>(j) * n + i] = d;
        }

    // Seed cluster: the closest pair (positions are in ascending-id order,
    // so lexicographic scan implements the canonical tie rule).
    int si = 0, sj = 1;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dist[static_cast<size_t>(i) * n + j] < best) {
                best = dist[static_cast<size_t>(i) * n + j];
                si = i;
                sj = j;
            }

    std::vector<int> in_cluster{si, sj};
    std::vector<int> remaining;
    for (int i = 0; i < n; ++i)
        if (i != si && i != sj) remaining.push_back(i);

    while (remaining.size() > 1) {
        int best_pos = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (size_t r = 0; r < remaining.size(); ++r) {
            double s = 0.0;
            for (int m : in_cluster)
                s += dist[static_cast<size_t>(remaining[r]) * n + m];
            s /= static_cast<double>(in_cluster.size());
            if (s < best_d) {
                best_d = s;
                best_pos = static_cast<int>(r);
            }
        }
        in_cluster.push_back(remaining[static_cast<size_t>(best_pos)]);
        remaining.erase(remaining.begin() + best_pos);
    }
    return actor_ids[static_cast<size_t>(remaining.front())];
}

int majority_vote(const std::vector<int>& verdicts, Rng& rng) {
    if (verdicts.empty()) throw std::invalid_argument("majority_vote: no verdicts");
    std::map<int, int> tally;
    for (int v : verdicts) ++tally[v];
    int best = 0;
    for (const auto& [id, count] : tally) best = std::max(best, count);
    std::vector<int> tied;
    for (const auto& [id, count] : tally)
        if (count == best) tied.push_back(id);
    if (tied.size() == 1) return tied.front();
    return tied[static_cast<size_t>(rng.uniform_int(0, static_cast<int64_t>(tied.size()) - 1))];
}

std::vector<VecList> partition_points(const VecList& vectors, int p) {
    if (p < 1 || vectors.size() % static_cast<size_t>(p) != 0)
        throw std::invalid_argument("partition_points: m must be divisible by p");
    const size_t q = vectors.size() / static_cast<size_t>(p);
    std::vector<VecList> parts;
    parts.reserve(static_cast<size_t>(p));
    for (int j = 0; j < p; ++j)
        parts.emplace_back(vectors.begin() + static_cast<ptrdiff_t>(j * q),
                           vectors.begin() + static_cast<ptrdiff_t>((j + 1) * q));
    return parts;
}

std::vector<double> fusion_score(const std::vector<RankedPoint>& sorted_points, int p,
                                 const std::vector<int>& actor_ids) {
    const size_t pn = sorted_points.size();
    for (size_t j = 1; j < pn; ++j)
        if (sorted_points[j - 1].score < sorted_points[j].score)
            throw std::invalid_argument("fusion_score: points not sorted by descending score");
    std::map<int, double> s;
    for (int id : actor_ids) s[id] = 0.0;
    for (size_t j = 0; j < pn; ++j) {
        auto it = s.find(sorted_points[j].actor_id);
        if (it == s.end()) throw std::invalid_argument("fusion_score: unknown actor in triple");
        it->second += static_cast<double>(pn - j) / static_cast<double>(p);
    }
    std::vector<double> out;
    out.reserve(actor_ids.size());
    for (int id : actor_ids) out.push_back(s[id]);
    return out;
}

std::vector<double> rank_fusion(const std::vector<std::vector<int>>& rankings,
                                const std::vector<int>& actor_ids) {
    if (rankings.empty()) throw std::invalid_argument("rank_fusion: no rankings");
    const size_t n = actor_ids.size();
    std::map<int, double> s;
    for (int id : actor_ids) s[id] = 0.0;
    for (const auto& r : rankings) {
        if (r.size() != n) throw std::invalid_argument("rank_fusion: ranking is not a permutation");
        std::map<int, int> pos;
        for (size_t k = 0; k < n; ++k)
            if (!pos.emplace(r[k], static_cast<int>(k) + 1).second)
                throw std::invalid_argument("rank_fusion: duplicate actor in ranking");
        for (int id : actor_ids) {
            auto it = pos.find(id);
            if (it == pos.end())
                throw std::invalid_argument("rank_fusion: ranking is not a permutation");
            s[id] += static_cast<double>(n + 1 - static_cast<size_t>(it->second)) /
                     static_cast<double>(rankings.size());
        }
    }
    std::vector<double> out;
    out.reserve(n);
    for (int id : actor_ids) out.push_back(s[id]);
    return out;
}

std::vector<int> feature_subsample(int feature_dim, Rng& rng) {
    if (feature_dim < 2) throw std::invalid_argument("feature_subsample: need H >= 2");
    int lo = (feature_dim + 1) / 2;  // ceil(H/2)
    int d = static_cast<int>(rng.uniform_int(lo, feature_dim - 1));
    auto idx = rng.sample_without_replacement(feature_dim, d);
    std::sort(idx.begin(), idx.end());
    return idx;
}

LiEnsembleResult ensemble_li(const std::vector<std::vector<CoefArray>>& actor_images,
                             const std::vector<int>& actor_ids, const LiEnsembleConfig& cfg,
                             uint64_t seed) {
    if (actor_images.size() < 3) throw std::invalid_argument("ensemble_li: need at least 3 actors");
    if (actor_images.size() != actor_ids.size())
        throw std::invalid_argument("ensemble_li: ids/images size mismatch");
    if (cfg.submodels < 1) throw std::invalid_argument("ensemble_li: need T >= 1");
    if (cfg.crop_width < 24 || cfg.crop_height < 24 || cfg.crop_width % 8 != 0 ||
        cfg.crop_height % 8 != 0)
        throw std::invalid_argument("ensemble_li: crop dims must be multiples of 8, >= 24");

    LiEnsembleResult out;
    for (int t = 0; t < cfg.submodels; ++t) {
        uint64_t sub_seed = derive_seed(seed, stream::kSubModel, static_cast<uint64_t>(t));
        out.sub_seeds.push_back(sub_seed);

        std::vector<FeatureSet> sets;
        std::vector<std::pair<int, int>> offsets;
        int image_counter = 0;
        for (size_t a = 0; a < actor_images.size(); ++a) {
            FeatureSet fs;
            fs.actor_id = actor_ids[a];
            for (const CoefArray& c : actor_images[a]) {
                Rng crop_rng(derive_seed(sub_seed, stream::kCrop,
                                         static_cast<uint64_t>(image_counter++)));
                int ox = 0, oy = 0;
                PixelImage cropped =
                    crop_random(decompress(c), cfg.crop_width, cfg.crop_height, crop_rng, &ox, &oy);
                offsets.emplace_back(ox, oy);
                fs.vectors.push_back(li250(compress(cropped, c.table)));
            }
            sets.push_back(std::move(fs));
        }
        out.crop_offsets.push_back(std::move(offsets));

        // Normalization is per sub-model, over the cropped feature matrix.
        FeatureMatrix m = normalize_columns(stack_sets(sets));
        std::vector<int> ids;
        auto grouped = group_rows_by_actor(m, ids);
        out.sub_verdicts.push_back(li_submodel(grouped, ids));
    }

    Rng vote_rng(derive_seed(seed, stream::kDetector));
    out.accused = majority_vote(out.sub_verdicts, vote_rng);
    return out;
}

WuEnsembleResult ensemble_wu(const std::vector<FeatureSet>& sets, const WuEnsembleConfig& cfg,
                             uint64_t seed) {
    if (cfg.submodels < 1) throw std::invalid_argument("ensemble_wu: need T >= 1");
    const size_t m = sets.empty() ? 0 : sets.front().vectors.size();
    for (const auto& s : sets)
        if (s.vectors.size() != m)
            throw std::invalid_argument("ensemble_wu: sets must share vector count");

    // Preprocess once over the full feature space; sub-models select columns
    // of the normalized matrix.
    FeatureMatrix norm = normalize_columns(stack_sets(sets));
    std::vector<int> ids;
    auto grouped = group_rows_by_actor(norm, ids);
    const int n = static_cast<int>(grouped.size());
    const int pn = n * cfg.partitions;
    if (pn <= cfg.lof_k + 1)
        throw std::invalid_argument("ensemble_wu: need p*n > lof_k + 1 points");

    WuEnsembleResult out;
    std::vector<std::vector<int>> rankings;
    for (int t = 0; t < cfg.submodels; ++t) {
        uint64_t sub_seed = derive_seed(seed, stream::kSubModel, static_cast<uint64_t>(t));
        out.sub_seeds.push_back(sub_seed);
        Rng sub_rng(sub_seed);

        std::vector<int> cols;
        if (cfg.full_features) {
            cols.resize(static_cast<size_t>(norm.cols));
            std::iota(cols.begin(), cols.end(), 0);
        } else {
            cols = feature_subsample(norm.cols, sub_rng);
        }
        out.feature_indices.push_back(cols);

        // p*n points: per-actor contiguous partitions restricted to cols.
        std::vector<VecList> points;
        std::vector<int> point_actor, point_index;
        for (int a = 0; a < n; ++a) {
            VecList restricted;
            restricted.reserve(grouped[static_cast<size_t>(a)].size());
            for (const auto& v : grouped[static_cast<size_t>(a)]) {
                std::vector<double> rv;
                rv.reserve(cols.size());
                for (int c : cols) rv.push_back(v[static_cast<size_t>(c)]);
                restricted.push_back(std::move(rv));
            }
            auto parts = partition_points(restricted, cfg.partitions);
            for (size_t j = 0; j < parts.size(); ++j) {
                points.push_back(std::move(parts[j]));
                point_actor.push_back(ids[static_cast<size_t>(a)]);
                point_index.push_back(static_cast<int>(j) + 1);
            }
        }

        std::vector<int> point_pos(points.size());
        std::iota(point_pos.begin(), point_pos.end(), 0);
        DistanceMatrix d = actor_distance_matrix(points, point_pos, cfg.measure, sub_seed);
        std::vector<double> scores = lof_scores(d, cfg.lof_k);

        std::vector<RankedPoint> ranked(points.size());
        for (size_t i = 0; i < points.size(); ++i)
            ranked[i] = {scores[i], point_actor[i], point_index[i]};
        std::sort(ranked.begin(), ranked.end(), [](const RankedPoint& a, const RankedPoint& b) {
            if (a.score != b.score) return a.score > b.score;
            if (a.actor_id != b.actor_id) return a.actor_id < b.actor_id;
            return a.point_index < b.point_index;
        });

        std::vector<double> actor_scores = fusion_score(ranked, cfg.partitions, ids);
        SuspicionRanking r = rank_by_scores(ids, actor_scores);
        rankings.push_back(r.actor_ids);
        out.sub_rankings.push_back(r.actor_ids);
    }

    std::vector<double> fused = rank_fusion(rankings, ids);
    out.ranking = rank_by_scores(ids, fused);
    return out;
}

}  // namespace stegid

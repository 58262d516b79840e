#include "stegid/cluster.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace stegid {

const char* linkage_name(Linkage l) {
    switch (l) {
        case Linkage::Single: return "single";
        case Linkage::Complete: return "complete";
        case Linkage::Centroid: return "centroid";
        case Linkage::Average: return "average";
    }
    return "?";
}

Linkage linkage_from_name(const std::string& name) {
    if (name == "single") return Linkage::Single;
    if (name == "complete") return Linkage::Complete;
    if (name == "centroid") return Linkage::Centroid;
    if (name == "average") return Linkage::Average;
    throw std::invalid_argument("unknown linkage: " + name);
}

namespace {

// Linkage distance between clusters given as member position lists, from
// the original pairwise point distances.
double linkage_distance(const DistanceMatrix& d, const std::vector<int>& x,
                        const std::vector<int>& y, Linkage link, bool conventional_average) {
    switch (link) {
        case Linkage::Single: {
            double best = std::numeric_limits<double>::infinity();
            for (int a : x)
                for (int b : y) best = std::min(best, d.at(a, b));
            return best;
        }
        case Linkage::Complete: {
            double best = -std::numeric_limits<double>::infinity();
            for (int a : x)
                for (int b : y) best = std::max(best, d.at(a, b));
            return best;
        }
        case Linkage::Centroid: {
            double s = 0.0;
            for (int a : x)
                for (int b : y) s += d.at(a, b);
            return s / (static_cast<double>(x.size()) * static_cast<double>(y.size()));
        }
        case Linkage::Average: {
            if (conventional_average) {
                double s = 0.0;
                for (int a : x)
                    for (int b : y) s += d.at(a, b);
                return s / (static_cast<double>(x.size()) * static_cast<double>(y.size()));
            }
            // Literal form: mean over all ordered pairs u != v within X u Y,
            // intra-cluster pairs included.
            std::vector<int> u(x);
            u.insert(u.end(), y.begin(), y.end());
            double s = 0.0;
            for (int a : u)
                for (int b : u)
                    if (a != b) s += d.at(a, b);
            double m = static_cast<double>(u.size());
            return s / (m * m - m);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

Dendrogram agglomerate(const DistanceMatrix& d, Linkage link, bool conventional_average) {
    const int n = d.n;
    if (n < 2) throw std::invalid_argument("agglomerate: need at least 2 points");

    // Active clusters as member-position lists, kept sorted by smallest
    // member so pair iteration order matches the tie rule.
    std::vector<std::vector<int>> active;
    for (int i = 0; i < n; ++i) active.push_back({i});

    Dendrogram out;
    out.n = n;

    auto ids_of = [&](const std::vector<int>& positions) {
        std::vector<int> ids;
        ids.reserve(positions.size());
        for (int p : positions) ids.push_back(d.actor_ids[static_cast<size_t>(p)]);
        std::sort(ids.begin(), ids.end());
        return ids;
    };

    while (active.size() > 1) {
        size_t best_i = 0, best_j = 1;
        double best = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < active.size(); ++i)
            for (size_t j = i + 1; j < active.size(); ++j) {
                double dist = linkage_distance(d, active[i], active[j], link, conventional_average);
                if (dist < best) {
                    best = dist;
                    best_i = i;
                    best_j = j;
                }
            }
        Merge m;
        m.a = ids_of(active[best_i]);
        m.b = ids_of(active[best_j]);
        m.height = best;
        out.merges.push_back(std::move(m));

        std::vector<int> merged(active[best_i]);
        merged.insert(merged.end(), active[best_j].begin(), active[best_j].end());
        std::sort(merged.begin(), merged.end());
        active.erase(active.begin() + static_cast<ptrdiff_t>(best_j));
        active.erase(active.begin() + static_cast<ptrdiff_t>(best_i));
        // Keep the active list ordered by smallest member.
        auto pos = std::lower_bound(active.begin(), active.end(), merged,
                                    [](const std::vector<int>& a, const std::vector<int>& b) {
                                        return a.front() < b.front();
                                    });
        active.insert(pos, std::move(merged));
    }
    return out;
}

std::pair<std::vector<int>, std::vector<int>> final_two_clusters(const Dendrogram& t) {
    if (t.merges.empty()) throw std::invalid_argument("final_two_clusters: empty dendrogram");
    const Merge& last = t.merges.back();
    std::vector<int> a = last.a, b = last.b;
    bool a_first = a.size() < b.size() ||
                   (a.size() == b.size() && a.front() < b.front());
    if (!a_first) std::swap(a, b);
    return {a, b};
}

Accusation accuse(const std::vector<int>& c1, const std::vector<int>& c2, int k, Rng& rng) {
    if (k < 1 || static_cast<size_t>(k) > c1.size() + c2.size())
        throw std::invalid_argument("accuse: k out of range");

    Accusation out;
    out.c1_size = c1.size();
    out.c2_size = c2.size();

    auto pick = [&](const std::vector<int>& pool, int count) {
        auto idx = rng.sample_without_replacement(static_cast<int>(pool.size()), count);
        std::vector<int> chosen;
        chosen.reserve(static_cast<size_t>(count));
        for (int i : idx) chosen.push_back(pool[static_cast<size_t>(i)]);
        return chosen;
    };

    if (static_cast<size_t>(k) <= c1.size()) {
        out.accused = pick(c1, k);
    } else {
        out.accused = c1;
        auto extra = pick(c2, k - static_cast<int>(c1.size()));
        out.accused.insert(out.accused.end(), extra.begin(), extra.end());
    }

    // Suspicion order: accused in pick order, rest of C1, then C2.
    out.ranking = out.accused;
    auto append_rest = [&](const std::vector<int>& pool) {
        for (int id : pool)
            if (std::find(out.ranking.begin(), out.ranking.end(), id) == out.ranking.end())
                out.ranking.push_back(id);
    };
    append_rest(c1);
    append_rest(c2);
    return out;
}

Accusation identify_clustering(const std::vector<FeatureSet>& sets, Linkage linkage,
                               const MeasureSpec& measure, int k, uint64_t seed,
                               bool conventional_average) {
    if (sets.size() < 3) throw std::invalid_argument("identify_clustering: need at least 3 actors");
    FeatureMatrix m = normalize_columns(stack_sets(sets));
    std::vector<int> ids;
    auto grouped = group_rows_by_actor(m, ids);
    DistanceMatrix d = actor_distance_matrix(grouped, ids, measure, seed);
    Dendrogram t = agglomerate(d, linkage, conventional_average);
    auto [c1, c2] = final_two_clusters(t);
    Rng rng(derive_seed(seed, stream::kDetector));
    return accuse(c1, c2, k, rng);
}

}  // namespace stegid

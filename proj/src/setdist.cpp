#include "stegid/setdist.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace stegid {

int schema_id_of(Schema s) { return s == Schema::Pev274 ? 1 : 2; }

FeatureMatrix stack_sets(const std::vector<FeatureSet>& sets) {
    if (sets.empty()) throw std::invalid_argument("stack_sets: no sets");
    std::map<int, const FeatureSet*> by_id;
    for (const auto& s : sets) {
        if (s.vectors.empty()) throw std::invalid_argument("stack_sets: empty feature set");
        if (!by_id.emplace(s.actor_id, &s).second)
            throw std::invalid_argument("stack_sets: duplicate actor id");
    }
    const Schema schema = sets.front().vectors.front().schema;
    const int dim = schema_dim(schema);

    FeatureMatrix m;
    m.cols = dim;
    m.schema_id = schema_id_of(schema);
    for (const auto& [id, set] : by_id) {
        for (const auto& v : set->vectors) {
            if (v.schema != schema || static_cast<int>(v.values.size()) != dim)
                throw std::invalid_argument("stack_sets: mixed schema or bad length");
            m.data.insert(m.data.end(), v.values.begin(), v.values.end());
            m.row_actor.push_back(id);
            ++m.rows;
        }
    }
    return m;
}

FeatureMatrix normalize_columns(const FeatureMatrix& in) {
    if (in.rows < 2) throw std::invalid_argument("normalize_columns: need at least 2 rows");
    FeatureMatrix out = in;
    const double n = static_cast<double>(in.rows);
    for (int c = 0; c < in.cols; ++c) {
        double sum = 0.0, sumsq = 0.0;
        for (int r = 0; r < in.rows; ++r) {
            double v = in.at(r, c);
            sum += v;
            sumsq += v * v;
        }
        double mean = sum / n;
        double var = sumsq / n - mean * mean;
        if (var > 0.0) {
            double inv_sd = 1.0 / std::sqrt(var);
            for (int r = 0; r < in.rows; ++r) out.at(r, c) = (in.at(r, c) - mean) * inv_sd;
        } else {
            // Constant column: no discriminative signal, map to zero.
            for (int r = 0; r < in.rows; ++r) out.at(r, c) = 0.0;
        }
    }
    return out;
}

std::vector<VecList> group_rows_by_actor(const FeatureMatrix& m, std::vector<int>& actor_ids) {
    std::map<int, VecList> grouped;
    for (int r = 0; r < m.rows; ++r) grouped[m.row_actor[static_cast<size_t>(r)]].push_back(m.row(r));
    std::vector<VecList> sets;
    actor_ids.clear();
    for (auto& [id, vl] : grouped) {
        actor_ids.push_back(id);
        sets.push_back(std::move(vl));
    }
    return sets;
}

double kernel_eval(const KernelSpec& k, const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("kernel_eval: dimension mismatch");
    if (k.kind == KernelSpec::Kind::Linear) {
        double s = 0.0;
        for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
        return s;
    }
    double d2 = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        double d = x[i] - y[i];
        d2 += d * d;
    }
    return std::exp(-k.gamma * d2);
}

double mmd_unbiased(const VecList& x_in, const VecList& y_in, const KernelSpec& k, Rng& rng) {
    if (x_in.size() < 2 || y_in.size() < 2)
        throw std::invalid_argument("mmd_unbiased: sets must have at least 2 vectors");

    VecList x = x_in;
    VecList y = y_in;
    if (x.size() != y.size()) {
        const bool x_larger = x.size() > y.size();
        VecList& big = x_larger ? x : y;
        const size_t keep = x_larger ? y.size() : x.size();
        auto idx = rng.sample_without_replacement(static_cast<int>(big.size()), static_cast<int>(keep));
        VecList truncated;
        truncated.reserve(keep);
        for (int i : idx) truncated.push_back(std::move(big[static_cast<size_t>(i)]));
        big = std::move(truncated);
    }
    // The h-statistic couples positions i across the two sets (the diagonal
    // cross terms are excluded), so the raw formula depends on the order the
    // vectors arrive in. Canonicalizing both sets makes the estimate a
    // function of the set pair: identical sets give exactly zero and
    // within-set permutations cannot change the value.
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    const size_t m = x.size();

    double s = 0.0;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            s += kernel_eval(k, x[i], x[j]) + kernel_eval(k, y[i], y[j]) -
                 kernel_eval(k, x[i], y[j]) - kernel_eval(k, x[j], y[i]);
        }
    s /= static_cast<double>(m) * m - static_cast<double>(m);
    // The unbiased estimator can be negative; preserve the sign through the
    // square root so rankings stay meaningful.
    return s >= 0.0 ? std::sqrt(s) : -std::sqrt(-s);
}

double median_gamma(const VecList& vectors) {
    if (vectors.size() < 2) throw std::invalid_argument("median_gamma: need at least 2 vectors");
    std::vector<double> dists;
    dists.reserve(vectors.size() * (vectors.size() - 1) / 2);
    for (size_t i = 0; i < vectors.size(); ++i)
        for (size_t j = i + 1; j < vectors.size(); ++j) {
            double d2 = 0.0;
            for (size_t t = 0; t < vectors[i].size(); ++t) {
                double d = vectors[i][t] - vectors[j][t];
                d2 += d * d;
            }
            dists.push_back(std::sqrt(d2));
        }
    std::sort(dists.begin(), dists.end());
    size_t n = dists.size();
    double eta = (n % 2 == 1) ? dists[n / 2] : 0.5 * (dists[n / 2 - 1] + dists[n / 2]);
    if (eta <= 0.0) throw std::invalid_argument("median_gamma: all vectors identical");
    return 1.0 / (eta * eta);
}

double mean_embedding_distance(const VecList& x, const VecList& y) {
    if (x.empty() || y.empty()) throw std::invalid_argument("mean_embedding_distance: empty set");
    const size_t dim = x.front().size();
    double d2 = 0.0;
    for (size_t t = 0; t < dim; ++t) {
        double mx = 0.0, my = 0.0;
        for (const auto& v : x) mx += v[t];
        for (const auto& v : y) my += v[t];
        double d = mx / static_cast<double>(x.size()) - my / static_cast<double>(y.size());
        d2 += d * d;
    }
    return std::sqrt(d2);
}

const char* measure_name(SetMeasure m) {
    switch (m) {
        case SetMeasure::LinearMmd: return "linear-mmd";
        case SetMeasure::GaussianMmd: return "gaussian-mmd";
        case SetMeasure::MeanEmbedding: return "mean-embedding";
    }
    return "?";
}

SetMeasure measure_from_name(const std::string& name) {
    if (name == "linear-mmd") return SetMeasure::LinearMmd;
    if (name == "gaussian-mmd") return SetMeasure::GaussianMmd;
    if (name == "mean-embedding") return SetMeasure::MeanEmbedding;
    throw std::invalid_argument("unknown set measure: " + name);
}

double set_distance(const VecList& x, const VecList& y, const MeasureSpec& m, Rng& rng) {
    if (m.kind == SetMeasure::MeanEmbedding) return mean_embedding_distance(x, y);
    if (x.size() < 2 || y.size() < 2) return mean_embedding_distance(x, y);  // Euclidean fallback
    KernelSpec k;
    if (m.kind == SetMeasure::LinearMmd) {
        k.kind = KernelSpec::Kind::Linear;
    } else {
        k.kind = KernelSpec::Kind::Gaussian;
        k.gamma = m.gamma;
    }
    return mmd_unbiased(x, y, k, rng);
}

DistanceMatrix actor_distance_matrix(const std::vector<VecList>& sets,
                                     const std::vector<int>& actor_ids, const MeasureSpec& m_in,
                                     uint64_t seed) {
    if (sets.size() != actor_ids.size())
        throw std::invalid_argument("actor_distance_matrix: ids/sets size mismatch");
    const int n = static_cast<int>(sets.size());

    MeasureSpec m = m_in;
    if (m.kind == SetMeasure::GaussianMmd && m.gamma <= 0.0) {
        VecList all;
        for (const auto& s : sets) all.insert(all.end(), s.begin(), s.end());
        m.gamma = median_gamma(all);
    }

    DistanceMatrix out;
    out.n = n;
    out.actor_ids = actor_ids;
    out.d.assign(static_cast<size_t>(n) * n, 0.0);
    out.measure_tag = measure_name(m.kind);
    if (m.kind == SetMeasure::GaussianMmd)
        out.measure_tag += " gamma=" + std::to_string(m.gamma);

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rng pair_rng(derive_seed(seed, stream::kTruncate,
                                     static_cast<uint64_t>(i) * static_cast<uint64_t>(n) + j));
            double d = set_distance(sets[static_cast<size_t>(i)], sets[static_cast<size_t>(j)], m,
                                    pair_rng);
            out.at(i, j) = d;
            out.at(j, i) = d;
        }
    return out;
}

DistanceMatrix euclidean_distance_matrix(const VecList& points) {
    const int n = static_cast<int>(points.size());
    DistanceMatrix out;
    out.n = n;
    out.measure_tag = "euclidean";
    out.actor_ids.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out.actor_ids[static_cast<size_t>(i)] = i;
    out.d.assign(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double d2 = 0.0;
            for (size_t t = 0; t < points[static_cast<size_t>(i)].size(); ++t) {
                double d = points[static_cast<size_t>(i)][t] - points[static_cast<size_t>(j)][t];
                d2 += d * d;
            }
            out.at(i, j) = out.at(j, i) = std::sqrt(d2);
        }
    return out;
}

}  // namespace stegid

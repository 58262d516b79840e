#pragma once
// Experiment harness: seeded multi-actor trials, the detector pipelines,
// and average-rank / accuracy / confusion-matrix reporting.
//
// Seeds split hierarchically master -> trial -> (source, image, embed,
// detector) so any stage can be re-run in isolation and every pipeline is
// byte-reproducible from (config, master seed).

#include "stegid/cluster.hpp"
#include "stegid/embed.hpp"
#include "stegid/ensemble.hpp"
#include "stegid/outlier.hpp"
#include "stegid/project.hpp"
#include "stegid/synth.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace stegid {

enum class DetectorKind { Cluster, Lof, LiEnsemble, WuEnsemble };

const char* detector_kind_name(DetectorKind k);
DetectorKind detector_kind_from_name(const std::string& name);

enum class EmbedMode { Proportion, Strategy };

struct DetectorSpec {
    DetectorKind kind = DetectorKind::Cluster;
    Linkage linkage = Linkage::Single;
    MeasureSpec measure{};
    int lof_k = 10;
    LiEnsembleConfig li{};
    WuEnsembleConfig wu{};
};

struct ProjectionSpec {
    bool enabled = false;
    ProjectionMethod method = ProjectionMethod::Cls;
    int k = 50;
    double lambda = 0.0;  // 0 = relative default from the training data
    uint64_t train_seed = 42;
    int train_sources = 6;
    int train_covers = 120;
};

struct ExperimentConfig {
    int actors = 20;
    int images = 50;
    int width = 64;
    int height = 64;
    int qf = 80;
    int guilty_count = 1;
    double alpha = 0.3;       // payload in bits per nonzero AC coefficient
    double proportion = 0.3;  // share of the guilty actor's images (proportion mode)
    EmbedMode mode = EmbedMode::Proportion;
    Strategy strategy = Strategy::Even;  // strategy mode: alpha applies to total capacity
    bool worst_case_rate = false;
    Schema schema = Schema::Pev274;
    DetectorSpec detector{};
    ProjectionSpec projection{};
    int trials = 50;
    uint64_t master_seed = 1;
    int threads = 0;  // 0 = hardware concurrency
};

void to_json(nlohmann::json& j, const ExperimentConfig& cfg);
void from_json(const nlohmann::json& j, ExperimentConfig& cfg);

struct TrialResult {
    uint64_t seed = 0;
    std::vector<int> guilty;        // planted guilty actor ids, ascending
    std::vector<int> ranking;       // all actors, most suspicious first
    std::vector<int> accused;       // top guilty_count verdicts
    std::vector<int> guilty_ranks;  // 1-based rank of each guilty actor
    double wall_seconds = 0.0;      // never serialized (reports stay byte-identical)
};

struct Report {
    ExperimentConfig config;
    std::vector<TrialResult> trials;
    double avg_rank = 0.0;  // single-guilty configs
    double accuracy = 0.0;  // correct identifications / trials
    std::vector<std::vector<int>> confusion;  // guilty x identified (single-guilty)
};

// Synthesize and compress the trial's covers (one source per actor).
std::vector<std::vector<CoefArray>> gen_actor_covers(const ExperimentConfig& cfg,
                                                     uint64_t trial_seed);

// One seeded trial end to end: covers, guilty pick, embedding per the
// config's mode, feature extraction, optional projection, detector.
TrialResult run_trial(const ExperimentConfig& cfg, uint64_t trial_seed,
                      const ProjectionBasis* basis = nullptr);

// Trials in parallel (slot-indexed, thread-count independent), then a
// deterministic ordered reduce.
Report run_experiment(const ExperimentConfig& cfg);

// Mean guilty rank over single-guilty results; mixed configs are rejected.
double average_rank(const std::vector<TrialResult>& results);

// rows = planted guilty actor, cols = identified actor.
std::vector<std::vector<int>> confusion_matrix(const std::vector<TrialResult>& results, int n);

// Stego/cover training pairs from held-out synthetic sources embedded at a
// grid of payload rates; Y = realized change rate.
TrainingData make_training_data(const ExperimentConfig& cfg, uint64_t train_seed, int sources,
                                int covers);

ProjectionBasis fit_projection(const ExperimentConfig& cfg);

struct SweepCell {
    Strategy strategy;
    double alpha = 0.0;
    double mean_rank = 0.0;
    double stderr_rank = 0.0;
};

// Grid over strategies x payload levels. Trials at one payload level share
// seeds across strategies (paired design), so ordering comparisons are not
// washed out by cover variation.
std::vector<SweepCell> strategy_sweep(const ExperimentConfig& base,
                                      const std::vector<Strategy>& strategies,
                                      const std::vector<double>& alphas);

nlohmann::json report_to_json(const Report& rep);
void write_report(const std::filesystem::path& dir, const Report& rep);
void write_sweep_csv(const std::filesystem::path& path, const std::vector<SweepCell>& cells);

}  // namespace stegid

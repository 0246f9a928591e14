#pragma once

#include "toc/datasets.hpp"
#include "toc/detection.hpp"
#include "toc/trainer.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace toc::exp {

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Key-value experiment description. Parsed from `key = value` lines with
// `#` comments; unknown keys are hard errors so hyperparameter typos cannot
// pass silently.
struct ExperimentConfig {
    std::string data_root = "data";
    std::string output_dir = "runs/out";

    std::size_t train_examples = 2048; // per environment
    std::size_t test_examples = 4096;
    std::size_t ood_examples = 2048;
    double bias_train1 = 0.9;
    double bias_train2 = 0.8;
    double bias_test = 0.1;
    double label_noise = 0.25;

    std::vector<std::string> methods;
    int epochs = 12;
    std::size_t batch_size = 128;
    double learning_rate = 1e-3;
    double beta = 1e-3;
    double lambda = 1e4;
    double margin = 0.2;
    int noise_samples = 5;
    int latent_dim = 8;
    double p_max = 1.0;
    double train_psnr_db = 10.0;
    double lambda_warmup = 0.1;

    std::vector<int> latent_dims = {2, 4, 8, 16, 32, 64, 96};
    std::vector<double> test_psnr_db_list = {-5, 0, 5, 10, 15, 20, 25};
    std::vector<double> train_psnr_db_list = {10};
    int eval_repeats = 5;
    double target_tpr = 0.95;
    std::uint64_t seed = 1;

    static ExperimentConfig from_file(const std::string& path);
    static ExperimentConfig from_text(const std::string& text);
    void validate() const;

    // Canonical one-line-per-key rendering; hashing it identifies the config.
    std::string canonical_text() const;
    std::uint64_t config_hash() const;
};

// Method-name registry mapping the CLI/config names onto objectives.
obj::ObjectiveKind method_kind(const std::string& name);
bool method_has_detector(const std::string& name);

// `TOC_DATA_ROOT`, when set, overrides the configured data root.
std::string resolve_data_root(const std::string& configured);

// Writes the surrogate digit/fashion IDX files under root (skips existing).
void make_data(const std::string& root, std::size_t n_digits, std::size_t n_fashion,
               std::uint64_t seed);

struct DataBundle {
    std::vector<std::vector<data::LabeledExample>> train_envs;
    std::vector<data::LabeledExample> test_env;
    std::vector<data::LabeledExample> ood;
};

// Loads the IDX files (generating surrogates on first use) and constructs
// the biased environments and the semantic-shift set.
DataBundle load_data(const ExperimentConfig& cfg);

// Runners; each returns the run directory it wrote.
std::string run(const ExperimentConfig& cfg);
std::string sweep_rd(const ExperimentConfig& cfg);
std::string sweep_psnr(const ExperimentConfig& cfg);

// Renders SVG figures for whichever sweep CSVs exist in run_dir.
void emit_plot_data(const std::string& run_dir);

// Scores an IDX image file against the detector stored in run_dir; writes
// scores.csv (sample_id, score, verdict) into run_dir and returns the
// fraction flagged as semantic shift.
double detect_file(const std::string& run_dir, const std::string& ood_image_path,
                   const std::string& method);

} // namespace toc::exp

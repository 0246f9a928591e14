#pragma once

#include "toc/channel.hpp"
#include "toc/datasets.hpp"
#include "toc/objectives.hpp"

#include <functional>
#include <map>
#include <vector>

namespace toc::train {

using nn::Mat;
using nn::Vec;

struct TrainConfig {
    obj::ObjectiveKind kind = obj::ObjectiveKind::combined;
    int epochs = 15;
    std::size_t batch_size = 256;
    double lr = 1e-3;
    obj::LossWeights weights;
    ChannelConfig channel;
    int latent_dim = 8;
    int num_classes = 2;
    // lambda is held at 0 for the first warmup fraction of epochs; a cold
    // start at 1e5-scale penalties stalls optimization.
    double lambda_warmup = 0.1;
    // per-epoch probe accuracy is computed on at most this many examples
    std::size_t probe_examples = 1024;
    // when nonempty, the returned model is the epoch snapshot with the best
    // accuracy on this set (validation-based model selection) instead of the
    // last epoch
    std::vector<data::LabeledExample> validation;
    std::uint64_t seed = 1;

    void validate(std::size_t num_domains) const;
};

struct Model {
    nn::EncoderConfig cfg;
    nn::Encoder encoder;
    nn::ClassifierParams classifier;
    obj::ClassPriorMap priors; // label-conditional received-latent priors
};

struct EpochRecord {
    int epoch = 0;                 // 1-based
    obj::LossBreakdown mean_loss;  // averaged over optimizer steps
    double lambda_effective = 0.0;
    double train_accuracy = 0.0;   // probe-subset accuracy, 1 noise draw
    double validation_accuracy = 0.0; // 0 when no validation set is given
    bool prior_refresh_warning = false;
    double wall_seconds = 0.0;
};

struct TrainResult {
    Model model;
    std::vector<EpochRecord> records;
    int best_epoch = 0; // 1-based epoch the model came from; 0 = last
};

// First-order adaptive-moment optimizer state over a flat parameter vector.
struct AdamState {
    Vec m, v;
    int t = 0;
    double beta1 = 0.9, beta2 = 0.999, eps = 1e-8;

    explicit AdamState(Eigen::Index n) : m(Vec::Zero(n)), v(Vec::Zero(n)) {}
    void update(Vec& theta, const Vec& grad, double lr);
};

// Label-conditional moments of the received latents from one epoch. Classes
// listed in `previous` but absent from `latents_by_class` keep their prior
// and set *warning.
obj::ClassPriorMap update_class_priors(const std::map<int, std::vector<Vec>>& latents_by_class,
                                       const obj::ClassPriorMap& previous,
                                       bool* warning = nullptr);

// Epoch/domain/batch training loop. One batch per domain per step, L channel
// noise draws per datapoint, priors refreshed at epoch boundaries from the
// previous epoch's received latents (standard normal in epoch 1).
// Deterministic given (config, data, seed).
TrainResult train(const std::vector<std::vector<data::LabeledExample>>& envs,
                  const TrainConfig& cfg);

using Predictor = std::function<int(const data::LabeledExample&)>;

// Transmits the posterior mean plus channel noise `repeats` times and takes
// the modal class vote (ties resolved toward the smaller label).
Predictor model_predictor(const Model& model, const ChannelConfig& channel, int repeats,
                          std::uint64_t seed);

// Reads the pre-noise label; the accuracy bound of a perfect classifier on
// noisy labels.
Predictor label_oracle_predictor();

double evaluate_accuracy(const std::vector<data::LabeledExample>& dataset, const Predictor& f);

} // namespace toc::train

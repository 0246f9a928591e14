#pragma once

#include "toc/channel.hpp"
#include "toc/nn.hpp"

#include <map>
#include <optional>
#include <random>
#include <vector>

namespace toc::obj {

using nn::Mat;
using nn::Vec;

struct LossWeights {
    double beta = 1e-3;    // rate multiplier
    double lambda = 0.0;   // invariance multiplier
    double margin = 0.2;   // triplet margin alpha
    int noise_samples = 5; // L channel-noise draws per datapoint

    void validate() const;
};

// Label-conditional latent prior r(z_hat | y = c), ridge-regularized.
class ClassPrior {
public:
    // Moment constructor: ridge epsilon = ridge_scale * mean(diag(cov))
    // (falls back to ridge_scale itself when the scatter is zero).
    static ClassPrior from_moments(const Vec& mean, const Mat& cov, double ridge_scale = 1e-4);
    static ClassPrior standard_normal(int dim);

    const Vec& mean() const { return mean_; }
    const Mat& cov() const { return cov_; }
    double epsilon() const { return epsilon_; }
    const Mat& cov_inverse() const { return cov_inv_; }
    double log_det_cov() const { return log_det_; }
    bool is_standard() const { return standard_; }
    double log_density(const Vec& z) const;

private:
    ClassPrior() = default;
    Vec mean_;
    Mat cov_;
    Mat cov_inv_;
    double log_det_ = 0.0;
    double epsilon_ = 0.0;
    bool standard_ = false;
};

using ClassPriorMap = std::map<int, ClassPrior>;

// KL( N(m, diag(v)) || N(0, I) ) = 1/2 sum_i (m_i^2 + v_i - 1 - ln v_i).
double kl_diag_to_std_normal(const Vec& var, const Vec& mean);
void kl_diag_to_std_normal_grad(const Vec& var, const Vec& mean, Vec& d_var, Vec& d_mean);

// KL( N(m, diag(v)) || N(mu_c, Sigma_c) ).
double kl_diag_to_class_prior(const Vec& var, const Vec& mean, const ClassPrior& prior);
void kl_diag_to_class_prior_grad(const Vec& var, const Vec& mean, const ClassPrior& prior,
                                 Vec& d_var, Vec& d_mean);

// Mean negative log-probability of the true labels; log_probs is C x N.
double distortion(const Mat& log_probs, const std::vector<int>& labels);

// Analytic cross-entropy gradient through the linear head for one batch of
// received latents (k x N): dL/dW = mean_n (softmax - onehot) z^T, etc.
struct HeadGrad {
    Mat w;
    Vec b;
    double squared_norm() const;
};
HeadGrad head_ce_gradient(const nn::ClassifierParams& clf, const Mat& z_hat,
                          const std::vector<int>& labels);

// E_d [ || grad_phi L_d ||^2 ] with uniform domain weights.
double irm_penalty(const std::vector<HeadGrad>& per_domain);

// Hard-in-batch triplet loss over received latents (k x N). For each anchor
// the match is the nearest same-class member and the non-match the nearest
// other-class member. A single-class batch returns 0 and sets the warning.
double triplet_loss(const Mat& latents, const std::vector<int>& labels, double margin,
                    Mat* d_latents = nullptr, bool* single_class_warning = nullptr);

enum class ObjectiveKind { deepjscc, vib, irm, vife, vlfe, combined };

bool objective_uses_penalty(ObjectiveKind kind);
bool objective_uses_class_priors(ObjectiveKind kind);

struct DomainBatch {
    Mat x; // input_dim x N
    std::vector<int> labels;
    int domain = 0;
};

struct LossBreakdown {
    double distortion = 0.0;
    double rate = 0.0;    // KL term, before beta
    double penalty = 0.0; // IRM gradient penalty, before lambda
    double triplet = 0.0;
    double total = 0.0;
    bool triplet_single_class_warning = false;
};

// Optional record of the sampled pipeline state, for component-recomputation
// oracles in tests and for prior refreshes in the trainer.
struct ObjectiveTrace {
    // per domain
    std::vector<Mat> mean, std_dev;
    std::vector<std::vector<Mat>> z_hat; // [domain][noise draw], k x N
};

struct ObjectiveResult {
    LossBreakdown value;
    nn::EncoderParams d_encoder;     // populated when with_grads
    nn::ClassifierParams d_classifier;
};

// Forward (and optionally backward) pass of the selected training objective
// over one batch per domain. Deterministic given the rng state; reparam and
// channel noise are drawn in a fixed order.
ObjectiveResult evaluate_objective(const nn::Encoder& encoder, const nn::ClassifierParams& clf,
                                   const std::vector<DomainBatch>& batches, const LossWeights& weights,
                                   const ChannelConfig& channel, ObjectiveKind kind,
                                   const ClassPriorMap& priors, std::mt19937_64& rng,
                                   bool with_grads, ObjectiveTrace* trace = nullptr);

// Objective values only (see evaluate_objective for gradients).
LossBreakdown vife_loss(const nn::Encoder& encoder, const nn::ClassifierParams& clf,
                        const std::vector<DomainBatch>& batches, const LossWeights& weights,
                        const ChannelConfig& channel, std::mt19937_64& rng);
LossBreakdown vlfe_loss(const nn::Encoder& encoder, const nn::ClassifierParams& clf,
                        const std::vector<DomainBatch>& batches, const LossWeights& weights,
                        const ChannelConfig& channel, const ClassPriorMap& priors,
                        std::mt19937_64& rng);
LossBreakdown combined_loss(const nn::Encoder& encoder, const nn::ClassifierParams& clf,
                            const std::vector<DomainBatch>& batches, const LossWeights& weights,
                            const ChannelConfig& channel, const ClassPriorMap& priors,
                            std::mt19937_64& rng);

} // namespace toc::obj

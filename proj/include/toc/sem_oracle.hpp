#pragma once

#include <cstdint>
#include <vector>

namespace toc::sem {

// Linear-Gaussian structural model used as an analytic ground truth:
//   u_c ~ N(0, var_causal)
//   y   = u_c + n,   n   ~ N(0, var_label)
//   u_s = y + n_s,   n_s ~ N(0, var_spurious)   (collider D -> U_S <- Y)
// and the channel corrupts transmitted features with N(0, var_channel).
struct SemParams {
    double var_causal = 1.0;
    double var_spurious = 1.0;
    double var_label = 1.0;
    double var_channel = 0.0;

    void validate() const;
};

struct SemSample {
    double u_c = 0.0;
    double u_s = 0.0;
    double y = 0.0;
};

struct RegressionWeights {
    double w1 = 0.0; // coefficient on the received causal feature
    double w2 = 0.0; // coefficient on the received spurious feature
};

enum class FeatureSet { causal_only, both };

std::vector<SemSample> generate_sem_samples(const SemParams& params, std::size_t n, std::uint64_t seed);

// Closed-form least-squares weight when regressing y on u_c + channel noise:
// w1 = var_causal / (var_causal + var_channel), w2 = 0.
RegressionWeights analytic_weights_causal_only(const SemParams& params);

// Closed-form least-squares weights when regressing on both noisy features.
RegressionWeights analytic_weights_both(const SemParams& params);

// Empirical no-intercept OLS of y against the chosen noisy features.
// Channel noise is drawn internally from `seed`. The received spurious
// feature additionally carries an independent observation noise of variance
// `var_spurious_obs` (typically the model's var_spurious); with that term the
// population least squares over the collider model reproduces
// analytic_weights_both exactly — the closed forms price the spurious noise
// twice, once in generation and once in observation.
RegressionWeights fit_ols_remote(const std::vector<SemSample>& samples, double var_channel,
                                 FeatureSet feature_set, double var_spurious_obs,
                                 std::uint64_t seed);

// One (domain index, target, conditioning value) observation.
struct CmiSample {
    int domain = 0;
    double y = 0.0;
    double cond = 0.0;
};

// Plug-in estimate of I(D; Y | W) in nats. Continuous y and w are
// discretized by equal-frequency binning; the domain index stays discrete.
double conditional_mi(const std::vector<CmiSample>& samples, int bins = 16);

} // namespace toc::sem

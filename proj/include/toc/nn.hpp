#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <random>

namespace toc::nn {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

// Stochastic featurizer output for one input: ẑ|x ~ N(mean, diag(std^2))
// before the channel. mean is bounded to [-sqrt(p_max), sqrt(p_max)].
struct GaussianPosterior {
    Vec mean;
    Vec std;
};

// Marginal of the received feature: variance picks up the channel noise.
struct ReceivedPosterior {
    Vec mean;
    Vec var; // std^2 + channel noise_var, per dimension
};

ReceivedPosterior effective_received_posterior(const GaussianPosterior& post, double noise_var);

// z = mean + std .* eps, eps ~ N(0, I).
Vec sample_latent(const GaussianPosterior& post, std::mt19937_64& rng);

struct EncoderConfig {
    int latent_dim = 16;
    double p_max = 1.0;
    double std_floor = 1e-4;
};

// conv(2->32, k3, s2) -> relu -> conv(32->64, k3, s2) -> relu -> linear
// to (k means, k raw stds). All convolutions use padding 1.
inline constexpr int kConv1In = 2, kConv1Out = 32;
inline constexpr int kConv2In = 32, kConv2Out = 64;
inline constexpr int kKernel = 3, kStride = 2, kPad = 1;
inline constexpr int kConv1Map = 14 * 14; // output positions per channel
inline constexpr int kConv2Map = 7 * 7;
inline constexpr int kFlatDim = kConv2Out * kConv2Map; // 3136

struct EncoderParams {
    Mat w1, w2;     // 32 x 18, 64 x 288
    Vec b1, b2;     // 32, 64
    Mat wm, ws;     // k x 3136 each
    Vec bm, bs;     // k each

    Eigen::Index count() const;
    Vec to_vector() const;
    void from_vector(const Vec& v);
};

struct ClassifierParams {
    Mat w; // C x k
    Vec b; // C

    Eigen::Index count() const;
    Vec to_vector() const;
    void from_vector(const Vec& v);
};

EncoderParams init_encoder_params(const EncoderConfig& cfg, std::mt19937_64& rng);
EncoderParams zero_encoder_params(const EncoderConfig& cfg);
ClassifierParams init_classifier_params(int latent_dim, int num_classes, std::mt19937_64& rng);
ClassifierParams zero_classifier_params(int latent_dim, int num_classes);

// Cached activations from a batch forward pass; consumed by backward().
struct EncoderForward {
    Mat cols1;            // 18 x (196 N)
    Mat a1;               // 32 x (196 N), post-relu
    Mat cols2;            // 288 x (49 N)
    Mat flat;             // 3136 x N, post-relu conv2 output
    Mat raw_mean, raw_std; // k x N
    Mat mean, std_dev;     // k x N
};

class Encoder {
public:
    Encoder(EncoderConfig cfg, EncoderParams params) : cfg_(cfg), p_(std::move(params)) {}

    const EncoderConfig& config() const { return cfg_; }
    EncoderParams& params() { return p_; }
    const EncoderParams& params() const { return p_; }

    // x: kInputDim x N, one column per sample, values in [0,1].
    EncoderForward forward(const Mat& x) const;

    GaussianPosterior encode(const Vec& x) const;

    // d_mean, d_std: k x N gradients of the loss w.r.t. the posterior
    // parameters. Returns parameter gradients (summed over the batch).
    EncoderParams backward(const Mat& x, const EncoderForward& fwd, const Mat& d_mean,
                           const Mat& d_std) const;

private:
    EncoderConfig cfg_;
    EncoderParams p_;
};

// Linear head: logits = W z + b, exposed as log-softmax.
Mat classifier_logits(const ClassifierParams& p, const Mat& z);
Mat log_softmax(const Mat& logits); // columnwise
Vec classify(const ClassifierParams& p, const Vec& z_hat); // log-probability vector

} // namespace toc::nn

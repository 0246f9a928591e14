#pragma once

#include <Eigen/Core>
#include <random>

namespace toc {

// AWGN channel with a per-dimension peak power constraint.
struct ChannelConfig {
    double p_max = 1.0;     // peak per-dimension power, |z_i|^2 <= p_max
    double noise_var = 0.1; // sigma^2

    void validate() const;
};

// 10*log10(p_max / sigma^2); returns +inf for a noiseless channel.
double psnr_db(const ChannelConfig& cfg);

// Inverse of psnr_db at fixed p_max: sigma^2 = p_max * 10^(-psnr/10).
double noise_var_for_psnr(double p_max, double psnr_db);

// Clamp each dimension into [-sqrt(p_max), +sqrt(p_max)]. Idempotent.
Eigen::VectorXd power_project(const Eigen::VectorXd& z, double p_max);

// z_hat = project(z) + eps, eps ~ N(0, sigma^2 I).
Eigen::VectorXd transmit(const Eigen::VectorXd& z, const ChannelConfig& cfg, std::mt19937_64& rng);

// Transmission latency for a k-dimensional latent. One real symbol per
// latent dimension; the symbol rate divisor is configurable because the
// real-vs-complex pairing convention is a modeling choice.
inline constexpr double kSymbolRateBaud = 9600.0;
double latency_ms(int latent_dim, double symbol_rate = kSymbolRateBaud);

} // namespace toc

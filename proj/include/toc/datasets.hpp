#pragma once

#include "toc/idx.hpp"

#include <cstdint>
#include <vector>

namespace toc::data {

inline constexpr int kImageSide = 28;
inline constexpr int kImagePixels = kImageSide * kImageSide;
inline constexpr int kColorChannels = 2;
inline constexpr int kInputDim = kColorChannels * kImagePixels;

// Construction recipe for one biased environment.
struct EnvironmentSpec {
    double bias_ratio = 0.9;  // s: P(color channel == noisy label)
    double label_noise = 0.25; // rho: P(binary label flipped)
    int domain_index = 0;
    bool is_test = false;

    void validate() const;
};

// One two-channel colored example. Pixels are kept as uint8 in the channel
// selected at construction; write_input() materializes the normalized
// 2 x 28 x 28 array (channel-major) on demand.
struct LabeledExample {
    std::vector<std::uint8_t> digit_pixels; // 784 intensities
    int color_channel = 0;                  // which channel carries the digit
    int y = 0;                              // (possibly noisy) class label
    int y_clean = 0;                        // pre-noise binary label; oracle use only
    int d = 0;                              // domain index

    void write_input(double* dst) const; // dst has kInputDim entries in [0,1]
};

// Colored-environment construction: binary label y0 = [digit >= 5], flip
// with probability rho, then color with the noisy label (flip channel with
// probability 1-s). Deterministic under seed.
std::vector<LabeledExample> build_colored_environment(const RawImageSet& raw, const EnvironmentSpec& spec,
                                                      std::uint64_t seed);

// Semantic-shift set: same two-channel placement with a uniform random
// channel. Labels are offset out of the ID class set {0,1}.
inline constexpr int kOodLabelOffset = 2;
std::vector<LabeledExample> load_semantic_shift_set(const RawImageSet& raw, std::uint64_t seed);

// Seed-deterministic permutation of [0, n) split into batches of size B;
// the last short batch is retained.
std::vector<std::vector<std::size_t>> batch_indices(std::size_t n, std::size_t batch_size,
                                                    std::uint64_t seed);

} // namespace toc::data

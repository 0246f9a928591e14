#pragma once

#include "toc/idx.hpp"

#include <cstdint>

namespace toc::data {

// Procedurally rendered 28x28 stand-ins for the MNIST-family raw files,
// for environments without the original downloads. Digits are jittered
// seven-segment glyphs (classes 0..9); the "fashion" set renders ten
// texture/shape families with very different pixel statistics, serving as
// the semantic-shift source.
RawImageSet make_surrogate_digits(std::size_t n, std::uint64_t seed);
RawImageSet make_surrogate_fashion(std::size_t n, std::uint64_t seed);

} // namespace toc::data

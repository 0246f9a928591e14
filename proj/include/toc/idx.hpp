#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace toc::data {

// MNIST-family raw file contents: n images of rows x cols uint8 pixels
// plus n labels.
struct RawImageSet {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> pixels; // n * rows * cols, row-major
    std::vector<std::uint8_t> labels; // n entries, or empty if unlabeled

    std::size_t size() const {
        return rows > 0 && cols > 0 ? pixels.size() / (static_cast<std::size_t>(rows) * cols) : 0;
    }
    const std::uint8_t* image(std::size_t i) const {
        return pixels.data() + i * static_cast<std::size_t>(rows) * cols;
    }
};

struct IdxError : std::runtime_error {
    explicit IdxError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::uint32_t kIdxImageMagic = 0x00000803;
inline constexpr std::uint32_t kIdxLabelMagic = 0x00000801;

// Parse an IDX image file (magic 2051). Throws IdxError naming the byte
// offset on bad magic or truncation.
RawImageSet parse_idx_images(const std::vector<std::uint8_t>& bytes);

// Parse an IDX label file (magic 2049).
std::vector<std::uint8_t> parse_idx_labels(const std::vector<std::uint8_t>& bytes);

// Byte-exact inverses of the parsers.
std::vector<std::uint8_t> serialize_idx_images(const RawImageSet& set);
std::vector<std::uint8_t> serialize_idx_labels(const std::vector<std::uint8_t>& labels);

// Read a file, transparently inflating gzip payloads (magic 0x1F 0x8B).
std::vector<std::uint8_t> read_file_maybe_gzip(const std::string& path);

// Convenience: load an image/label file pair into one RawImageSet.
RawImageSet load_idx_pair(const std::string& image_path, const std::string& label_path);

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes);

} // namespace toc::data

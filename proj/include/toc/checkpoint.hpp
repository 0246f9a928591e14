#pragma once

#include "toc/detection.hpp"
#include "toc/trainer.hpp"

#include <string>

namespace toc::ckpt {

// Model and detector persistence. One self-describing JSON document per
// file; doubles are written with shortest-round-trip precision, so a
// save/load cycle is value-exact.
void save_model(const train::Model& model, const std::string& path);
train::Model load_model(const std::string& path);

void save_detector(const detect::DetectorState& det, const std::string& path);
detect::DetectorState load_detector(const std::string& path);

// Atomic write: stage to <path>.tmp then rename.
void write_text_atomic(const std::string& path, const std::string& contents);

} // namespace toc::ckpt

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "jc/types.hpp"

namespace jc {

/// Fixed 17-significant-digit rendering; identical input bytes out on every
/// platform, so CSV/JSON outputs are byte-stable.
std::string format_double(double v);

/// Write content to path atomically (temp file in the same directory, then
/// rename). Parent directories are created as needed.
void atomic_write(const std::filesystem::path& path, const std::string& content);

/// FNV-1a 64-bit checksum of a byte string, rendered as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

/// Linear-ramp (white to dark blue) heatmap of a sample-by-site probability
/// matrix, omega*t on the horizontal axis and site index vertical, with
/// min/max annotations.
std::string svg_heatmap(const MatrixXd& values, const VectorXd& omega_t,
                        const std::string& title);

}  // namespace jc

#pragma once

#include "photomap/image.hpp"

#include <filesystem>
#include <vector>

namespace photomap {

// Decode PNG (8/16-bit gray or RGB) or binary PGM/PPM, picked by magic
// bytes; integer samples are normalized by (2^depth - 1). Alpha, if
// present, is dropped. Throws IoError.
RawImage read_image(const std::filesystem::path& path);

// 8-bit single-channel writer; format picked by extension (.png or
// .pgm/.pnm). Values are clamped to [0, 1] and rounded to 255ths.
void write_gray8(const std::filesystem::path& path, const std::vector<float>& pixels,
                 int width, int height);

// 16-bit grayscale PNG, for sources that need a fine value resolution.
void write_gray16_png(const std::filesystem::path& path, const std::vector<float>& pixels,
                      int width, int height);

}  // namespace photomap

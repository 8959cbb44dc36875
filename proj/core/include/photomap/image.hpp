#pragma once

#include <cstddef>
#include <vector>

namespace photomap {

// Row-major raster as captured: 1 (gray) or 3 (RGB) interleaved channels,
// samples in [0, 1].
struct RawImage {
    int width = 0;
    int height = 0;
    int channels = 1;
    std::vector<float> data;

    float at(int x, int y, int c = 0) const {
        return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }
    float& at(int x, int y, int c = 0) {
        return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }
    bool empty() const { return data.empty(); }
};

// Square grayscale power-of-two raster, the registration input format.
struct Frame {
    int size = 0;
    std::vector<float> data;
    int source_index = 0;

    float at(int x, int y) const { return data[static_cast<std::size_t>(y) * size + x]; }
    float& at(int x, int y) { return data[static_cast<std::size_t>(y) * size + x]; }
};

RawImage make_raw(int width, int height, int channels, float fill = 0.0f);
Frame make_frame(int size, float fill = 0.0f, int source_index = 0);

bool is_pow2(int v);

// Throw DataError when the type invariants are broken (dimensions,
// sample range, finiteness).
void validate(const RawImage& img);
void validate(const Frame& f);

}  // namespace photomap

#include "photomap/image.hpp"

#include "photomap/errors.hpp"

#include <cmath>

namespace photomap {

RawImage make_raw(int width, int height, int channels, float fill) {
    RawImage img;
    img.width = width;
    img.height = height;
    img.channels = channels;
    img.data.assign(static_cast<std::size_t>(width) * height * channels, fill);
    return img;
}

Frame make_frame(int size, float fill, int source_index) {
    Frame f;
    f.size = size;
    f.data.assign(static_cast<std::size_t>(size) * size, fill);
    f.source_index = source_index;
    return f;
}

bool is_pow2(int v) {
    return v > 0 && (v & (v - 1)) == 0;
}

namespace {

void check_samples(const std::vector<float>& data) {
    for (float v : data) {
        if (!std::isfinite(v) || v < 0.0f || v > 1.0f) {
            throw DataError("sample out of [0,1] or not finite");
        }
    }
}

}  // namespace

void validate(const RawImage& img) {
    if (img.width < 1 || img.height < 1) throw DataError("image dimensions must be >= 1");
    if (img.channels != 1 && img.channels != 3) throw DataError("channels must be 1 or 3");
    if (img.data.size() != static_cast<std::size_t>(img.width) * img.height * img.channels) {
        throw DataError("image data length does not match dimensions");
    }
    check_samples(img.data);
}

void validate(const Frame& f) {
    if (!is_pow2(f.size) || f.size < 64) throw DataError("frame size must be a power of two >= 64");
    if (f.data.size() != static_cast<std::size_t>(f.size) * f.size) {
        throw DataError("frame data length does not match size");
    }
    check_samples(f.data);
}

}  // namespace photomap

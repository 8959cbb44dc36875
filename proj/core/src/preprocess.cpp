#include "photomap/preprocess.hpp"

#include "photomap/errors.hpp"

#include <algorithm>
#include <cmath>

namespace photomap {

RawImage to_grayscale(const RawImage& img) {
    if (img.channels == 1) return img;
    RawImage out = make_raw(img.width, img.height, 1);
    const std::size_t n = static_cast<std::size_t>(img.width) * img.height;
    for (std::size_t i = 0; i < n; ++i) {
        const float r = img.data[i * 3 + 0];
        const float g = img.data[i * 3 + 1];
        const float b = img.data[i * 3 + 2];
        out.data[i] = 0.2126f * r + 0.7152f * g + 0.0722f * b;
    }
    return out;
}

RawImage square_crop(const RawImage& img) {
    const int s = std::min(img.width, img.height);
    if (img.width == img.height) return img;
    // centered; an odd remainder is dropped from the high-index side
    const int x0 = (img.width - s) / 2;
    const int y0 = (img.height - s) / 2;
    RawImage out = make_raw(s, s, img.channels);
    for (int y = 0; y < s; ++y) {
        for (int x = 0; x < s; ++x) {
            for (int c = 0; c < img.channels; ++c) {
                out.at(x, y, c) = img.at(x0 + x, y0 + y, c);
            }
        }
    }
    return out;
}

namespace {

// Bilinear with border-replicate taps, so constants survive exactly.
float sample_clamped(const RawImage& img, double x, double y) {
    x = std::clamp(x, 0.0, static_cast<double>(img.width - 1));
    y = std::clamp(y, 0.0, static_cast<double>(img.height - 1));
    const int x0 = static_cast<int>(std::floor(x));
    const int y0 = static_cast<int>(std::floor(y));
    const int x1 = std::min(x0 + 1, img.width - 1);
    const int y1 = std::min(y0 + 1, img.height - 1);
    const double fx = x - x0;
    const double fy = y - y0;
    const double top = img.at(x0, y0) * (1.0 - fx) + img.at(x1, y0) * fx;
    const double bot = img.at(x0, y1) * (1.0 - fx) + img.at(x1, y1) * fx;
    return static_cast<float>(top * (1.0 - fy) + bot * fy);
}

// Zero outside the raster, per-channel.
float sample_zero(const RawImage& img, double x, double y, int c) {
    if (x < 0.0 || y < 0.0 || x > img.width - 1.0 || y > img.height - 1.0) return 0.0f;
    const int x0 = static_cast<int>(std::floor(x));
    const int y0 = static_cast<int>(std::floor(y));
    const int x1 = std::min(x0 + 1, img.width - 1);
    const int y1 = std::min(y0 + 1, img.height - 1);
    const double fx = x - x0;
    const double fy = y - y0;
    const double top = img.at(x0, y0, c) * (1.0 - fx) + img.at(x1, y0, c) * fx;
    const double bot = img.at(x0, y1, c) * (1.0 - fx) + img.at(x1, y1, c) * fx;
    return static_cast<float>(top * (1.0 - fy) + bot * fy);
}

}  // namespace

Frame resize_pow2(const RawImage& img, int target) {
    if (img.channels != 1) throw DataError("resize_pow2 expects a 1-channel image");
    if (img.width != img.height) throw DataError("resize_pow2 expects a square image");
    if (!is_pow2(target)) throw ConfigError("target frame size must be a power of two");
    if (target < 64) throw ConfigError("target frame size must be >= 64");

    Frame out = make_frame(target);
    if (img.width == target) {
        out.data = img.data;
        return out;
    }
    const double ratio = static_cast<double>(img.width) / target;
    for (int y = 0; y < target; ++y) {
        const double sy = (y + 0.5) * ratio - 0.5;
        for (int x = 0; x < target; ++x) {
            const double sx = (x + 0.5) * ratio - 0.5;
            out.at(x, y) = std::clamp(sample_clamped(img, sx, sy), 0.0f, 1.0f);
        }
    }
    return out;
}

RawImage undistort(const RawImage& img, const CalibrationParams& calib) {
    if (!calib.enabled) return img;

    const double cx = calib.center_x * (img.width - 1);
    const double cy = calib.center_y * (img.height - 1);
    // radii normalized by the half-diagonal so k1/k2 stay dimensionless
    const double r0 = 0.5 * std::hypot(static_cast<double>(img.width - 1),
                                       static_cast<double>(img.height - 1));

    RawImage out = make_raw(img.width, img.height, img.channels);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            const double dx = (x - cx) / r0;
            const double dy = (y - cy) / r0;
            const double r2 = dx * dx + dy * dy;
            const double factor = 1.0 + calib.k1 * r2 + calib.k2 * r2 * r2;
            const double sx = cx + dx * factor * r0;
            const double sy = cy + dy * factor * r0;
            for (int c = 0; c < img.channels; ++c) {
                out.at(x, y, c) = std::clamp(sample_zero(img, sx, sy, c), 0.0f, 1.0f);
            }
        }
    }
    return out;
}

Frame preprocess_frame(const RawImage& img, const CalibrationParams& calib, int frame_size,
                       int source_index) {
    Frame f = resize_pow2(square_crop(to_grayscale(undistort(img, calib))), frame_size);
    f.source_index = source_index;
    return f;
}

}  // namespace photomap

#pragma once

#include "photomap/image.hpp"

namespace photomap {

// Radial undistortion behind the calibration switch. Inverse model
// r_d = r * (1 + k1*r^2 + k2*r^4), radii normalized by the half-diagonal
// around the principal point. enabled=false is a bit-exact identity.
struct CalibrationParams {
    bool enabled = false;
    double k1 = 0.0;
    double k2 = 0.0;
    double center_x = 0.5;  // principal point, normalized to [0,1]
    double center_y = 0.5;
};

// Rec. 709 luminance; 1-channel input is returned unchanged.
RawImage to_grayscale(const RawImage& img);

// Centered s x s crop with s = min(width, height); an odd remainder is
// discarded from the high-index side.
RawImage square_crop(const RawImage& img);

// Bilinear resample of a square 1-channel image onto a power-of-two grid
// (target >= 64). Border taps clamp, so constants resize exactly.
Frame resize_pow2(const RawImage& img, int target);

RawImage undistort(const RawImage& img, const CalibrationParams& calib);

// The whole capture-to-Frame path: undistort, grayscale, crop, resize.
Frame preprocess_frame(const RawImage& img, const CalibrationParams& calib, int frame_size,
                       int source_index = 0);

}  // namespace photomap

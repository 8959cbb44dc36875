#pragma once

#include "photomap/image.hpp"
#include "photomap/raster.hpp"
#include "photomap/transform.hpp"

namespace photomap {

// Sampling and gating knobs for the Fourier-Mellin estimator.
// n_theta/n_rho of 0 resolve to the frame size.
struct FmiConfig {
    int n_theta = 0;                 // angular samples over [0, pi)
    int n_rho = 0;                   // log-radial samples
    double rho_min = 2.0;            // innermost sampling radius, px
    double confidence_floor = 0.12;  // acceptance gate used by map building
    double max_scale = 4.0;          // scale estimates clamp to [1/max_scale, max_scale]

    // Apply size-dependent defaults and check invariants (throws ConfigError).
    FmiConfig resolved(int frame_size) const;
};

struct RegistrationResult {
    SimilarityTransform transform;
    double confidence = 0.0;  // translation correlation peak, [0, 1]
};

struct PeakShift {
    double dx = 0.0;  // along columns
    double dy = 0.0;  // along rows
    double peak = 0.0;
};

// Separable Hann window, w(i) = 0.5 * (1 - cos(2*pi*i/(size-1))).
Frame apply_hann(const Frame& f);

// |2-D DFT| with the zero-frequency bin moved to (size/2, size/2).
Raster fft_magnitude_centered(const Frame& f);

// Emphasis filter H = (1 - cos(pi*u)cos(pi*v)) * (2 - cos(pi*u)cos(pi*v))
// over normalized centered frequencies u, v in [-0.5, 0.5); kills the DC
// bin that would otherwise swamp the log-polar correlation.
Raster highpass(const Raster& m);

// Resample a centered magnitude raster to n_theta x n_rho, angles over
// [0, pi) by point symmetry, radii rho_min * base^j up to size/2 - 1.
Raster log_polar(const Raster& m, const FmiConfig& cfg);

// Radial growth factor used by log_polar for the given raster size.
double log_polar_base(int size, const FmiConfig& cfg);

// Normalized cross-power peak: returns (dx, dy) such that b matches a
// circularly shifted by (dx, dy), sub-sample refined by a 3-point parabola
// per axis and wrapped to (-N/2, N/2]. Throws DegenerateInput on constant
// rasters.
PeakShift phase_correlate(const Raster& a, const Raster& b);

// Warp with out(p) = f(t.apply(p)) in centered pixel coordinates, bilinear
// sampling, zero outside.
Frame apply_similarity(const Frame& f, const SimilarityTransform& t);

// Full chain: window, magnitude spectra, highpass, log-polar, rotation and
// scale by phase correlation (pi-ambiguity resolved by testing both
// candidates in image space), translation and confidence from the winning
// candidate's correlation peak.
RegistrationResult register_frames(const Frame& a, const Frame& b, const FmiConfig& cfg = {});

}  // namespace photomap

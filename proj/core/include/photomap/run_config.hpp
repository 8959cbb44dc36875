#pragma once

#include "photomap/canvas.hpp"
#include "photomap/flightsim.hpp"
#include "photomap/preprocess.hpp"
#include "photomap/registration.hpp"

#include <filesystem>
#include <string>

namespace photomap {

// Everything the command pipelines need, parsed from key=value files with
// '#' comments plus command-line overrides. Unknown keys are hard errors;
// a silent typo would quietly corrupt an experiment.
struct RunConfig {
    int frame_size = 256;
    FmiConfig fmi;  // n_theta/n_rho 0 = frame_size

    int tile_size = 256;
    BlendPolicy blend_policy = BlendPolicy::Feather;

    CalibrationParams calibration;

    // simulator
    double capture_interval = 1.0;  // seconds
    double sim_duration = 20.0;     // seconds
    double sim_dt = 0.02;           // integration step
    double noise_sigma = 0.0;       // additive Gaussian pixel noise
    double fov_deg = 60.0;
    double tau = 2.0;
    double x_init = 0.0;
    double y_init = 0.0;
    double z_init = 30.0;
    double yaw_init = 0.0;
    double meters_per_texel = 0.25;
    double background = 0.0;

    // Assign one key; throws ConfigError on unknown keys or bad values.
    void set(const std::string& key, const std::string& value);
    void validate() const;

    CameraModel camera() const;
    BlimpParams blimp_params() const;
    BlimpState initial_state() const;
    CaptureSchedule schedule() const;
};

RunConfig load_run_config(const std::filesystem::path& path);

// "key=value" as given on the command line.
void apply_override(RunConfig& cfg, const std::string& assignment);

}  // namespace photomap

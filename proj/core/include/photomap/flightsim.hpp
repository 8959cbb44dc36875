#pragma once

#include "photomap/image.hpp"
#include "photomap/transform.hpp"

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <vector>

namespace photomap {

// Pose plus commanded and smoothed actuator values of the simulated blimp.
// Commands latch; step() eases the actuals toward them with a first-order
// exponential lag before integrating, which is what gives the vehicle its
// slow, drift-free motion.
struct BlimpState {
    double x = 0.0;  // meters, world plane
    double y = 0.0;
    double z = 30.0;  // altitude, meters, > 0
    double yaw = 0.0; // radians, (-pi, pi]

    double thrust_actual = 0.0;    // m/s
    double yaw_rate_actual = 0.0;  // rad/s
    double xz_angle_actual = 0.0;  // radians

    double thrust_cmd = 0.0;
    double yaw_rate_cmd = 0.0;
    double xz_angle_cmd = 0.0;
};

// Unit note: the thrust-bar tilt input is an absolute angle in radians
// (not a rate) and the tail input is a yaw rate in radians per second
// (not a linear velocity). Forward speed is thrust*cos(tilt), climb rate
// thrust*sin(tilt).
struct BlimpParams {
    double tau = 2.0;     // actuator lag time constant, seconds
    double z_min = 0.5;   // meters
    double max_thrust = 5.0;
    double max_yaw_rate = 1.0;
    double max_xz_angle = 1.5707963267948966;  // pi/2
};

// Store clamped commands; actuals are untouched until step().
BlimpState set_motor_speeds(BlimpState state, double xz_angle, double thrust, double tail,
                            const BlimpParams& params = {});

// Advance by dt (0 < dt <= 0.5): exact exponential lag toward the
// commands, then kinematic integration with the lagged values.
BlimpState step(BlimpState state, double dt, const BlimpParams& params = {});

// Downward-looking pinhole over flat ground.
struct CameraModel {
    double fov = 1.0471975511965976;  // full angle, radians (60 deg)
    int image_size = 256;

    double meters_per_pixel(double z) const;
};

// Ground texture sampled by the renderer; world (0, 0) sits at texel
// (0, 0), y axes aligned.
struct GroundWorld {
    int width = 0;
    int height = 0;
    std::vector<float> texture;  // row-major gray, [0, 1]
    double meters_per_texel = 0.25;
    float background = 0.0f;  // sampled outside the texture

    float texel(int x, int y) const { return texture[static_cast<std::size_t>(y) * width + x]; }
};

GroundWorld world_from_image(const RawImage& gray, double meters_per_texel, float background = 0.0f);

// Nadir view: output pixel p (centered, y down) sees the world point
// (x, y) + m(z) * R(yaw) * p, bilinearly sampled from the texture.
RawImage render_view(const GroundWorld& world, const BlimpState& state, const CameraModel& cam);

// Transform mapping view-b centered pixels onto view-a centered pixels
// under the render model; the analytic oracle for registration.
SimilarityTransform ground_truth_transform(const BlimpState& a, const BlimpState& b,
                                           const CameraModel& cam);

// One latched command change: applied at t, held until the next record.
struct CommandRecord {
    double t = 0.0;
    double xz_angle = 0.0;  // radians
    double thrust = 0.0;    // m/s
    double tail = 0.0;      // rad/s
};

// Script format: "t_seconds xz_angle_rad thrust_mps tail_radps" per line,
// strictly increasing t; blank lines and '#' comments allowed. Throws
// ParseError naming the offending line.
std::vector<CommandRecord> parse_command_script(std::istream& in);
std::vector<CommandRecord> load_command_script(const std::filesystem::path& path);

struct CaptureSchedule {
    double duration = 20.0;         // simulated seconds
    double capture_interval = 1.0;  // seconds between captures, first at t=0
    double dt = 0.02;               // integration step
};

// Integrate the flight, latching script commands as their time arrives,
// and hand every captured view (with the state it was taken from) to
// on_capture in order.
void run_flight(const GroundWorld& world, const CameraModel& cam, const BlimpParams& params,
                BlimpState initial, const std::vector<CommandRecord>& script,
                const CaptureSchedule& schedule,
                const std::function<void(int index, const BlimpState& state, const RawImage& view)>& on_capture);

}  // namespace photomap

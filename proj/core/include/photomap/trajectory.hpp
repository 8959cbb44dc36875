#pragma once

#include "photomap/transform.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <vector>

namespace photomap {

struct TrajectoryRecord {
    std::size_t frame_index = 0;
    MapPose pose;
    double confidence = 0.0;
    bool accepted = false;
};

// Text log, one record per line:
//   index scale rotation_rad tx_px ty_px confidence accepted
// '#' starts a comment. Ratios and radians carry 6 decimals, pixels 3,
// so identical records always serialize to identical bytes.
void write_trajectory(std::ostream& out, const std::vector<TrajectoryRecord>& records);
void write_trajectory(const std::filesystem::path& path, const std::vector<TrajectoryRecord>& records);

std::vector<TrajectoryRecord> read_trajectory(std::istream& in);
std::vector<TrajectoryRecord> read_trajectory(const std::filesystem::path& path);

}  // namespace photomap

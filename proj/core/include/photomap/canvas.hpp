#pragma once

#include "photomap/image.hpp"
#include "photomap/registration.hpp"
#include "photomap/trajectory.hpp"
#include "photomap/transform.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace photomap {

enum class BlendPolicy {
    Overwrite,  // new value replaces old, weight forced to 1
    Feather,    // edge-distance weighted average, hides seams
};

// Inclusive map-pixel bounds touched by a composite.
struct DirtyRegion {
    std::int64_t min_x = 0;
    std::int64_t min_y = 0;
    std::int64_t max_x = -1;
    std::int64_t max_y = -1;

    bool empty() const { return max_x < min_x || max_y < min_y; }
    std::int64_t width() const { return empty() ? 0 : max_x - min_x + 1; }
    std::int64_t height() const { return empty() ? 0 : max_y - min_y + 1; }
    bool contains(std::int64_t x, std::int64_t y) const {
        return x >= min_x && x <= max_x && y >= min_y && y <= max_y;
    }
};

// Sparse tile store holding the growing photomap. Tiles are allocated on
// demand as frames land, so the canvas has no fixed outer size and the
// cost of a composite depends only on the frame footprint. Single writer;
// reads must not overlap a composite.
class MapCanvas {
  public:
    struct Tile {
        std::vector<float> value;
        std::vector<float> weight;  // 0 = unwritten, kept in [0, 1]
    };
    using TileKey = std::pair<std::int64_t, std::int64_t>;
    using TileStore = std::map<TileKey, Tile>;

    explicit MapCanvas(int tile_size = 256, BlendPolicy policy = BlendPolicy::Feather);

    // Blend f at pose into the canvas and return the padded footprint.
    // Pixels outside the returned region are untouched.
    DirtyRegion composite(const Frame& f, const MapPose& pose);

    float value_at(std::int64_t x, std::int64_t y) const;   // 0 where unwritten
    float weight_at(std::int64_t x, std::int64_t y) const;  // 0 where unwritten

    const TileStore& tiles() const { return tiles_; }
    int tile_size() const { return tile_size_; }
    BlendPolicy policy() const { return policy_; }
    bool empty() const { return tiles_.empty(); }

    // Tight inclusive bounds of all written pixels.
    DirtyRegion written_bounds() const { return written_bounds_; }
    std::size_t frames_composited() const { return frames_composited_; }

    // Distinct tiles written by the most recent composite.
    std::size_t tiles_touched_last() const { return tiles_touched_last_; }

  private:
    Tile& tile_for(std::int64_t tx, std::int64_t ty);

    int tile_size_;
    BlendPolicy policy_;
    TileStore tiles_;
    DirtyRegion written_bounds_;
    std::size_t frames_composited_ = 0;
    std::size_t tiles_touched_last_ = 0;
};

struct ExportedMap {
    int width = 0;
    int height = 0;
    std::int64_t origin_x = 0;  // map coordinates of pixel (0, 0)
    std::int64_t origin_y = 0;
    int tile_size = 0;
    std::size_t frame_count = 0;
    std::vector<float> values;          // row-major
    std::vector<std::uint8_t> written;  // 1 where a frame landed
};

// Tight bounding raster of all written pixels; throws EmptyCanvas when
// nothing has been composited.
ExportedMap export_map(const MapCanvas& canvas);

// Frame-chained map assembly: each frame registers against the previous
// accepted frame; frames below the confidence floor are recorded as
// rejected and do not advance the anchor.
class MapBuilder {
  public:
    MapBuilder(const FmiConfig& cfg, int tile_size = 256,
               BlendPolicy policy = BlendPolicy::Feather);

    const TrajectoryRecord& add(Frame frame);

    const MapCanvas& canvas() const { return canvas_; }
    MapCanvas& canvas() { return canvas_; }
    const std::vector<TrajectoryRecord>& trajectory() const { return records_; }

  private:
    FmiConfig cfg_;
    MapCanvas canvas_;
    Frame anchor_;
    MapPose anchor_pose_;
    bool has_anchor_ = false;
    std::vector<TrajectoryRecord> records_;
};

struct BuildResult {
    MapCanvas canvas;
    std::vector<TrajectoryRecord> trajectory;
};

// Convenience wrapper over MapBuilder; throws EmptySequence on no frames.
BuildResult build_map(std::vector<Frame> frames, const FmiConfig& cfg, int tile_size = 256,
                      BlendPolicy policy = BlendPolicy::Feather);

}  // namespace photomap

#pragma once

#include <cstddef>
#include <vector>

namespace photomap {

// Dense 2-D double raster for spectral intermediates (magnitude spectra,
// log-polar maps, correlation surfaces).
struct Raster {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Raster() = default;
    Raster(int r, int c, double fill = 0.0)
        : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, fill) {}

    double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
    double& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
};

// Bilinear sample at (x, y) = (column, row); zero outside
// [0, cols-1] x [0, rows-1].
double sample_bilinear(const Raster& m, double x, double y);

}  // namespace photomap

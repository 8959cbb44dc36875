#include "photomap/raster.hpp"

#include <cmath>

namespace photomap {

double sample_bilinear(const Raster& m, double x, double y) {
    if (x < 0.0 || y < 0.0 || x > m.cols - 1.0 || y > m.rows - 1.0) return 0.0;
    const int x0 = static_cast<int>(std::floor(x));
    const int y0 = static_cast<int>(std::floor(y));
    const int x1 = x0 + 1 < m.cols ? x0 + 1 : x0;
    const int y1 = y0 + 1 < m.rows ? y0 + 1 : y0;
    const double fx = x - x0;
    const double fy = y - y0;
    const double top = m.at(y0, x0) * (1.0 - fx) + m.at(y0, x1) * fx;
    const double bot = m.at(y1, x0) * (1.0 - fx) + m.at(y1, x1) * fx;
    return top * (1.0 - fy) + bot * fy;
}

}  // namespace photomap

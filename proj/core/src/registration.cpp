#include "photomap/registration.hpp"

#include "photomap/errors.hpp"
#include "photomap/fft.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace photomap {

namespace {

using cd = std::complex<double>;

bool is_constant(const std::vector<float>& v) {
    for (float x : v) {
        if (x != v[0]) return false;
    }
    return true;
}

bool is_constant(const Raster& r) {
    double lo = r.data[0];
    double hi = r.data[0];
    for (double x : r.data) {
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    return hi - lo < 1e-12;
}

Raster raster_from_frame(const Frame& f) {
    Raster r(f.size, f.size);
    for (std::size_t i = 0; i < f.data.size(); ++i) r.data[i] = f.data[i];
    return r;
}

float sample_frame(const Frame& f, double x, double y) {
    if (x < 0.0 || y < 0.0 || x > f.size - 1.0 || y > f.size - 1.0) return 0.0f;
    const int x0 = static_cast<int>(std::floor(x));
    const int y0 = static_cast<int>(std::floor(y));
    const int x1 = x0 + 1 < f.size ? x0 + 1 : x0;
    const int y1 = y0 + 1 < f.size ? y0 + 1 : y0;
    const double fx = x - x0;
    const double fy = y - y0;
    const double top = f.at(x0, y0) * (1.0 - fx) + f.at(x1, y0) * fx;
    const double bot = f.at(x0, y1) * (1.0 - fx) + f.at(x1, y1) * fx;
    return static_cast<float>(top * (1.0 - fy) + bot * fy);
}

// 3-point parabolic vertex offset; values sampled circularly around the
// integer peak.
double parabolic_offset(double ym1, double y0, double yp1) {
    const double denom = ym1 - 2.0 * y0 + yp1;
    if (std::abs(denom) < 1e-15) return 0.0;
    return std::clamp(0.5 * (ym1 - yp1) / denom, -0.5, 0.5);
}

double wrap_offset(double d, int n) {
    if (d > n / 2.0) d -= n;
    if (d <= -n / 2.0) d += n;
    return d;
}

}  // namespace

FmiConfig FmiConfig::resolved(int frame_size) const {
    FmiConfig r = *this;
    if (r.n_theta == 0) r.n_theta = frame_size;
    if (r.n_rho == 0) r.n_rho = frame_size;
    if (r.n_theta < 64) throw ConfigError("n_theta must be >= 64");
    if (r.n_rho < 64) throw ConfigError("n_rho must be >= 64");
    if (!(r.rho_min > 0.0) || r.rho_min >= frame_size / 2.0) {
        throw ConfigError("rho_min must be in (0, size/2)");
    }
    if (r.confidence_floor < 0.0 || r.confidence_floor >= 1.0) {
        throw ConfigError("confidence_floor must be in [0, 1)");
    }
    if (r.max_scale < 1.0) throw ConfigError("max_scale must be >= 1");
    return r;
}

Frame apply_hann(const Frame& f) {
    Frame out = make_frame(f.size, 0.0f, f.source_index);
    std::vector<double> w(f.size);
    for (int i = 0; i < f.size; ++i) {
        w[i] = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * i / (f.size - 1)));
    }
    for (int y = 0; y < f.size; ++y) {
        for (int x = 0; x < f.size; ++x) {
            out.at(x, y) = static_cast<float>(f.at(x, y) * w[x] * w[y]);
        }
    }
    return out;
}

Raster fft_magnitude_centered(const Frame& f) {
    const int n = f.size;
    std::vector<cd> spec(static_cast<std::size_t>(n) * n);
    for (std::size_t i = 0; i < spec.size(); ++i) spec[i] = cd{f.data[i], 0.0};
    fft::forward_2d(spec, n, n);

    Raster out(n, n);
    const int half = n / 2;
    for (int r = 0; r < n; ++r) {
        const int sr = (r + half) % n;
        for (int c = 0; c < n; ++c) {
            const int sc = (c + half) % n;
            out.at(r, c) = std::abs(spec[static_cast<std::size_t>(sr) * n + sc]);
        }
    }
    return out;
}

Raster highpass(const Raster& m) {
    Raster out(m.rows, m.cols);
    for (int r = 0; r < m.rows; ++r) {
        const double eta = (r - m.rows / 2) / static_cast<double>(m.rows);
        const double ce = std::cos(std::numbers::pi * eta);
        for (int c = 0; c < m.cols; ++c) {
            const double xi = (c - m.cols / 2) / static_cast<double>(m.cols);
            const double prod = std::cos(std::numbers::pi * xi) * ce;
            out.at(r, c) = m.at(r, c) * (1.0 - prod) * (2.0 - prod);
        }
    }
    return out;
}

double log_polar_base(int size, const FmiConfig& cfg) {
    const FmiConfig rc = cfg.resolved(size);
    const double rho_max = size / 2.0 - 1.0;
    return std::pow(rho_max / rc.rho_min, 1.0 / (rc.n_rho - 1));
}

Raster log_polar(const Raster& m, const FmiConfig& cfg) {
    const int size = m.cols;
    const FmiConfig rc = cfg.resolved(size);
    const double base = log_polar_base(size, cfg);
    const double cx = m.cols / 2.0;
    const double cy = m.rows / 2.0;

    std::vector<double> radius(rc.n_rho);
    for (int j = 0; j < rc.n_rho; ++j) radius[j] = rc.rho_min * std::pow(base, j);

    Raster out(rc.n_theta, rc.n_rho);
    for (int i = 0; i < rc.n_theta; ++i) {
        const double theta = std::numbers::pi * i / rc.n_theta;
        const double ct = std::cos(theta);
        const double st = std::sin(theta);
        for (int j = 0; j < rc.n_rho; ++j) {
            out.at(i, j) = sample_bilinear(m, cx + radius[j] * ct, cy + radius[j] * st);
        }
    }
    return out;
}

PeakShift phase_correlate(const Raster& a, const Raster& b) {
    if (a.rows != b.rows || a.cols != b.cols) {
        throw SizeMismatch("phase_correlate: raster dimensions differ");
    }
    if (is_constant(a) || is_constant(b)) {
        throw DegenerateInput("phase_correlate: constant raster has no spectrum to align");
    }

    const int rows = a.rows;
    const int cols = a.cols;
    const std::size_t n = static_cast<std::size_t>(rows) * cols;

    std::vector<cd> fa(n), fb(n);
    for (std::size_t i = 0; i < n; ++i) {
        fa[i] = cd{a.data[i], 0.0};
        fb[i] = cd{b.data[i], 0.0};
    }
    fft::forward_2d(fa, rows, cols);
    fft::forward_2d(fb, rows, cols);

    // normalized cross-power; bins with negligible energy carry no phase
    for (std::size_t i = 0; i < n; ++i) {
        const cd cross = fa[i] * std::conj(fb[i]);
        const double mag = std::abs(cross);
        fa[i] = mag < 1e-12 ? cd{0.0, 0.0} : cross / mag;
    }
    fft::inverse_2d(fa, rows, cols);

    int pr = 0;
    int pc = 0;
    double best = fa[0].real();
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const double v = fa[static_cast<std::size_t>(r) * cols + c].real();
            if (v > best) {
                best = v;
                pr = r;
                pc = c;
            }
        }
    }

    auto surf = [&](int r, int c) {
        r = (r % rows + rows) % rows;
        c = (c % cols + cols) % cols;
        return fa[static_cast<std::size_t>(r) * cols + c].real();
    };
    const double dx = pc + parabolic_offset(surf(pr, pc - 1), best, surf(pr, pc + 1));
    const double dy = pr + parabolic_offset(surf(pr - 1, pc), best, surf(pr + 1, pc));

    PeakShift out;
    out.dx = wrap_offset(dx, cols);
    out.dy = wrap_offset(dy, rows);
    out.peak = std::clamp(best, 0.0, 1.0);
    return out;
}

Frame apply_similarity(const Frame& f, const SimilarityTransform& t) {
    Frame out = make_frame(f.size, 0.0f, f.source_index);
    const double c = (f.size - 1) / 2.0;
    const double m00 = t.scale * std::cos(t.rotation);
    const double m01 = -t.scale * std::sin(t.rotation);
    const double m10 = -m01;
    const double m11 = m00;
    for (int y = 0; y < f.size; ++y) {
        const double py = y - c;
        for (int x = 0; x < f.size; ++x) {
            const double px = x - c;
            const double sx = m00 * px + m01 * py + t.tx + c;
            const double sy = m10 * px + m11 * py + t.ty + c;
            out.at(x, y) = sample_frame(f, sx, sy);
        }
    }
    return out;
}

RegistrationResult register_frames(const Frame& a, const Frame& b, const FmiConfig& cfg) {
    if (a.size != b.size) throw SizeMismatch("register_frames: frame sizes differ");
    if (is_constant(a.data) || is_constant(b.data)) {
        throw DegenerateInput("register_frames: constant frame");
    }
    const FmiConfig rc = cfg.resolved(a.size);
    const double base = log_polar_base(a.size, rc);

    const Frame wa = apply_hann(a);
    const Frame wb = apply_hann(b);
    const Raster lpa = log_polar(highpass(fft_magnitude_centered(wa)), rc);
    const Raster lpb = log_polar(highpass(fft_magnitude_centered(wb)), rc);

    const PeakShift spectral = phase_correlate(lpa, lpb);
    const double theta0 = std::numbers::pi * spectral.dy / rc.n_theta;
    double scale = std::pow(base, -spectral.dx);
    scale = std::clamp(scale, 1.0 / rc.max_scale, rc.max_scale);

    // The half-plane spectrum leaves the rotation known only mod pi; try
    // both candidates in image space and keep the stronger translation peak.
    const Raster ra = raster_from_frame(wa);
    RegistrationResult result;
    result.confidence = -1.0;
    for (const double theta : {theta0, theta0 + std::numbers::pi}) {
        SimilarityTransform undo;
        undo.scale = 1.0 / scale;
        undo.rotation = -theta;
        const Frame candidate = apply_similarity(b, undo);
        PeakShift shift;
        try {
            shift = phase_correlate(ra, raster_from_frame(apply_hann(candidate)));
        } catch (const DegenerateInput&) {
            continue;  // warp left no content
        }
        if (shift.peak > result.confidence) {
            result.confidence = shift.peak;
            result.transform.scale = scale;
            result.transform.rotation = wrap_angle(theta);
            result.transform.tx = shift.dx;
            result.transform.ty = shift.dy;
        }
    }
    if (result.confidence < 0.0) {
        throw DegenerateInput("register_frames: both rotation candidates degenerate");
    }
    return result;
}

}  // namespace photomap

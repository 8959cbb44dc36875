#include "photomap/fft.hpp"

#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace photomap::fft {

namespace {

using cd = std::complex<double>;

bool is_pow2(std::size_t n) {
    return n > 0 && (n & (n - 1)) == 0;
}

// tw[k] = exp(-2*pi*i*k/n) for k < n/2.
std::vector<cd> twiddles(std::size_t n) {
    std::vector<cd> tw(n / 2);
    const double step = -2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t k = 0; k < n / 2; ++k) {
        tw[k] = std::polar(1.0, step * static_cast<double>(k));
    }
    return tw;
}

// Iterative radix-2 with a caller-provided twiddle table.
void fft_pow2(cd* a, std::size_t n, const std::vector<cd>& tw) {
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                cd u = a[i + k];
                cd t = tw[k * stride] * a[i + k + len / 2];
                a[i + k] = u + t;
                a[i + k + len / 2] = u - t;
            }
        }
    }
}

// Bluestein's chirp-z: expresses an arbitrary-length DFT as a circular
// convolution of power-of-two length m >= 2n-1.
void fft_bluestein(cd* x, std::size_t n) {
    std::size_t m = 1;
    while (m < 2 * n - 1) m <<= 1;

    // chirp[k] = exp(-pi*i*k^2/n); k^2 is reduced mod 2n to keep the
    // angle argument small.
    std::vector<cd> chirp(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::uint64_t k2 = (static_cast<std::uint64_t>(k) * k) % (2 * n);
        chirp[k] = std::polar(1.0, -std::numbers::pi * static_cast<double>(k2) / static_cast<double>(n));
    }

    std::vector<cd> a(m, cd{0.0, 0.0});
    std::vector<cd> b(m, cd{0.0, 0.0});
    for (std::size_t k = 0; k < n; ++k) a[k] = x[k] * chirp[k];
    b[0] = std::conj(chirp[0]);
    for (std::size_t k = 1; k < n; ++k) {
        b[k] = std::conj(chirp[k]);
        b[m - k] = b[k];
    }

    const std::vector<cd> tw = twiddles(m);
    fft_pow2(a.data(), m, tw);
    fft_pow2(b.data(), m, tw);
    for (std::size_t k = 0; k < m; ++k) a[k] *= b[k];

    // inverse of length m via conjugation
    for (auto& v : a) v = std::conj(v);
    fft_pow2(a.data(), m, tw);
    const double inv_m = 1.0 / static_cast<double>(m);
    for (std::size_t k = 0; k < n; ++k) {
        x[k] = std::conj(a[k]) * inv_m * chirp[k];
    }
}

void forward_n(cd* data, std::size_t n, const std::vector<cd>& pow2_tw) {
    if (n <= 1) return;
    if (is_pow2(n)) {
        fft_pow2(data, n, pow2_tw);
    } else {
        fft_bluestein(data, n);
    }
}

}  // namespace

void forward(std::vector<cd>& v) {
    if (v.empty()) throw std::invalid_argument("fft of empty vector");
    const std::vector<cd> tw = is_pow2(v.size()) ? twiddles(v.size()) : std::vector<cd>{};
    forward_n(v.data(), v.size(), tw);
}

void inverse(std::vector<cd>& v) {
    for (auto& x : v) x = std::conj(x);
    forward(v);
    const double inv_n = 1.0 / static_cast<double>(v.size());
    for (auto& x : v) x = std::conj(x) * inv_n;
}

void forward_2d(std::vector<cd>& v, int rows, int cols) {
    if (rows < 1 || cols < 1 || v.size() != static_cast<std::size_t>(rows) * cols) {
        throw std::invalid_argument("fft_2d: bad dimensions");
    }
    const std::size_t nr = static_cast<std::size_t>(rows);
    const std::size_t nc = static_cast<std::size_t>(cols);

    const std::vector<cd> tw_cols = is_pow2(nc) ? twiddles(nc) : std::vector<cd>{};
    for (std::size_t r = 0; r < nr; ++r) {
        forward_n(v.data() + r * nc, nc, tw_cols);
    }

    const std::vector<cd> tw_rows = is_pow2(nr) ? twiddles(nr) : std::vector<cd>{};
    std::vector<cd> col(nr);
    for (std::size_t c = 0; c < nc; ++c) {
        for (std::size_t r = 0; r < nr; ++r) col[r] = v[r * nc + c];
        forward_n(col.data(), nr, tw_rows);
        for (std::size_t r = 0; r < nr; ++r) v[r * nc + c] = col[r];
    }
}

void inverse_2d(std::vector<cd>& v, int rows, int cols) {
    for (auto& x : v) x = std::conj(x);
    forward_2d(v, rows, cols);
    const double inv_n = 1.0 / static_cast<double>(v.size());
    for (auto& x : v) x = std::conj(x) * inv_n;
}

}  // namespace photomap::fft

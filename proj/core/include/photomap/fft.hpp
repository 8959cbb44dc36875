#pragma once

#include <complex>
#include <vector>

namespace photomap::fft {

// In-place forward DFT, X[k] = sum_n x[n] exp(-2*pi*i*n*k/N). Radix-2 for
// power-of-two lengths, Bluestein's chirp-z otherwise.
void forward(std::vector<std::complex<double>>& v);

// In-place inverse DFT including the 1/N normalization.
void inverse(std::vector<std::complex<double>>& v);

// Row-major 2-D transforms (rows then columns).
void forward_2d(std::vector<std::complex<double>>& v, int rows, int cols);
void inverse_2d(std::vector<std::complex<double>>& v, int rows, int cols);

}  // namespace photomap::fft

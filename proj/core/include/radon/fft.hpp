#pragma once

#include <vector>

#include "radon/numeric.hpp"

namespace radon {

// in-place radix-2 FFT, sign = +1/-1 in exp(sign * 2*pi*i * jk/n); no 1/n factor
void fft_pow2(std::vector<cplx>& v, int sign);

// DFT of arbitrary length via Bluestein's chirp; X[a] = sum_y x[y] exp(sign*2*pi*i*a*y/n)
std::vector<cplx> dft(const std::vector<cplx>& x, int sign);

}  // namespace radon

#pragma once

#include <vector>

#include "nlslab/grid.hpp"

namespace nlslab::fft {

// Unnormalized forward DFT: u_hat[m] = sum_j u[j] exp(-2 pi i j m / n).
std::vector<Complex> forward(const Field& u);

// Inverse DFT including the 1/n factor, so inverse(grid, forward(u)) == u
// up to round-off.
Field inverse(const Grid& g, const std::vector<Complex>& spec);

}  // namespace nlslab::fft

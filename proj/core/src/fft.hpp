#pragma once

#include <complex>
#include <vector>

namespace lpq::detail {

/// In-place complex DFT over a 1-D length-n array or an n-by-n row-major 2-D
/// array (dim = 1 or 2). Forward is unnormalized; inverse divides by the
/// total point count, so forward-then-inverse is the identity up to rounding.
void fft(std::vector<std::complex<double>>& data, int dim, int n_per_axis, bool inverse);

}  // namespace lpq::detail

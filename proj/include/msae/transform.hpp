#pragma once

#include <span>
#include <vector>

#include "msae/kernel_set.hpp"
#include "msae/tensor.hpp"

namespace msae {

/// Band-limited spectral decomposition of a segment whose length D is a
/// multiple of the kernel window length N. Frame t correlates the windowed
/// kernels with samples [t N/2, t N/2 + N), read periodically (indices wrap
/// mod D), giving floor(2D/N) frames. The periodic read keeps the sqrt-Hann
/// overlap envelope exactly 1 everywhere, which makes the full-band
/// analysis/synthesis pair an exact identity on the whole segment.
BranchTensor analyze(std::span<const double> segment, const KernelSet& kernels);

/// Adjoint reconstruction: each frame's coefficients weight the synthesis
/// kernels (channel differences 0-1 and 2-3 against the real and imaginary
/// rows), accumulated at stride N/2 with the same periodic wrap, truncated
/// to out_len samples.
std::vector<double> synthesize(const BranchTensor& tensor, const KernelSet& kernels,
                               std::size_t out_len);

} // namespace msae

#include "msae/transform.hpp"

#include <string>

#include "msae/errors.hpp"

namespace msae {

BranchTensor analyze(std::span<const double> segment, const KernelSet& kernels) {
    const std::size_t n = kernels.window_len;
    const std::size_t d = segment.size();
    if (kernels.for_synthesis)
        throw ConsistencyError("analyze requires an analysis kernel set");
    if (d < n)
        throw DomainError("segment shorter than the analysis window");
    if (d % n != 0)
        throw DomainError("segment length " + std::to_string(d) +
                          " is not a multiple of the window length " + std::to_string(n));

    const std::size_t hop = n / 2;
    const std::size_t t_count = 2 * d / n;
    const std::size_t k_count = kernels.num_filters();

    BranchTensor y(t_count, k_count);
    std::vector<double> chunk(n);
    for (std::size_t t = 0; t < t_count; ++t) {
        const std::size_t start = t * hop;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t idx = start + i;
            chunk[i] = segment[idx < d ? idx : idx - d];
        }
        for (std::size_t k = 0; k < k_count; ++k) {
            const double* re = kernels.real_row(k);
            const double* im = kernels.imag_row(k);
            double acc_re = 0.0, acc_im = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                acc_re += chunk[i] * re[i];
                acc_im += chunk[i] * im[i];
            }
            y.set_complex(t, k, acc_re, acc_im);
        }
    }
    return y;
}

std::vector<double> synthesize(const BranchTensor& tensor, const KernelSet& kernels,
                               std::size_t out_len) {
    const std::size_t n = kernels.window_len;
    if (!kernels.for_synthesis)
        throw ConsistencyError("synthesize requires a synthesis kernel set");
    if (tensor.bins != kernels.num_filters())
        throw ConsistencyError("tensor bins (" + std::to_string(tensor.bins) +
                               ") do not match kernel count (" +
                               std::to_string(kernels.num_filters()) + ")");
    if (out_len < n || out_len % n != 0)
        throw DomainError("output length must be a positive multiple of the window length");
    if (tensor.frames != 2 * out_len / n)
        throw ConsistencyError("tensor frames (" + std::to_string(tensor.frames) +
                               ") do not match output length " + std::to_string(out_len));

    const std::size_t hop = n / 2;
    std::vector<double> out(out_len, 0.0);
    for (std::size_t t = 0; t < tensor.frames; ++t) {
        const std::size_t start = t * hop;
        for (std::size_t k = 0; k < tensor.bins; ++k) {
            const double re = tensor.real_part(t, k);
            const double im = tensor.imag_part(t, k);
            if (re == 0.0 && im == 0.0) continue;
            const double* kre = kernels.real_row(k);
            const double* kim = kernels.imag_row(k);
            for (std::size_t i = 0; i < n; ++i) {
                std::size_t idx = start + i;
                out[idx < out_len ? idx : idx - out_len] += re * kre[i] + im * kim[i];
            }
        }
    }
    return out;
}

} // namespace msae

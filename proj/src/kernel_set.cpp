#include "msae/kernel_set.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "msae/errors.hpp"

namespace msae {

long band_bin_count(std::size_t window_len, double band_lo, double band_hi) {
    const double n = static_cast<double>(window_len);
    const long k_lo = static_cast<long>(std::ceil(n * band_lo / 2.0));
    const long k_hi = static_cast<long>(std::floor(n * band_hi / 2.0));
    return k_hi - k_lo + 1;
}

long kernel_count(std::size_t window_len, double band_lo, double band_hi,
                  double overcompleteness) {
    const long base = band_bin_count(window_len, band_lo, band_hi);
    if (base <= 0) return base;
    return static_cast<long>(std::floor(overcompleteness * static_cast<double>(base)));
}

KernelSet build_kernels(std::size_t window_len, double band_lo, double band_hi,
                        double overcompleteness, bool for_synthesis, KernelWindow window_kind) {
    if (window_len < 2 || window_len % 2 != 0)
        throw DomainError("window length must be even and >= 2");
    if (!(band_lo >= 0.0 && band_lo < band_hi && band_hi <= 1.0))
        throw DomainError("band must satisfy 0 <= w1 < w2 <= 1");
    if (overcompleteness < 1.0)
        throw DomainError("overcompleteness must be >= 1");

    const std::size_t n = window_len;
    const double nd = static_cast<double>(n);
    const double k_lo = std::ceil(nd * band_lo / 2.0);
    const double k_hi = std::floor(nd * band_hi / 2.0);
    const long base = static_cast<long>(k_hi) - static_cast<long>(k_lo) + 1;
    if (base < 1)
        throw ConfigError("band (" + std::to_string(band_lo) + ", " + std::to_string(band_hi) +
                          ") maps to no DFT bins at window length " + std::to_string(n));
    const long count = kernel_count(n, band_lo, band_hi, overcompleteness);

    KernelSet ks;
    ks.window_len = n;
    ks.band_lo = band_lo;
    ks.band_hi = band_hi;
    ks.overcompleteness = overcompleteness;
    ks.for_synthesis = for_synthesis;
    ks.center_freqs.resize(static_cast<std::size_t>(count));
    if (count == base) {
        for (long k = 0; k < count; ++k)
            ks.center_freqs[static_cast<std::size_t>(k)] = k_lo + static_cast<double>(k);
    } else {
        // Evenly interpolated centers, both endpoints included.
        for (long k = 0; k < count; ++k)
            ks.center_freqs[static_cast<std::size_t>(k)] =
                k_lo + (k_hi - k_lo) * static_cast<double>(k) / static_cast<double>(count - 1);
    }

    ks.synthesis_scale.resize(ks.center_freqs.size());
    ks.real_part.resize(ks.center_freqs.size() * n);
    ks.imag_part.resize(ks.center_freqs.size() * n);

    const double norm = 1.0 / std::sqrt(nd);
    std::vector<double> window(n, 1.0);
    if (window_kind == KernelWindow::SqrtHann)
        for (std::size_t i = 0; i < n; ++i)
            window[i] = std::sin(std::numbers::pi * static_cast<double>(i) / nd);

    for (std::size_t k = 0; k < ks.center_freqs.size(); ++k) {
        const double f = ks.center_freqs[k];
        const bool integer_bin = f == std::floor(f);
        const bool dc_or_nyquist = integer_bin && (f == 0.0 || f == nd / 2.0);
        ks.synthesis_scale[k] = dc_or_nyquist ? 1.0 : 2.0;
        const double amp = norm * (for_synthesis ? ks.synthesis_scale[k] : 1.0);
        for (std::size_t i = 0; i < n; ++i) {
            const double phase = 2.0 * std::numbers::pi * f * static_cast<double>(i) / nd;
            ks.real_part[k * n + i] = amp * window[i] * std::cos(phase);
            ks.imag_part[k * n + i] = -amp * window[i] * std::sin(phase);
        }
    }
    return ks;
}

} // namespace msae

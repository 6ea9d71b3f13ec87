#pragma once

#include <cstddef>
#include <vector>

namespace msae {

/// Windowed DFT basis vectors for one band-limited branch.
///
/// Filter k has real part h(n) cos(2 pi f_k n / N) / sqrt(N) and imaginary
/// part -h(n) sin(2 pi f_k n / N) / sqrt(N), where h is the square root of
/// the periodic Hanning window (so h(n)^2 + h(n + N/2)^2 = 1 exactly). For
/// overcompleteness 1 the center frequencies f_k run over the integer bins
/// ceil(N w1 / 2) .. floor(N w2 / 2); for kappa > 1 there are
/// floor(kappa * base_count) centers evenly interpolated across the same
/// range. Synthesis sets additionally scale every filter by 2, except
/// integer bins 0 and N/2.
struct KernelSet {
    std::size_t window_len = 0;       // N, even
    double band_lo = 0.0;             // w1, normalized (1 = Nyquist)
    double band_hi = 1.0;             // w2
    double overcompleteness = 1.0;    // kappa
    bool for_synthesis = false;
    std::vector<double> center_freqs;     // f_k, in bins (real-valued when kappa > 1)
    std::vector<double> synthesis_scale;  // per filter: 2, or 1 at DC/Nyquist
    std::vector<double> real_part;        // num_filters x N, row-major
    std::vector<double> imag_part;        // num_filters x N, row-major

    std::size_t num_filters() const { return center_freqs.size(); }
    const double* real_row(std::size_t k) const { return real_part.data() + k * window_len; }
    const double* imag_row(std::size_t k) const { return imag_part.data() + k * window_len; }
};

/// Number of integer DFT bins in [w1, w2] for window length N:
/// floor(N w2 / 2) - ceil(N w1 / 2) + 1. May be <= 0 for degenerate bands.
long band_bin_count(std::size_t window_len, double band_lo, double band_hi);

/// band_bin_count scaled by kappa: floor(kappa * base_count).
long kernel_count(std::size_t window_len, double band_lo, double band_hi,
                  double overcompleteness);

/// Window applied to the basis vectors. SqrtHann is the production choice;
/// Rectangular exists for diagnostics where bin-exact responses matter.
enum class KernelWindow { SqrtHann, Rectangular };

KernelSet build_kernels(std::size_t window_len, double band_lo, double band_hi,
                        double overcompleteness = 1.0, bool for_synthesis = false,
                        KernelWindow window = KernelWindow::SqrtHann);

} // namespace msae

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "msae/noise.hpp"

namespace msae::test {

inline std::vector<double> random_signal(std::size_t n, std::uint32_t seed) {
    PinnedNormal gen(seed);
    std::vector<double> x(n);
    for (double& v : x) v = gen();
    return x;
}

inline double rel_rms_error(std::span<const double> ref, std::span<const double> est) {
    double err = 0.0, ref_e = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i) {
        const double d = ref[i] - est[i];
        err += d * d;
        ref_e += ref[i] * ref[i];
    }
    return ref_e > 0.0 ? std::sqrt(err / ref_e) : std::sqrt(err);
}

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
}

/// Brute-force windowed DFT of one frame: coefficient for center frequency
/// f (in bins) is sum_n w(n) x(n) exp(-i 2 pi f n / N) / sqrt(N). Kept
/// independent of the KernelSet construction path.
inline std::complex<double> frame_dft(std::span<const double> chunk, double f, bool sqrt_hann) {
    const std::size_t n = chunk.size();
    const double nd = static_cast<double>(n);
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = sqrt_hann ? std::sin(std::numbers::pi * static_cast<double>(i) / nd) : 1.0;
        const double phase = 2.0 * std::numbers::pi * f * static_cast<double>(i) / nd;
        acc += w * chunk[i] * std::complex<double>(std::cos(phase), -std::sin(phase));
    }
    return acc / std::sqrt(nd);
}

/// O(n^2) full DFT power spectrum of an arbitrary real vector, zero-padded
/// to pad_len, returning |X(j)|^2 for j = 0 .. pad_len/2.
inline std::vector<double> padded_power_spectrum(std::span<const double> x, std::size_t pad_len) {
    std::vector<double> power(pad_len / 2 + 1);
    for (std::size_t j = 0; j < power.size(); ++j) {
        double re = 0.0, im = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double phase = 2.0 * std::numbers::pi * static_cast<double>(j) *
                                 static_cast<double>(i) / static_cast<double>(pad_len);
            re += x[i] * std::cos(phase);
            im -= x[i] * std::sin(phase);
        }
        power[j] = re * re + im * im;
    }
    return power;
}

} // namespace msae::test

#pragma once

#include <cstddef>
#include <vector>

#include "msae/waveform.hpp"

namespace msae {

/// Short-time Fourier transform coefficients: frames x bins complex values
/// stored as separate real and imaginary planes. Both analysis and
/// synthesis apply the square-root periodic Hanning window; hop is half the
/// window length.
struct Stft {
    std::size_t win_len = 512;
    std::size_t hop = 256;
    std::size_t frames = 0;
    std::size_t bins = 0; // win_len / 2 + 1
    std::vector<double> re; // frames x bins, row-major
    std::vector<double> im;

    double& real(std::size_t l, std::size_t m) { return re[l * bins + m]; }
    double real(std::size_t l, std::size_t m) const { return re[l * bins + m]; }
    double& imag(std::size_t l, std::size_t m) { return im[l * bins + m]; }
    double imag(std::size_t l, std::size_t m) const { return im[l * bins + m]; }
    double power(std::size_t l, std::size_t m) const {
        return real(l, m) * real(l, m) + imag(l, m) * imag(l, m);
    }
};

/// Windowed DFT frames at hop win_len/2, zero-padded past the signal end.
/// Requires x no shorter than one window.
Stft stft(const Waveform& x, std::size_t win_len = 512, std::size_t hop = 256);

/// Matched-window overlap-add with COLA normalization (division by the
/// accumulated squared-window envelope), truncated to length samples.
Waveform istft(const Stft& coeffs, std::size_t length, int sample_rate = 16000);

/// Per-bin oracle Wiener gains clamp(|S|^2 / |V|^2, 0, 1) applied to V.
/// Bins where |V| = 0 get gain 0 (counted in zero_bins when given).
Stft wiener_gain(const Stft& s, const Stft& v, std::size_t* zero_bins = nullptr);

/// The oracle-filtered training target: STFT both inputs, apply wiener_gain,
/// inverse transform. s is the clean signal, v its reverberated-only
/// counterpart; both must have equal lengths.
Waveform wiener_target(const Waveform& s, const Waveform& v, std::size_t win_len = 512,
                       std::size_t* zero_bins = nullptr);

} // namespace msae

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "msae/waveform.hpp"

namespace msae {

/// Gaussian deviates built from raw mt19937 words via Box-Muller, so the
/// sample stream is identical on every platform (std distributions are
/// implementation-defined).
class PinnedNormal {
public:
    explicit PinnedNormal(std::uint32_t seed) : engine_(seed) {}

    double operator()();

private:
    double uniform01();

    std::mt19937 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

enum class NoiseKind { White, Pink };

/// Unit-RMS noise of the requested color. Pink noise uses a fixed
/// three-pole pole-zero approximation of a -3 dB/octave slope.
Waveform make_noise(std::size_t length, NoiseKind kind, std::uint32_t seed,
                    int sample_rate = 16000);

/// Unit-RMS noise with a crude long-term speech spectrum: white noise
/// through two cascaded one-pole lowpasses (a = 0.82, about 500 Hz at
/// 16 kHz) and a DC-blocking highpass (pole 0.97).
Waveform make_speech_shaped_noise(std::size_t length, std::uint32_t seed,
                                  int sample_rate = 16000);

/// clean + noise scaled so that 10 log10(||clean||^2 / ||noise||^2) equals
/// snr_db. The scaled noise is returned through `noise_out` when non-null.
Waveform mix_at_snr(const Waveform& clean, NoiseKind kind, double snr_db, std::uint32_t seed,
                    Waveform* noise_out = nullptr);

} // namespace msae

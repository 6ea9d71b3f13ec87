#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "msae/errors.hpp"

namespace msae {

/// A finite real-valued sampled signal. Amplitudes are dimensionless,
/// nominally in [-1, 1]; sample_rate is in Hz.
struct Waveform {
    std::vector<double> samples;
    int sample_rate = 16000;

    std::size_t size() const { return samples.size(); }

    /// Throws DomainError if any sample is non-finite or the rate is invalid.
    void validate() const {
        if (sample_rate <= 0)
            throw DomainError("sample_rate must be positive");
        for (double s : samples)
            if (!std::isfinite(s))
                throw DomainError("waveform contains non-finite samples");
    }
};

inline double rms(const std::vector<double>& x) {
    if (x.empty()) return 0.0;
    double acc = 0.0;
    for (double v : x) acc += v * v;
    return std::sqrt(acc / static_cast<double>(x.size()));
}

} // namespace msae

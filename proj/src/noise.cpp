#include "msae/noise.hpp"

#include <cmath>
#include <numbers>

#include "msae/errors.hpp"

namespace msae {

double PinnedNormal::uniform01() {
    return (static_cast<double>(engine_()) + 0.5) / 4294967296.0;
}

double PinnedNormal::operator()() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

namespace {

void normalize_rms(std::vector<double>& x) {
    const double r = rms(x);
    if (r > 0.0) {
        const double inv = 1.0 / r;
        for (double& v : x) v *= inv;
    }
}

} // namespace

Waveform make_noise(std::size_t length, NoiseKind kind, std::uint32_t seed, int sample_rate) {
    PinnedNormal gen(seed);
    Waveform w;
    w.sample_rate = sample_rate;
    w.samples.resize(length);
    if (kind == NoiseKind::White) {
        for (double& v : w.samples) v = gen();
    } else {
        // Paul Kellet's economy pink filter.
        double b0 = 0.0, b1 = 0.0, b2 = 0.0;
        for (double& v : w.samples) {
            const double white = gen();
            b0 = 0.99765 * b0 + white * 0.0990460;
            b1 = 0.96300 * b1 + white * 0.2965164;
            b2 = 0.57000 * b2 + white * 1.0526913;
            v = b0 + b1 + b2 + white * 0.1848;
        }
    }
    normalize_rms(w.samples);
    return w;
}

Waveform make_speech_shaped_noise(std::size_t length, std::uint32_t seed, int sample_rate) {
    PinnedNormal gen(seed);
    Waveform w;
    w.sample_rate = sample_rate;
    w.samples.resize(length);
    double z1 = 0.0, z2 = 0.0, prev_in = 0.0, prev_out = 0.0;
    const double a = 0.82, pole = 0.97;
    for (double& v : w.samples) {
        const double white = gen();
        z1 = (1.0 - a) * white + a * z1;
        z2 = (1.0 - a) * z1 + a * z2;
        const double hp = z2 - prev_in + pole * prev_out;
        prev_in = z2;
        prev_out = hp;
        v = hp;
    }
    normalize_rms(w.samples);
    return w;
}

Waveform mix_at_snr(const Waveform& clean, NoiseKind kind, double snr_db, std::uint32_t seed,
                    Waveform* noise_out) {
    clean.validate();
    const double clean_rms = rms(clean.samples);
    if (clean_rms == 0.0)
        throw DomainError("cannot mix noise against an all-zero signal");
    Waveform noise = make_noise(clean.samples.size(), kind, seed, clean.sample_rate);
    const double scale = clean_rms * std::pow(10.0, -snr_db / 20.0);
    for (double& v : noise.samples) v *= scale;
    Waveform out = clean;
    for (std::size_t i = 0; i < out.samples.size(); ++i)
        out.samples[i] += noise.samples[i];
    if (noise_out) *noise_out = std::move(noise);
    return out;
}

} // namespace msae

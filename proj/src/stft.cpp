#include "msae/stft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "msae/errors.hpp"

namespace msae {
namespace {

struct DftTables {
    std::vector<double> window;      // sqrt periodic Hann
    std::vector<double> cos_table;   // bins x win, row-major
    std::vector<double> sin_table;
    std::size_t win = 0;
    std::size_t bins = 0;

    explicit DftTables(std::size_t n) : win(n), bins(n / 2 + 1) {
        window.resize(n);
        cos_table.resize(bins * n);
        sin_table.resize(bins * n);
        const double nd = static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i)
            window[i] = std::sin(std::numbers::pi * static_cast<double>(i) / nd);
        for (std::size_t m = 0; m < bins; ++m)
            for (std::size_t i = 0; i < n; ++i) {
                const double phase =
                    2.0 * std::numbers::pi * static_cast<double>(m) * static_cast<double>(i) / nd;
                cos_table[m * n + i] = std::cos(phase);
                sin_table[m * n + i] = std::sin(phase);
            }
    }
};

} // namespace

Stft stft(const Waveform& x, std::size_t win_len, std::size_t hop) {
    if (win_len < 2 || win_len % 2 != 0)
        throw DomainError("STFT window must be even and >= 2");
    if (hop != win_len / 2)
        throw DomainError("hop must equal win_len / 2");
    if (x.samples.size() < win_len)
        throw DomainError("signal shorter than one STFT window");

    const DftTables tables(win_len);
    const std::size_t len = x.samples.size();
    const std::size_t frames = (len + hop - 1) / hop;

    Stft out;
    out.win_len = win_len;
    out.hop = hop;
    out.frames = frames;
    out.bins = tables.bins;
    out.re.assign(frames * out.bins, 0.0);
    out.im.assign(frames * out.bins, 0.0);

    std::vector<double> chunk(win_len);
    for (std::size_t l = 0; l < frames; ++l) {
        const std::size_t start = l * hop;
        for (std::size_t i = 0; i < win_len; ++i) {
            const std::size_t idx = start + i;
            chunk[i] = (idx < len ? x.samples[idx] : 0.0) * tables.window[i];
        }
        for (std::size_t m = 0; m < out.bins; ++m) {
            const double* ct = tables.cos_table.data() + m * win_len;
            const double* st = tables.sin_table.data() + m * win_len;
            double acc_re = 0.0, acc_im = 0.0;
            for (std::size_t i = 0; i < win_len; ++i) {
                acc_re += chunk[i] * ct[i];
                acc_im -= chunk[i] * st[i];
            }
            out.real(l, m) = acc_re;
            out.imag(l, m) = acc_im;
        }
    }
    return out;
}

Waveform istft(const Stft& coeffs, std::size_t length, int sample_rate) {
    const std::size_t n = coeffs.win_len;
    if (coeffs.bins != n / 2 + 1)
        throw ConsistencyError("STFT bins do not match the window length");
    const DftTables tables(n);

    std::vector<double> acc(length, 0.0);
    std::vector<double> env(length, 0.0);
    std::vector<double> chunk(n);
    for (std::size_t l = 0; l < coeffs.frames; ++l) {
        // Real inverse DFT from the half spectrum.
        for (std::size_t i = 0; i < n; ++i) {
            double v = 0.0;
            for (std::size_t m = 0; m < coeffs.bins; ++m) {
                const double scale = (m == 0 || m == n / 2) ? 1.0 : 2.0;
                v += scale * (coeffs.real(l, m) * tables.cos_table[m * n + i] -
                              coeffs.imag(l, m) * tables.sin_table[m * n + i]);
            }
            chunk[i] = v / static_cast<double>(n);
        }
        const std::size_t start = l * coeffs.hop;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t idx = start + i;
            if (idx >= length) break;
            acc[idx] += tables.window[i] * chunk[i];
            env[idx] += tables.window[i] * tables.window[i];
        }
    }

    Waveform out;
    out.sample_rate = sample_rate;
    out.samples.resize(length);
    for (std::size_t i = 0; i < length; ++i)
        out.samples[i] = env[i] > 1e-12 ? acc[i] / env[i] : 0.0;
    return out;
}

Stft wiener_gain(const Stft& s, const Stft& v, std::size_t* zero_bins) {
    if (s.frames != v.frames || s.bins != v.bins || s.win_len != v.win_len)
        throw ConsistencyError("STFT pair differs in shape");
    Stft out = v;
    std::size_t zeros = 0;
    for (std::size_t l = 0; l < v.frames; ++l)
        for (std::size_t m = 0; m < v.bins; ++m) {
            const double pv = v.power(l, m);
            double gain;
            if (pv == 0.0) {
                gain = 0.0;
                ++zeros;
            } else {
                gain = std::clamp(s.power(l, m) / pv, 0.0, 1.0);
            }
            out.real(l, m) = gain * v.real(l, m);
            out.imag(l, m) = gain * v.imag(l, m);
        }
    if (zero_bins) *zero_bins = zeros;
    return out;
}

Waveform wiener_target(const Waveform& s, const Waveform& v, std::size_t win_len,
                       std::size_t* zero_bins) {
    if (s.samples.size() != v.samples.size())
        throw ConsistencyError("clean and reverberant waveforms differ in length");
    const Stft cs = stft(s, win_len, win_len / 2);
    const Stft cv = stft(v, win_len, win_len / 2);
    const Stft filtered = wiener_gain(cs, cv, zero_bins);
    return istft(filtered, v.samples.size(), v.sample_rate);
}

} // namespace msae

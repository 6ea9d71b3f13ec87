#include "msae/masking.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "msae/errors.hpp"
#include "msae/framing.hpp"

namespace msae {

GainFloor GainFloor::from_db(double db) {
    if (db > 0.0)
        throw DomainError("gain floor must be <= 0 dB");
    return GainFloor{db};
}

double GainFloor::linear() const {
    return std::pow(10.0, db_value / 20.0);
}

EmbeddingTensor apply_mask(const EmbeddingTensor& z, const MaskTensor& m, GainFloor floor) {
    if (!z.same_shape(m))
        throw ConsistencyError("mask shape does not match embedding shape");
    validate_mask(m);
    const double g_min = floor.linear();
    EmbeddingTensor out(z.frames, z.bins);
    for (std::size_t i = 0; i < z.data.size(); ++i)
        out.data[i] = std::max(g_min, m.data[i]) * z.data[i];
    return out;
}

void validate_mask(const MaskTensor& m) {
    for (double v : m.data)
        if (!(v >= 0.0 && v <= 1.0))
            throw DomainError("mask values must lie in [0, 1]");
}

namespace {

MaskTensor oracle_mask_impl(const EmbeddingTensor& z_target, const EmbeddingTensor& z_noisy,
                            OracleMaskStats* stats, bool wiener) {
    if (!z_target.same_shape(z_noisy))
        throw ConsistencyError("target and noisy embeddings differ in shape");
    MaskTensor m(z_noisy.frames, z_noisy.bins);
    std::size_t zero_den = 0;
    for (std::size_t t = 0; t < z_noisy.frames; ++t)
        for (std::size_t k = 0; k < z_noisy.bins; ++k) {
            const double s_re = z_target.real_part(t, k);
            const double s_im = z_target.imag_part(t, k);
            double gain;
            if (wiener) {
                const double n_re = z_noisy.real_part(t, k) - s_re;
                const double n_im = z_noisy.imag_part(t, k) - s_im;
                const double p_s = s_re * s_re + s_im * s_im;
                const double p_n = n_re * n_re + n_im * n_im;
                const double den = p_s + p_n;
                if (den == 0.0) {
                    ++zero_den;
                    gain = p_s > 0.0 ? 1.0 : 0.0;
                } else {
                    gain = p_s / den;
                }
            } else {
                const double x_re = z_noisy.real_part(t, k);
                const double x_im = z_noisy.imag_part(t, k);
                const double mag_x = std::hypot(x_re, x_im);
                if (mag_x == 0.0) {
                    ++zero_den;
                    gain = 0.0;
                } else {
                    gain = std::min(1.0, std::hypot(s_re, s_im) / mag_x);
                }
            }
            gain = std::clamp(gain, 0.0, 1.0);
            for (std::size_t c = 0; c < Tensor3::channels; ++c)
                m.at(t, k, c) = gain;
        }
    if (stats)
        stats->zero_denominator_bins += zero_den;
    return m;
}

} // namespace

MaskTensor oracle_wiener_mask(const EmbeddingTensor& z_target, const EmbeddingTensor& z_noisy,
                              OracleMaskStats* stats) {
    return oracle_mask_impl(z_target, z_noisy, stats, true);
}

MaskTensor oracle_amplitude_mask(const EmbeddingTensor& z_target, const EmbeddingTensor& z_noisy,
                                 OracleMaskStats* stats) {
    return oracle_mask_impl(z_target, z_noisy, stats, false);
}

MaskTensor UnitMaskSource::make_mask(const EmbeddingTensor& z_noisy, const EmbeddingTensor*) {
    MaskTensor m(z_noisy.frames, z_noisy.bins);
    std::fill(m.data.begin(), m.data.end(), 1.0);
    return m;
}

MaskTensor ZeroMaskSource::make_mask(const EmbeddingTensor& z_noisy, const EmbeddingTensor*) {
    return MaskTensor(z_noisy.frames, z_noisy.bins);
}

MaskTensor WienerOracleSource::make_mask(const EmbeddingTensor& z_noisy,
                                         const EmbeddingTensor* z_target) {
    if (!z_target)
        throw ConsistencyError("Wiener oracle mask needs a parallel target embedding");
    OracleMaskStats local;
    MaskTensor m = oracle_wiener_mask(*z_target, z_noisy, &local);
    std::lock_guard<std::mutex> lock(mutex_);
    stats_.zero_denominator_bins += local.zero_denominator_bins;
    return m;
}

MaskTensor AmplitudeOracleSource::make_mask(const EmbeddingTensor& z_noisy,
                                            const EmbeddingTensor* z_target) {
    if (!z_target)
        throw ConsistencyError("amplitude oracle mask needs a parallel target embedding");
    OracleMaskStats local;
    MaskTensor m = oracle_amplitude_mask(*z_target, z_noisy, &local);
    std::lock_guard<std::mutex> lock(mutex_);
    stats_.zero_denominator_bins += local.zero_denominator_bins;
    return m;
}

Waveform enhance(const Waveform& noisy, MaskSource& source, const MsaeCodec& codec,
                 GainFloor floor, std::size_t frame_len, const Waveform* target,
                 unsigned threads) {
    noisy.validate();
    if (source.needs_target()) {
        if (!target)
            throw ConsistencyError("mask source needs a parallel target waveform");
        if (target->samples.size() != noisy.samples.size())
            throw ConsistencyError("target and noisy waveforms differ in length");
    }

    std::vector<ProcessingFrame> frames = split_frames(noisy, frame_len);

    // Parallel target frames on the same grid, scaled by the noisy frame's
    // gain so oracle coefficient ratios stay consistent.
    std::vector<std::vector<double>> target_frames;
    if (source.needs_target()) {
        target_frames.resize(frames.size());
        for (std::size_t i = 0; i < frames.size(); ++i) {
            std::vector<double>& tf = target_frames[i];
            tf.assign(frame_len, 0.0);
            const std::size_t avail =
                std::min(frame_len, target->samples.size() - frames[i].offset);
            std::copy_n(target->samples.begin() + static_cast<std::ptrdiff_t>(frames[i].offset),
                        avail, tf.begin());
            if (frames[i].original_gain > 0.0) {
                const double inv = 1.0 / frames[i].original_gain;
                for (double& v : tf) v *= inv;
            } else {
                std::fill(tf.begin(), tf.end(), 0.0);
            }
        }
    }

    // Frames are independent; each writes only its own payload slot, so any
    // thread count yields identical output. Mask sources must be
    // internally synchronized (the bundled ones are).
    auto process_range = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            if (frames[i].original_gain == 0.0) continue;
            EmbeddingTensor z = codec.encode(frames[i].payload);
            EmbeddingTensor z_target;
            const EmbeddingTensor* target_ptr = nullptr;
            if (source.needs_target()) {
                z_target = codec.encode(target_frames[i]);
                target_ptr = &z_target;
            }
            const MaskTensor m = source.make_mask(z, target_ptr);
            frames[i].payload = codec.decode(apply_mask(z, m, floor), frame_len);
        }
    };
    if (threads <= 1 || frames.size() <= 1) {
        process_range(0, frames.size());
    } else {
        const unsigned n_workers = std::min<unsigned>(threads, static_cast<unsigned>(frames.size()));
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        const std::size_t chunk = (frames.size() + n_workers - 1) / n_workers;
        for (unsigned w = 0; w < n_workers; ++w) {
            const std::size_t lo = w * chunk;
            const std::size_t hi = std::min(frames.size(), lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(process_range, lo, hi);
        }
        for (std::thread& th : pool) th.join();
    }

    return overlap_add(frames, noisy.samples.size(), noisy.sample_rate);
}

} // namespace msae

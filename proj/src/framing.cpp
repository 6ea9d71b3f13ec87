#include "msae/framing.hpp"

#include <algorithm>
#include <cmath>

#include "msae/errors.hpp"

namespace msae {

std::vector<ProcessingFrame> split_frames(const Waveform& w, std::size_t frame_len,
                                          double overlap) {
    if (frame_len == 0 || frame_len % 2 != 0)
        throw ConfigError("frame_len must be positive and even");
    if (overlap != 0.5)
        throw ConfigError("only 50% overlap is supported");
    if (w.samples.empty())
        throw DomainError("cannot split an empty waveform");

    const std::size_t stride = frame_len / 2;
    const std::size_t len = w.samples.size();
    const std::size_t count = (len + stride - 1) / stride;

    std::vector<ProcessingFrame> frames;
    frames.reserve(count);
    for (std::size_t t = 0; t < count; ++t) {
        ProcessingFrame f;
        f.offset = t * stride;
        f.payload.assign(frame_len, 0.0);
        const std::size_t avail = std::min(frame_len, len - f.offset);
        std::copy_n(w.samples.begin() + static_cast<std::ptrdiff_t>(f.offset), avail,
                    f.payload.begin());
        f.original_gain = rms(f.payload);
        if (f.original_gain > 0.0) {
            const double inv = 1.0 / f.original_gain;
            for (double& v : f.payload) v *= inv;
        }
        frames.push_back(std::move(f));
    }
    return frames;
}

Waveform overlap_add(const std::vector<ProcessingFrame>& frames, std::size_t total_len,
                     int sample_rate) {
    Waveform out;
    out.sample_rate = sample_rate;
    out.samples.assign(total_len, 0.0);
    if (frames.empty())
        return out;

    const std::size_t frame_len = frames.front().payload.size();
    if (frame_len == 0 || frame_len % 2 != 0)
        throw ConsistencyError("frames must hold even, non-empty payloads");
    const std::size_t stride = frame_len / 2;
    const std::size_t half = stride;

    for (std::size_t t = 0; t < frames.size(); ++t) {
        const ProcessingFrame& f = frames[t];
        if (f.payload.size() != frame_len)
            throw ConsistencyError("inconsistent frame lengths");
        if (f.offset != t * stride)
            throw ConsistencyError("frame offsets do not match a 50% overlap grid");

        const bool first = (t == 0);
        const bool last = (t + 1 == frames.size());
        for (std::size_t j = 0; j < frame_len; ++j) {
            const std::size_t n = f.offset + j;
            if (n >= total_len) break;
            double weight;
            if (j < half)
                weight = first ? 1.0 : static_cast<double>(j) / static_cast<double>(half);
            else
                weight = last ? 1.0 : 1.0 - static_cast<double>(j - half) / static_cast<double>(half);
            out.samples[n] += weight * f.original_gain * f.payload[j];
        }
    }
    return out;
}

} // namespace msae

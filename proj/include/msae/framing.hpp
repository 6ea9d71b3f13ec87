#pragma once

#include <cstddef>
#include <vector>

#include "msae/waveform.hpp"

namespace msae {

/// One windowed processing segment: a frame_len slice of the source, scaled
/// to unit RMS. All-zero slices keep original_gain = 0 and stay zero.
struct ProcessingFrame {
    std::vector<double> payload;
    double original_gain = 0.0;
    std::size_t offset = 0;
};

/// Splits a waveform into frames of frame_len samples at 50% overlap
/// (stride frame_len/2). Frames start at every multiple of the stride below
/// the signal length; the trailing frame is zero-padded. Each payload is
/// scaled by 1/RMS with the gain stored for later restoration.
std::vector<ProcessingFrame> split_frames(const Waveform& w, std::size_t frame_len,
                                          double overlap = 0.5);

/// Rebuilds a waveform of total_len samples: payloads are multiplied by
/// their stored gains and cross-faded with triangular weights over the
/// overlapped halves (weights sum to 1 at every sample; the first frame's
/// leading half and the last frame's trailing half use weight 1).
Waveform overlap_add(const std::vector<ProcessingFrame>& frames, std::size_t total_len,
                     int sample_rate = 16000);

} // namespace msae

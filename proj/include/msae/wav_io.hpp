#pragma once

#include <string>

#include "msae/waveform.hpp"

namespace msae {

enum class WavEncoding { Pcm16, Float32 };

/// Reads a RIFF/WAVE file holding 16-bit integer PCM or 32-bit IEEE float
/// samples. Multichannel files yield channel 0. Integer samples are scaled
/// by 1/32768.
Waveform read_wav(const std::string& path);

/// Writes a mono RIFF/WAVE file. Pcm16 clamps to [-1, 1] and quantizes with
/// scale 32768 (round-trip error at most 1/32768 per sample); Float32 stores
/// IEEE single precision.
void write_wav(const std::string& path, const Waveform& w,
               WavEncoding encoding = WavEncoding::Float32);

} // namespace msae

#pragma once

#include <cstddef>
#include <mutex>

#include "msae/multiscale.hpp"
#include "msae/tensor.hpp"
#include "msae/waveform.hpp"

namespace msae {

/// Minimum mask gain. Stored in amplitude decibels; linear = 10^(dB/20).
struct GainFloor {
    double db_value = -50.0;

    static GainFloor from_db(double db);
    double linear() const;
};

/// Element-wise enhanced embedding: out[i] = max(floor, M[i]) * Z[i].
/// A 0 dB floor reproduces Z regardless of the mask (autoencoder path).
EmbeddingTensor apply_mask(const EmbeddingTensor& z, const MaskTensor& m, GainFloor floor);

struct OracleMaskStats {
    std::size_t zero_denominator_bins = 0;
};

/// Wiener-style oracle gain per (frame, bin): P_s / (P_s + P_n) on the
/// squared complex moduli of the target coefficient and of the
/// (noisy - target) difference, clamped to [0, 1] and broadcast across the
/// 4 channels. Bins with zero total power get gain 0 (counted in stats).
MaskTensor oracle_wiener_mask(const EmbeddingTensor& z_target, const EmbeddingTensor& z_noisy,
                              OracleMaskStats* stats = nullptr);

/// Ideal-ratio-style amplitude gain: min(1, |c_target| / |c_noisy|),
/// 0 where the noisy modulus vanishes.
MaskTensor oracle_amplitude_mask(const EmbeddingTensor& z_target, const EmbeddingTensor& z_noisy,
                                 OracleMaskStats* stats = nullptr);

/// Maps a noisy embedding (plus, for oracle sources, the parallel target
/// embedding) to a mask. Implementations must be pure and stateless apart
/// from accumulated statistics.
class MaskSource {
public:
    virtual ~MaskSource() = default;
    virtual bool needs_target() const { return false; }
    virtual MaskTensor make_mask(const EmbeddingTensor& z_noisy,
                                 const EmbeddingTensor* z_target) = 0;
};

/// mask == 1 everywhere: the autoencoder path.
class UnitMaskSource final : public MaskSource {
public:
    MaskTensor make_mask(const EmbeddingTensor& z_noisy, const EmbeddingTensor*) override;
};

/// mask == 0 everywhere: full suppression down to the gain floor.
class ZeroMaskSource final : public MaskSource {
public:
    MaskTensor make_mask(const EmbeddingTensor& z_noisy, const EmbeddingTensor*) override;
};

class WienerOracleSource final : public MaskSource {
public:
    bool needs_target() const override { return true; }
    MaskTensor make_mask(const EmbeddingTensor& z_noisy, const EmbeddingTensor* z_target) override;
    OracleMaskStats stats() const {
        std::lock_guard<std::mutex> lock(mutex_);
        return stats_;
    }

private:
    mutable std::mutex mutex_;
    OracleMaskStats stats_;
};

class AmplitudeOracleSource final : public MaskSource {
public:
    bool needs_target() const override { return true; }
    MaskTensor make_mask(const EmbeddingTensor& z_noisy, const EmbeddingTensor* z_target) override;
    OracleMaskStats stats() const {
        std::lock_guard<std::mutex> lock(mutex_);
        return stats_;
    }

private:
    mutable std::mutex mutex_;
    OracleMaskStats stats_;
};

/// Full enhancement pipeline: split into frames at 50% overlap, scale each
/// to unit RMS, encode, mask with the floor, decode, restore gains, and
/// overlap-add back to the input length. When the mask source needs a
/// target, the parallel target waveform is framed on the same grid and
/// scaled by the noisy frame's gain so coefficient ratios stay consistent.
/// Frames are processed in parallel across `threads` workers; the output is
/// identical for any thread count.
Waveform enhance(const Waveform& noisy, MaskSource& source, const MsaeCodec& codec,
                 GainFloor floor, std::size_t frame_len = 20480,
                 const Waveform* target = nullptr, unsigned threads = 1);

} // namespace msae

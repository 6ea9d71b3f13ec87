#pragma once

#include <cstddef>
#include <vector>

#include "msae/errors.hpp"

namespace msae {

/// A frames x bins x 4 tensor of non-negative reals, layout [t][k][c].
/// Channel order is [relu(re), relu(-re), relu(im), relu(-im)], so the raw
/// correlations are recovered as channel differences 0-1 and 2-3.
struct Tensor3 {
    std::size_t frames = 0;
    std::size_t bins = 0;
    static constexpr std::size_t channels = 4;
    std::vector<double> data;

    Tensor3() = default;
    Tensor3(std::size_t t, std::size_t k)
        : frames(t), bins(k), data(t * k * channels, 0.0) {}

    double& at(std::size_t t, std::size_t k, std::size_t c) {
        return data[(t * bins + k) * channels + c];
    }
    double at(std::size_t t, std::size_t k, std::size_t c) const {
        return data[(t * bins + k) * channels + c];
    }

    bool same_shape(const Tensor3& other) const {
        return frames == other.frames && bins == other.bins;
    }

    double real_part(std::size_t t, std::size_t k) const {
        return at(t, k, 0) - at(t, k, 1);
    }
    double imag_part(std::size_t t, std::size_t k) const {
        return at(t, k, 2) - at(t, k, 3);
    }

    /// Stores a complex correlation as the 4-channel non-negative encoding.
    void set_complex(std::size_t t, std::size_t k, double re, double im) {
        at(t, k, 0) = re > 0.0 ? re : 0.0;
        at(t, k, 1) = re < 0.0 ? -re : 0.0;
        at(t, k, 2) = im > 0.0 ? im : 0.0;
        at(t, k, 3) = im < 0.0 ? -im : 0.0;
    }
};

/// The per-branch analysis output Y.
using BranchTensor = Tensor3;

/// The concatenated multiscale embedding Z (branch blocks along the bin
/// axis, lowest band first).
using EmbeddingTensor = Tensor3;

/// A gain tensor with every element in [0, 1], shaped like the embedding
/// it masks.
using MaskTensor = Tensor3;

/// Throws DomainError unless every element of m lies in [0, 1].
void validate_mask(const MaskTensor& m);

} // namespace msae

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "msae/band_plan.hpp"
#include "msae/kernel_set.hpp"
#include "msae/tensor.hpp"

namespace msae {

/// Geometry of the multiscale codec: branch b (1-based, lowest band first)
/// analyzes band (edge_{b-1}, edge_b) with window length 2^(B-b) * base_window.
struct MsaeConfig {
    BandPlan plan;
    std::size_t base_window = 40;  // N_o samples (2.5 ms at 16 kHz)
    double overcompleteness = 1.0; // kappa

    int num_branches() const { return plan.num_bands(); }
    std::size_t branch_window(int branch) const {
        return base_window << (num_branches() - branch);
    }
    std::size_t repetition(int branch) const {
        return std::size_t{1} << (num_branches() - branch);
    }
    /// Segment lengths must be a multiple of this (the largest branch window).
    std::size_t required_multiple() const { return branch_window(1); }
    void validate() const;
};

/// The multiscale encoder/decoder pair. Kernel sets for every branch are
/// built once at construction.
class MsaeCodec {
public:
    explicit MsaeCodec(MsaeConfig config);

    const MsaeConfig& config() const { return config_; }

    /// Bins contributed by each branch block, lowest band first.
    const std::vector<std::size_t>& branch_bins() const { return branch_bins_; }
    /// Total bins K_T of the embedding.
    std::size_t total_bins() const { return total_bins_; }
    /// Embedding frames for a segment of length d: floor(2 d / N_o).
    std::size_t frame_count(std::size_t segment_len) const {
        return 2 * segment_len / config_.base_window;
    }

    /// Analyzes every branch, upsamples each block to the base frame rate by
    /// frame repetition, and concatenates blocks along the bin axis.
    /// segment.size() must be a positive multiple of required_multiple().
    EmbeddingTensor encode(std::span<const double> segment) const;

    /// Splits the embedding into branch blocks, max-pools each in time per
    /// channel (pool size = stride = the branch repetition factor), runs the
    /// branch synthesis, and sums the band-limited outputs.
    std::vector<double> decode(const EmbeddingTensor& embedding, std::size_t out_len) const;

    /// Per-branch decode (diagnostics): the band-limited component branch b
    /// contributes to decode's sum.
    std::vector<double> decode_branch(const EmbeddingTensor& embedding, int branch,
                                      std::size_t out_len) const;

    const KernelSet& analysis_kernels(int branch) const {
        return analysis_[static_cast<std::size_t>(branch - 1)];
    }
    const KernelSet& synthesis_kernels(int branch) const {
        return synthesis_[static_cast<std::size_t>(branch - 1)];
    }

private:
    void check_segment(std::size_t len) const;
    BranchTensor pooled_branch(const EmbeddingTensor& embedding, int branch) const;

    MsaeConfig config_;
    std::vector<KernelSet> analysis_;
    std::vector<KernelSet> synthesis_;
    std::vector<std::size_t> branch_bins_;
    std::vector<std::size_t> branch_offsets_;
    std::size_t total_bins_ = 0;
};

/// RMS across the 4 channels: out[t,k] = sqrt(sum_c Z[t,k,c]^2 / 4),
/// flattened row-major (frames x bins).
std::vector<double> magnitude(const EmbeddingTensor& z);

/// Closed-form embedding bin count for kappa = 1:
/// K_T = B + sum_b (floor(2^(B-b-1) N_o w_b) - ceil(2^(B-b-1) N_o w_{b-1})).
long embedding_bins_closed_form(const MsaeConfig& config);

} // namespace msae

#include "msae/multiscale.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "msae/errors.hpp"
#include "msae/transform.hpp"

namespace msae {

void MsaeConfig::validate() const {
    plan.validate();
    if (base_window < 2 || base_window % 2 != 0)
        throw ConfigError("base window must be even and >= 2");
    if (overcompleteness < 1.0)
        throw ConfigError("overcompleteness must be >= 1");
    for (int b = 1; b <= num_branches(); ++b) {
        const long count = kernel_count(branch_window(b), plan.edges[static_cast<std::size_t>(b - 1)],
                                        plan.edges[static_cast<std::size_t>(b)], overcompleteness);
        if (count < 1)
            throw ConfigError("branch " + std::to_string(b) + " band maps to no DFT bins");
    }
}

MsaeCodec::MsaeCodec(MsaeConfig config) : config_(std::move(config)) {
    config_.validate();
    const int branches = config_.num_branches();
    analysis_.reserve(static_cast<std::size_t>(branches));
    synthesis_.reserve(static_cast<std::size_t>(branches));
    for (int b = 1; b <= branches; ++b) {
        const double lo = config_.plan.edges[static_cast<std::size_t>(b - 1)];
        const double hi = config_.plan.edges[static_cast<std::size_t>(b)];
        const std::size_t window = config_.branch_window(b);
        analysis_.push_back(build_kernels(window, lo, hi, config_.overcompleteness, false));
        synthesis_.push_back(build_kernels(window, lo, hi, config_.overcompleteness, true));
        branch_offsets_.push_back(total_bins_);
        branch_bins_.push_back(analysis_.back().num_filters());
        total_bins_ += branch_bins_.back();
    }
}

void MsaeCodec::check_segment(std::size_t len) const {
    const std::size_t mult = config_.required_multiple();
    if (len == 0 || len % mult != 0)
        throw ConfigError("segment length " + std::to_string(len) + " must be a multiple of " +
                          std::to_string(mult) + " (2^(B-1) * base window)");
}

EmbeddingTensor MsaeCodec::encode(std::span<const double> segment) const {
    check_segment(segment.size());
    const std::size_t t_total = frame_count(segment.size());
    EmbeddingTensor z(t_total, total_bins_);
    for (int b = 1; b <= config_.num_branches(); ++b) {
        const BranchTensor y = analyze(segment, analysis_[static_cast<std::size_t>(b - 1)]);
        const std::size_t rep = config_.repetition(b);
        const std::size_t offset = branch_offsets_[static_cast<std::size_t>(b - 1)];
        for (std::size_t t = 0; t < y.frames; ++t)
            for (std::size_t r = 0; r < rep; ++r)
                for (std::size_t k = 0; k < y.bins; ++k)
                    for (std::size_t c = 0; c < Tensor3::channels; ++c)
                        z.at(t * rep + r, offset + k, c) = y.at(t, k, c);
    }
    return z;
}

BranchTensor MsaeCodec::pooled_branch(const EmbeddingTensor& embedding, int branch) const {
    const std::size_t rep = config_.repetition(branch);
    const std::size_t offset = branch_offsets_[static_cast<std::size_t>(branch - 1)];
    const std::size_t bins = branch_bins_[static_cast<std::size_t>(branch - 1)];
    const std::size_t t_out = embedding.frames / rep;
    BranchTensor y(t_out, bins);
    for (std::size_t t = 0; t < t_out; ++t)
        for (std::size_t k = 0; k < bins; ++k)
            for (std::size_t c = 0; c < Tensor3::channels; ++c) {
                double peak = 0.0;
                for (std::size_t r = 0; r < rep; ++r)
                    peak = std::max(peak, embedding.at(t * rep + r, offset + k, c));
                y.at(t, k, c) = peak;
            }
    return y;
}

std::vector<double> MsaeCodec::decode(const EmbeddingTensor& embedding,
                                      std::size_t out_len) const {
    check_segment(out_len);
    if (embedding.bins != total_bins_ || embedding.frames != frame_count(out_len))
        throw ConsistencyError("embedding shape " + std::to_string(embedding.frames) + "x" +
                               std::to_string(embedding.bins) + " does not match configuration");
    std::vector<double> out(out_len, 0.0);
    for (int b = 1; b <= config_.num_branches(); ++b) {
        const BranchTensor y = pooled_branch(embedding, b);
        const std::vector<double> part =
            synthesize(y, synthesis_[static_cast<std::size_t>(b - 1)], out_len);
        for (std::size_t i = 0; i < out_len; ++i) out[i] += part[i];
    }
    return out;
}

std::vector<double> MsaeCodec::decode_branch(const EmbeddingTensor& embedding, int branch,
                                             std::size_t out_len) const {
    check_segment(out_len);
    if (branch < 1 || branch > config_.num_branches())
        throw DomainError("branch index out of range");
    if (embedding.bins != total_bins_ || embedding.frames != frame_count(out_len))
        throw ConsistencyError("embedding shape does not match configuration");
    const BranchTensor y = pooled_branch(embedding, branch);
    return synthesize(y, synthesis_[static_cast<std::size_t>(branch - 1)], out_len);
}

std::vector<double> magnitude(const EmbeddingTensor& z) {
    std::vector<double> m(z.frames * z.bins);
    for (std::size_t t = 0; t < z.frames; ++t)
        for (std::size_t k = 0; k < z.bins; ++k) {
            double acc = 0.0;
            for (std::size_t c = 0; c < Tensor3::channels; ++c) {
                const double v = z.at(t, k, c);
                acc += v * v;
            }
            m[t * z.bins + k] = std::sqrt(acc / 4.0);
        }
    return m;
}

long embedding_bins_closed_form(const MsaeConfig& config) {
    const int branches = config.num_branches();
    long total = branches;
    for (int b = 1; b <= branches; ++b) {
        const double scale = std::pow(2.0, branches - b - 1) * static_cast<double>(config.base_window);
        const double hi = config.plan.edges[static_cast<std::size_t>(b)];
        const double lo = config.plan.edges[static_cast<std::size_t>(b - 1)];
        total += static_cast<long>(std::floor(scale * hi)) - static_cast<long>(std::ceil(scale * lo));
    }
    return total;
}

} // namespace msae

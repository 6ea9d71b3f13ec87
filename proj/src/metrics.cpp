#include "msae/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "msae/errors.hpp"

namespace msae {

double mse(std::span<const double> s, std::span<const double> s_hat) {
    if (s.size() != s_hat.size())
        throw DomainError("mse needs equal-length signals");
    if (s.empty())
        throw DomainError("mse needs at least one sample");
    double acc = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double d = s[i] - s_hat[i];
        acc += d * d;
    }
    return acc / static_cast<double>(s.size());
}

double mu_law(double v, double mu) {
    if (mu < 0.0)
        throw DomainError("mu must be >= 0");
    if (mu == 0.0)
        return v;
    const double sign = v < 0.0 ? -1.0 : 1.0;
    return sign * std::log1p(mu * std::fabs(v)) / std::log1p(mu);
}

double pmse(std::span<const double> s, std::span<const double> s_hat, PmseParams params) {
    if (s.size() != s_hat.size())
        throw DomainError("pmse needs equal-length signals");
    if (s.empty())
        throw DomainError("pmse needs at least one sample");
    double acc = 0.0;
    double prev_s = 0.0, prev_e = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double a = mu_law(s[i] - params.beta * prev_s, params.mu);
        const double b = mu_law(s_hat[i] - params.beta * prev_e, params.mu);
        const double d = a - b;
        acc += d * d;
        prev_s = s[i];
        prev_e = s_hat[i];
    }
    return acc / static_cast<double>(s.size());
}

double dual_path_loss(std::span<const double> s, std::span<const double> s_hat,
                      std::span<const double> x, std::span<const double> x_hat,
                      PmseParams params) {
    return pmse(s, s_hat, params) + pmse(x, x_hat, params);
}

SpeechActivityWeights activity_weights(const std::vector<std::uint8_t>& is_active, double prior) {
    if (!(prior >= 0.0 && prior <= 1.0))
        throw DomainError("activity prior must lie in [0, 1]");
    if (is_active.empty())
        throw DomainError("activity flags must be non-empty");
    SpeechActivityWeights w;
    w.prior = prior;
    for (std::uint8_t f : is_active)
        (f ? w.active : w.inactive) += 1;
    if (w.active == 0 || w.inactive == 0) {
        w.w_active = 1.0;
        w.w_inactive = 1.0;
        return w;
    }
    const double total = static_cast<double>(w.active + w.inactive);
    w.w_active = prior * total / static_cast<double>(w.active);
    w.w_inactive = (1.0 - prior) * total / static_cast<double>(w.inactive);
    return w;
}

std::vector<std::uint8_t> detect_activity(const Waveform& reference) {
    const std::size_t len = reference.samples.size();
    std::vector<std::uint8_t> flags(len, 0);
    if (len == 0) return flags;
    const double global = rms(reference.samples);
    const double threshold = 0.01 * global;
    const std::size_t frame =
        std::max<std::size_t>(1, static_cast<std::size_t>(reference.sample_rate) / 50); // 20 ms
    for (std::size_t start = 0; start < len; start += frame) {
        const std::size_t end = std::min(len, start + frame);
        double acc = 0.0;
        for (std::size_t i = start; i < end; ++i)
            acc += reference.samples[i] * reference.samples[i];
        const double frame_rms = std::sqrt(acc / static_cast<double>(end - start));
        if (frame_rms > threshold)
            std::fill(flags.begin() + static_cast<std::ptrdiff_t>(start),
                      flags.begin() + static_cast<std::ptrdiff_t>(end), std::uint8_t{1});
    }
    return flags;
}

namespace {

double energy(std::span<const double> x) {
    double acc = 0.0;
    for (double v : x) acc += v * v;
    return acc;
}

} // namespace

double snr_db(std::span<const double> reference, std::span<const double> estimate) {
    if (reference.size() != estimate.size())
        throw DomainError("snr_db needs equal-length signals");
    const double ref_e = energy(reference);
    if (ref_e == 0.0)
        throw DomainError("snr_db reference must carry energy");
    double err_e = 0.0;
    for (std::size_t i = 0; i < reference.size(); ++i) {
        const double d = reference[i] - estimate[i];
        err_e += d * d;
    }
    if (err_e == 0.0)
        return 120.0;
    return std::min(120.0, 10.0 * std::log10(ref_e / err_e));
}

double reconstruction_error_db(std::span<const double> x, std::span<const double> x_hat) {
    if (x.size() != x_hat.size())
        throw DomainError("reconstruction_error_db needs equal-length signals");
    const double ref_e = energy(x);
    if (ref_e == 0.0)
        throw DomainError("reconstruction_error_db reference must carry energy");
    double err_e = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - x_hat[i];
        err_e += d * d;
    }
    if (err_e == 0.0)
        return -120.0;
    return std::max(-120.0, 10.0 * std::log10(err_e / ref_e));
}

} // namespace msae

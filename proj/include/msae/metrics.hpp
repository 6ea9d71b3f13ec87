#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "msae/waveform.hpp"

namespace msae {

/// Pre-emphasis and companding constants for the perceptual MSE.
/// mu = 0 means identity companding; beta = 0 disables pre-emphasis, and
/// both together reduce pmse to plain mse exactly.
struct PmseParams {
    double beta = 0.97;
    double mu = 255.0;
};

/// Mean squared error (1/D) sum (s - s_hat)^2 over equal-length signals.
double mse(std::span<const double> s, std::span<const double> s_hat);

/// mu-law companding sign(v) log(1 + mu |v|) / log(1 + mu); identity at mu=0.
double mu_law(double v, double mu);

/// Mean squared error of the pre-emphasized, companded sequences
/// f_mu(s(n) - beta s(n-1)), with s(-1) taken as 0.
double pmse(std::span<const double> s, std::span<const double> s_hat, PmseParams params);

/// pmse(s, s_hat) + pmse(x, x_hat): enhancement error plus autoencoder
/// reconstruction error.
double dual_path_loss(std::span<const double> s, std::span<const double> s_hat,
                      std::span<const double> x, std::span<const double> x_hat,
                      PmseParams params);

struct SpeechActivityWeights {
    double prior = 0.5;        // pi
    std::size_t active = 0;    // M_1
    std::size_t inactive = 0;  // M_0
    double w_active = 1.0;
    double w_inactive = 1.0;
};

/// Per-sample weights w_active = pi (M0 + M1) / M1 and
/// w_inactive = (1 - pi)(M0 + M1) / M0. Degenerate batches (all active or
/// all inactive) fall back to unit weights. The weights preserve the total
/// mass: w_active M1 + w_inactive M0 = M0 + M1.
SpeechActivityWeights activity_weights(const std::vector<std::uint8_t>& is_active, double prior);

/// Energy-based activity flags: 20 ms frames, active iff the frame RMS
/// exceeds 0.01 x the global RMS.
std::vector<std::uint8_t> detect_activity(const Waveform& reference);

/// 10 log10(||ref||^2 / ||ref - est||^2), capped at 120 dB. The reference
/// must carry energy.
double snr_db(std::span<const double> reference, std::span<const double> estimate);

/// 10 log10(||x - x_hat||^2 / ||x||^2), capped at -120 dB (smaller is
/// better; 0 dB means the error carries as much energy as the signal).
double reconstruction_error_db(std::span<const double> x, std::span<const double> x_hat);

} // namespace msae

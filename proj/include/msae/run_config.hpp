#pragma once

#include <string>

#include "msae/multiscale.hpp"

namespace msae {

/// Flat, human-editable pipeline configuration. The defaults encode the
/// (B=5, Q=2.0, T_o=2.5 ms) operating point with a 20480-sample processing
/// window and a -50 dB mask floor.
struct RunConfig {
    int branches = 5;
    double quality_factor = 2.0;
    double base_window_ms = 2.5;
    double overcompleteness = 1.0;
    std::size_t frame_len = 20480;
    double floor_db = -50.0;
    std::size_t stft_win = 512;
    double pmse_beta = 0.97;
    double pmse_mu = 255.0;
    double activity_prior = 0.75;
    int sample_rate = 16000;

    std::size_t base_window_samples() const;
    MsaeConfig msae_config() const;
    void validate() const;
};

/// key=value per line; '#' starts a comment. Unknown keys are rejected.
RunConfig load_run_config(const std::string& path);
void save_run_config(const std::string& path, const RunConfig& config);

std::string run_config_to_text(const RunConfig& config);
RunConfig run_config_from_text(const std::string& text);

} // namespace msae

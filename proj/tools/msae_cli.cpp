// Command line front end: band design, spectrogram export, autoencoder
// reconstruction, oracle-mask enhancement, Wiener target generation,
// waveform metrics, and a small deterministic noise mixer.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "msae/band_plan.hpp"
#include "msae/errors.hpp"
#include "msae/framing.hpp"
#include "msae/masking.hpp"
#include "msae/metrics.hpp"
#include "msae/multiscale.hpp"
#include "msae/noise.hpp"
#include "msae/run_config.hpp"
#include "msae/stft.hpp"
#include "msae/wav_io.hpp"

using json = nlohmann::ordered_json;

namespace {

struct CommonOptions {
    std::string config_path;
    msae::RunConfig base;
    bool config_loaded = false;

    msae::RunConfig resolve() const { return base; }
};

void add_config_flag(CLI::App* cmd, CommonOptions& common) {
    cmd->add_option_function<std::string>(
           "--config",
           [&common](const std::string& path) {
               if (path != "default") {
                   common.base = msae::load_run_config(path);
                   common.config_loaded = true;
               }
           },
           "Pipeline config file (key=value lines); 'default' for built-ins");
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::trunc | std::ios::binary);
    if (!out)
        throw msae::IoError("cannot open '" + path + "' for writing");
    out << text;
    if (!out)
        throw msae::IoError("short write to '" + path + "'");
}

void emit_json(const json& j, const std::string& out_path) {
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_text(out_path, text);
}

void check_rate(const msae::Waveform& w, const msae::RunConfig& cfg, const std::string& what) {
    if (w.sample_rate != cfg.sample_rate)
        throw msae::ConfigError(what + " is sampled at " + std::to_string(w.sample_rate) +
                                " Hz but the pipeline expects " +
                                std::to_string(cfg.sample_rate) + " Hz");
}

// Magnitude rows for every processing frame, stacked in time order.
struct SpectrogramRows {
    std::size_t bins = 0;
    std::vector<double> rows; // row-major
};

SpectrogramRows collect_magnitude(const msae::Waveform& w, const msae::RunConfig& cfg) {
    const msae::MsaeCodec codec(cfg.msae_config());
    SpectrogramRows out;
    out.bins = codec.total_bins();
    for (const auto& frame : msae::split_frames(w, cfg.frame_len)) {
        const msae::EmbeddingTensor z = codec.encode(frame.payload);
        const std::vector<double> m = msae::magnitude(z);
        out.rows.insert(out.rows.end(), m.begin(), m.end());
    }
    return out;
}

void write_csv(const std::string& path, const SpectrogramRows& spec) {
    std::string text;
    char buf[32];
    const std::size_t rows = spec.rows.size() / spec.bins;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t k = 0; k < spec.bins; ++k) {
            std::snprintf(buf, sizeof buf, "%.9g", spec.rows[r * spec.bins + k]);
            if (k) text.push_back(',');
            text += buf;
        }
        text.push_back('\n');
    }
    write_text(path, text);
}

void write_pgm(const std::string& path, const SpectrogramRows& spec) {
    const std::size_t rows = spec.rows.size() / spec.bins;
    double peak = 0.0;
    for (double v : spec.rows) peak = std::max(peak, std::log10(1.0 + v));
    std::string text = "P5\n" + std::to_string(spec.bins) + " " + std::to_string(rows) + "\n255\n";
    for (double v : spec.rows) {
        const double level = peak > 0.0 ? std::log10(1.0 + v) / peak : 0.0;
        text.push_back(static_cast<char>(static_cast<unsigned char>(
            std::lround(255.0 * std::clamp(level, 0.0, 1.0)))));
    }
    write_text(path, text);
}

int run(int argc, char** argv) {
    CLI::App app{"Multiscale Constant-Q analysis/synthesis filterbank pipeline"};
    app.require_subcommand(1);
    CommonOptions common;

    // --- design-bands ----------------------------------------------------
    auto* design = app.add_subcommand("design-bands", "Print Constant-Q band edges as JSON");
    int design_branches = 5;
    double design_q = 2.0;
    bool design_uniform = false;
    std::string design_out;
    design->add_option("--branches", design_branches, "Number of bands B");
    design->add_option("--q", design_q, "Quality factor (> 0.5)");
    design->add_flag("--uniform", design_uniform, "Uniform-width bands instead of Constant-Q");
    design->add_option("--out", design_out, "Write JSON here instead of stdout");
    design->callback([&] {
        const msae::BandPlan plan = design_uniform ? msae::uniform_plan(design_branches)
                                                   : msae::constant_q_plan(design_branches, design_q);
        json j;
        j["branches"] = plan.num_bands();
        if (plan.quality_factor) j["q"] = *plan.quality_factor;
        j["edges"] = plan.edges;
        json hz = json::array();
        for (double e : plan.edges) hz.push_back(e * 8000.0);
        j["edges_hz"] = hz;
        json measured = json::array();
        for (int b = 1; b <= plan.num_bands(); ++b) measured.push_back(msae::measured_q(plan, b));
        j["measured_q"] = measured;
        emit_json(j, design_out);
    });

    // --- analyze ----------------------------------------------------------
    auto* analyze_cmd = app.add_subcommand("analyze", "Export the multiscale magnitude spectrogram");
    add_config_flag(analyze_cmd, common);
    std::string analyze_in, analyze_out, analyze_format = "auto";
    analyze_cmd->add_option("input", analyze_in, "Input wav file")->required();
    analyze_cmd->add_option("--out", analyze_out, "Output .csv or .pgm path")->required();
    analyze_cmd->add_option("--format", analyze_format, "csv | pgm (default: by extension)");
    analyze_cmd->callback([&] {
        const msae::RunConfig cfg = common.resolve();
        cfg.validate();
        msae::Waveform w = msae::read_wav(analyze_in);
        check_rate(w, cfg, "input");
        const SpectrogramRows spec = collect_magnitude(w, cfg);
        std::string format = analyze_format;
        if (format == "auto")
            format = analyze_out.size() > 4 && analyze_out.ends_with(".pgm") ? "pgm" : "csv";
        if (format == "csv")
            write_csv(analyze_out, spec);
        else if (format == "pgm")
            write_pgm(analyze_out, spec);
        else
            throw msae::ConfigError("unknown spectrogram format '" + format + "'");
    });

    // --- reconstruct -------------------------------------------------------
    auto* recon = app.add_subcommand("reconstruct", "Autoencoder round trip (encode then decode)");
    add_config_flag(recon, common);
    std::string recon_in, recon_out;
    bool recon_report = false;
    unsigned recon_threads = 1;
    recon->add_option("input", recon_in, "Input wav file")->required();
    recon->add_option("output", recon_out, "Output wav file")->required();
    recon->add_flag("--report", recon_report, "Print the reconstruction error in dB");
    recon->add_option("--threads", recon_threads, "Worker threads");
    recon->callback([&] {
        const msae::RunConfig cfg = common.resolve();
        cfg.validate();
        msae::Waveform w = msae::read_wav(recon_in);
        check_rate(w, cfg, "input");
        const msae::MsaeCodec codec(cfg.msae_config());
        msae::UnitMaskSource unit;
        msae::Waveform out = msae::enhance(w, unit, codec, msae::GainFloor::from_db(0.0),
                                           cfg.frame_len, nullptr, recon_threads);
        msae::write_wav(recon_out, out);
        if (recon_report)
            std::cout << "reconstruction_error_db="
                      << msae::reconstruction_error_db(w.samples, out.samples) << "\n";
    });

    // --- enhance-oracle ----------------------------------------------------
    auto* enh = app.add_subcommand("enhance-oracle",
                                   "Mask-based enhancement with an oracle mask from a parallel target");
    add_config_flag(enh, common);
    std::string enh_noisy, enh_target, enh_out, enh_metrics, enh_mask = "wiener";
    std::optional<double> enh_floor_db;
    unsigned enh_threads = 1;
    enh->add_option("--noisy", enh_noisy, "Noisy input wav")->required();
    enh->add_option("--target", enh_target, "Parallel clean/target wav")->required();
    enh->add_option("--mask", enh_mask, "wiener | iram");
    enh->add_option("--floor-db", enh_floor_db, "Minimum mask gain in dB (default from config)");
    enh->add_option("--out", enh_out, "Enhanced output wav")->required();
    enh->add_option("--metrics", enh_metrics, "Write metrics JSON here");
    enh->add_option("--threads", enh_threads, "Worker threads");
    enh->callback([&] {
        const msae::RunConfig cfg = common.resolve();
        cfg.validate();
        msae::Waveform noisy = msae::read_wav(enh_noisy);
        msae::Waveform target = msae::read_wav(enh_target);
        check_rate(noisy, cfg, "noisy input");
        check_rate(target, cfg, "target input");
        if (noisy.samples.size() != target.samples.size())
            throw msae::ConsistencyError("noisy and target files differ in length");

        const msae::MsaeCodec codec(cfg.msae_config());
        const msae::GainFloor floor =
            msae::GainFloor::from_db(enh_floor_db.value_or(cfg.floor_db));

        msae::Waveform out;
        std::size_t zero_bins = 0;
        if (enh_mask == "wiener") {
            msae::WienerOracleSource source;
            out = msae::enhance(noisy, source, codec, floor, cfg.frame_len, &target, enh_threads);
            zero_bins = source.stats().zero_denominator_bins;
        } else if (enh_mask == "iram") {
            msae::AmplitudeOracleSource source;
            out = msae::enhance(noisy, source, codec, floor, cfg.frame_len, &target, enh_threads);
            zero_bins = source.stats().zero_denominator_bins;
        } else {
            throw msae::ConfigError("unknown mask kind '" + enh_mask + "' (wiener | iram)");
        }
        msae::write_wav(enh_out, out);

        if (!enh_metrics.empty()) {
            const msae::PmseParams pp{cfg.pmse_beta, cfg.pmse_mu};
            json j;
            j["mask"] = enh_mask;
            j["floor_db"] = floor.db_value;
            j["snr_in_db"] = msae::snr_db(target.samples, noisy.samples);
            j["snr_out_db"] = msae::snr_db(target.samples, out.samples);
            j["snr_gain_db"] = j["snr_out_db"].get<double>() - j["snr_in_db"].get<double>();
            j["mse"] = msae::mse(target.samples, out.samples);
            j["pmse"] = msae::pmse(target.samples, out.samples, pp);
            j["reconstruction_error_db"] =
                msae::reconstruction_error_db(noisy.samples, out.samples);
            j["zero_denominator_bins"] = zero_bins;
            j["frames"] = (noisy.samples.size() + cfg.frame_len / 2 - 1) / (cfg.frame_len / 2);
            emit_json(j, enh_metrics);
        }
    });

    // --- make-target --------------------------------------------------------
    auto* target_cmd = app.add_subcommand("make-target",
                                          "Oracle Wiener-filtered training target from clean + reverberant pair");
    add_config_flag(target_cmd, common);
    std::string mt_clean, mt_reverb, mt_out;
    std::optional<std::size_t> mt_win;
    target_cmd->add_option("--clean", mt_clean, "Clean source wav")->required();
    target_cmd->add_option("--reverb", mt_reverb, "Reverberated-only wav")->required();
    target_cmd->add_option("--out", mt_out, "Output target wav")->required();
    target_cmd->add_option("--win", mt_win, "STFT window length (default from config)");
    target_cmd->callback([&] {
        const msae::RunConfig cfg = common.resolve();
        msae::Waveform clean = msae::read_wav(mt_clean);
        msae::Waveform reverb = msae::read_wav(mt_reverb);
        std::size_t zero_bins = 0;
        msae::Waveform out =
            msae::wiener_target(clean, reverb, mt_win.value_or(cfg.stft_win), &zero_bins);
        msae::write_wav(mt_out, out);
        std::cout << "zero_gain_bins=" << zero_bins << "\n";
    });

    // --- eval -----------------------------------------------------------------
    auto* eval_cmd = app.add_subcommand("eval", "Waveform-pair losses (mse, pmse, snr)");
    add_config_flag(eval_cmd, common);
    std::string eval_ref, eval_est, eval_out;
    std::optional<double> eval_beta, eval_mu;
    eval_cmd->add_option("--ref", eval_ref, "Reference wav")->required();
    eval_cmd->add_option("--est", eval_est, "Estimate wav")->required();
    eval_cmd->add_option("--beta", eval_beta, "Pre-emphasis constant");
    eval_cmd->add_option("--mu", eval_mu, "Companding constant");
    eval_cmd->add_option("--out", eval_out, "Write JSON here instead of stdout");
    eval_cmd->callback([&] {
        const msae::RunConfig cfg = common.resolve();
        msae::Waveform ref = msae::read_wav(eval_ref);
        msae::Waveform est = msae::read_wav(eval_est);
        const msae::PmseParams pp{eval_beta.value_or(cfg.pmse_beta), eval_mu.value_or(cfg.pmse_mu)};
        json j;
        j["mse"] = msae::mse(ref.samples, est.samples);
        j["pmse"] = msae::pmse(ref.samples, est.samples, pp);
        j["snr_db"] = msae::snr_db(ref.samples, est.samples);
        j["beta"] = pp.beta;
        j["mu"] = pp.mu;
        emit_json(j, eval_out);
    });

    // --- mix ---------------------------------------------------------------
    auto* mix_cmd = app.add_subcommand("mix", "Add deterministic noise at a requested SNR");
    std::string mix_in, mix_out, mix_noise_out, mix_kind = "white";
    double mix_snr = 0.0;
    std::uint32_t mix_seed = 1234;
    mix_cmd->add_option("--in", mix_in, "Clean input wav")->required();
    mix_cmd->add_option("--snr-db", mix_snr, "Target SNR in dB")->required();
    mix_cmd->add_option("--noise", mix_kind, "white | pink");
    mix_cmd->add_option("--seed", mix_seed, "Noise generator seed");
    mix_cmd->add_option("--out", mix_out, "Noisy output wav")->required();
    mix_cmd->add_option("--noise-out", mix_noise_out, "Also write the scaled noise");
    mix_cmd->callback([&] {
        msae::Waveform clean = msae::read_wav(mix_in);
        msae::NoiseKind kind;
        if (mix_kind == "white")
            kind = msae::NoiseKind::White;
        else if (mix_kind == "pink")
            kind = msae::NoiseKind::Pink;
        else
            throw msae::ConfigError("unknown noise kind '" + mix_kind + "' (white | pink)");
        msae::Waveform noise;
        msae::Waveform out = msae::mix_at_snr(clean, kind, mix_snr, mix_seed, &noise);
        msae::write_wav(mix_out, out);
        if (!mix_noise_out.empty()) msae::write_wav(mix_noise_out, noise);
    });

    // --- config ------------------------------------------------------------
    auto* config_cmd = app.add_subcommand("print-config", "Print the default config file");
    std::string cfg_out;
    config_cmd->add_option("--out", cfg_out, "Write here instead of stdout");
    config_cmd->callback([&] {
        const std::string text = msae::run_config_to_text(msae::RunConfig{});
        if (cfg_out.empty())
            std::cout << text;
        else
            write_text(cfg_out, text);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const msae::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 1;
    }
}

#include "msae/run_config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "msae/errors.hpp"

namespace msae {
namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

std::size_t RunConfig::base_window_samples() const {
    const double samples = base_window_ms * static_cast<double>(sample_rate) / 1000.0;
    const double rounded = std::round(samples);
    if (std::fabs(samples - rounded) > 1e-9 || rounded < 2.0)
        throw ConfigError("base window of " + fmt(base_window_ms) +
                          " ms is not a whole number of samples at " +
                          std::to_string(sample_rate) + " Hz");
    return static_cast<std::size_t>(rounded);
}

MsaeConfig RunConfig::msae_config() const {
    MsaeConfig cfg;
    cfg.plan = branches == 1 ? uniform_plan(1) : constant_q_plan(branches, quality_factor);
    cfg.base_window = base_window_samples();
    cfg.overcompleteness = overcompleteness;
    cfg.validate();
    return cfg;
}

void RunConfig::validate() const {
    const MsaeConfig cfg = msae_config();
    if (frame_len % cfg.required_multiple() != 0)
        throw ConfigError("frame_len " + std::to_string(frame_len) + " must be a multiple of " +
                          std::to_string(cfg.required_multiple()));
    if (floor_db > 0.0)
        throw ConfigError("floor_db must be <= 0");
    if (stft_win < 2 || stft_win % 2 != 0)
        throw ConfigError("stft_win must be even and >= 2");
    if (!(activity_prior >= 0.0 && activity_prior <= 1.0))
        throw ConfigError("activity_prior must lie in [0, 1]");
    if (pmse_mu < 0.0 || pmse_beta < 0.0 || pmse_beta >= 1.0)
        throw ConfigError("pmse parameters must satisfy mu >= 0 and 0 <= beta < 1");
}

std::string run_config_to_text(const RunConfig& c) {
    std::ostringstream out;
    out << "branches=" << c.branches << "\n";
    out << "quality_factor=" << fmt(c.quality_factor) << "\n";
    out << "base_window_ms=" << fmt(c.base_window_ms) << "\n";
    out << "overcompleteness=" << fmt(c.overcompleteness) << "\n";
    out << "frame_len=" << c.frame_len << "\n";
    out << "floor_db=" << fmt(c.floor_db) << "\n";
    out << "stft_win=" << c.stft_win << "\n";
    out << "pmse_beta=" << fmt(c.pmse_beta) << "\n";
    out << "pmse_mu=" << fmt(c.pmse_mu) << "\n";
    out << "activity_prior=" << fmt(c.activity_prior) << "\n";
    out << "sample_rate=" << c.sample_rate << "\n";
    return out.str();
}

RunConfig run_config_from_text(const std::string& text) {
    RunConfig c;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw FormatError("config line " + std::to_string(lineno) + " lacks '='");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "branches") c.branches = std::stoi(value);
            else if (key == "quality_factor") c.quality_factor = std::stod(value);
            else if (key == "base_window_ms") c.base_window_ms = std::stod(value);
            else if (key == "overcompleteness") c.overcompleteness = std::stod(value);
            else if (key == "frame_len") c.frame_len = static_cast<std::size_t>(std::stoull(value));
            else if (key == "floor_db") c.floor_db = std::stod(value);
            else if (key == "stft_win") c.stft_win = static_cast<std::size_t>(std::stoull(value));
            else if (key == "pmse_beta") c.pmse_beta = std::stod(value);
            else if (key == "pmse_mu") c.pmse_mu = std::stod(value);
            else if (key == "activity_prior") c.activity_prior = std::stod(value);
            else if (key == "sample_rate") c.sample_rate = std::stoi(value);
            else throw FormatError("unknown config key '" + key + "'");
        } catch (const std::invalid_argument&) {
            throw FormatError("config line " + std::to_string(lineno) + " has a malformed value");
        } catch (const std::out_of_range&) {
            throw FormatError("config line " + std::to_string(lineno) + " has an out-of-range value");
        }
    }
    return c;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open config '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return run_config_from_text(buf.str());
}

void save_run_config(const std::string& path, const RunConfig& config) {
    std::ofstream out(path, std::ios::trunc);
    if (!out)
        throw IoError("cannot open config '" + path + "' for writing");
    out << run_config_to_text(config);
    if (!out)
        throw IoError("short write to '" + path + "'");
}

} // namespace msae

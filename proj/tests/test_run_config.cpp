#include <doctest.h>

#include "msae/errors.hpp"
#include "msae/run_config.hpp"

using namespace msae;

TEST_SUITE_BEGIN("run_config");

TEST_CASE("defaults satisfy the divisibility rule") {
    RunConfig c;
    CHECK_NOTHROW(c.validate());
    CHECK(c.base_window_samples() == 40);
    MsaeConfig m = c.msae_config();
    CHECK(m.required_multiple() == 640); // 2^4 * 40
    CHECK(c.frame_len % m.required_multiple() == 0);
}

TEST_CASE("text round trip is lossless") {
    RunConfig c;
    c.branches = 3;
    c.quality_factor = 1.75;
    c.base_window_ms = 2.0;
    c.overcompleteness = 1.5;
    c.frame_len = 1 << 14;
    c.floor_db = -37.5;
    c.pmse_mu = 100.0;
    const std::string text = run_config_to_text(c);
    RunConfig r = run_config_from_text(text);
    CHECK(r.branches == c.branches);
    CHECK(r.quality_factor == c.quality_factor);
    CHECK(r.base_window_ms == c.base_window_ms);
    CHECK(r.overcompleteness == c.overcompleteness);
    CHECK(r.frame_len == c.frame_len);
    CHECK(r.floor_db == c.floor_db);
    CHECK(r.stft_win == c.stft_win);
    CHECK(r.pmse_beta == c.pmse_beta);
    CHECK(r.pmse_mu == c.pmse_mu);
    CHECK(r.activity_prior == c.activity_prior);
    CHECK(r.sample_rate == c.sample_rate);
    CHECK(run_config_to_text(r) == text);
}

TEST_CASE("comments and blank lines are ignored, unknown keys rejected") {
    RunConfig r = run_config_from_text("# a comment\n\nbranches=2  # inline\n");
    CHECK(r.branches == 2);
    CHECK_THROWS_AS(run_config_from_text("no_such_key=1\n"), FormatError);
    CHECK_THROWS_AS(run_config_from_text("branches\n"), FormatError);
    CHECK_THROWS_AS(run_config_from_text("branches=abc\n"), FormatError);
}

TEST_CASE("validation catches broken configurations") {
    RunConfig c;
    c.frame_len = 1000; // not a multiple of 640
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = RunConfig{};
    c.floor_db = 1.0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = RunConfig{};
    c.base_window_ms = 2.51; // 40.16 samples
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = RunConfig{};
    c.activity_prior = 2.0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_SUITE_END();

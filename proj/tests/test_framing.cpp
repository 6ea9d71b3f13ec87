#include <doctest.h>

#include <cmath>

#include "msae/errors.hpp"
#include "msae/framing.hpp"
#include "support/test_util.hpp"

using namespace msae;

namespace {

Waveform wave_of(std::vector<double> samples) {
    Waveform w;
    w.samples = std::move(samples);
    return w;
}

} // namespace

TEST_SUITE_BEGIN("framing");

TEST_CASE("frame count and offsets follow ceil(len / stride)") {
    const std::size_t d = 64;
    Waveform w = wave_of(test::random_signal(2 * d, 21));
    auto frames = split_frames(w, d);
    REQUIRE(frames.size() == 4); // ceil(2D / (D/2))
    for (std::size_t t = 0; t < frames.size(); ++t) {
        CHECK(frames[t].offset == t * d / 2);
        CHECK(frames[t].payload.size() == d);
    }
    // trailing frame holds D/2 real samples and D/2 padding zeros
    for (std::size_t j = d / 2; j < d; ++j)
        CHECK(frames.back().payload[j] == 0.0);
}

TEST_CASE("payloads are scaled to unit RMS with the gain stored") {
    Waveform w = wave_of(std::vector<double>(32, 0.25));
    auto frames = split_frames(w, 32);
    REQUIRE(frames.size() == 1);
    CHECK(frames[0].original_gain == doctest::Approx(0.25));
    for (double v : frames[0].payload)
        CHECK(v == doctest::Approx(1.0));
}

TEST_CASE("frame RMS is 0 or 1") {
    Waveform w = wave_of(test::random_signal(300, 3));
    for (std::size_t i = 100; i < 200; ++i) w.samples[i] = 0.0;
    for (const auto& f : split_frames(w, 64)) {
        const double r = rms(f.payload);
        CHECK((std::fabs(r - 1.0) < 1e-12 || r == 0.0));
    }
}

TEST_CASE("all-zero input keeps zero payloads and zero gains") {
    Waveform w = wave_of(std::vector<double>(100, 0.0));
    for (const auto& f : split_frames(w, 32)) {
        CHECK(f.original_gain == 0.0);
        for (double v : f.payload) CHECK(v == 0.0);
    }
}

TEST_CASE("odd frame length is rejected") {
    Waveform w = wave_of(test::random_signal(100, 4));
    CHECK_THROWS_AS(split_frames(w, 33), ConfigError);
    CHECK_THROWS_AS(split_frames(w, 32, 0.25), ConfigError);
    CHECK_THROWS_AS(split_frames(wave_of({}), 32), DomainError);
}

TEST_CASE("split / overlap-add round trip is the identity") {
    const std::size_t d = 128;
    Waveform w = wave_of(test::random_signal(3 * d, 5));
    auto frames = split_frames(w, d);
    Waveform out = overlap_add(frames, w.samples.size());
    REQUIRE(out.samples.size() == w.samples.size());
    CHECK(test::rel_rms_error(w.samples, out.samples) < 1e-6);
}

TEST_CASE("round trip holds for awkward lengths") {
    for (std::size_t len : {65u, 127u, 130u, 300u}) {
        Waveform w = wave_of(test::random_signal(len, static_cast<std::uint32_t>(len)));
        Waveform out = overlap_add(split_frames(w, 64), len);
        REQUIRE(out.samples.size() == len);
        CHECK(test::rel_rms_error(w.samples, out.samples) < 1e-6);
    }
}

TEST_CASE("single frame reproduces payload times gain exactly") {
    ProcessingFrame f;
    f.payload = test::random_signal(64, 6);
    f.original_gain = 0.5;
    f.offset = 0;
    Waveform out = overlap_add({f}, 64);
    for (std::size_t i = 0; i < 64; ++i)
        CHECK(out.samples[i] == 0.5 * f.payload[i]);
}

TEST_CASE("crossfade weights sum to one") {
    ProcessingFrame a, b;
    a.payload.assign(64, 1.0);
    a.original_gain = 1.0;
    a.offset = 0;
    b.payload.assign(64, 1.0);
    b.original_gain = 1.0;
    b.offset = 32;
    Waveform out = overlap_add({a, b}, 96);
    for (double v : out.samples)
        CHECK(v == doctest::Approx(1.0));
}

TEST_CASE("inconsistent offsets are rejected") {
    ProcessingFrame a, b;
    a.payload.assign(64, 0.0);
    b.payload.assign(64, 0.0);
    b.offset = 30; // not on the stride grid
    CHECK_THROWS_AS(overlap_add({a, b}, 128), ConsistencyError);
    b.offset = 32;
    b.payload.resize(32);
    CHECK_THROWS_AS(overlap_add({a, b}, 128), ConsistencyError);
}

TEST_CASE("output is truncated to total_len") {
    Waveform w = wave_of(test::random_signal(100, 7));
    Waveform out = overlap_add(split_frames(w, 64), 100);
    CHECK(out.samples.size() == 100);
}

TEST_SUITE_END();

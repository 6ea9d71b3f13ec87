#include <doctest.h>

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include "msae/errors.hpp"
#include "msae/wav_io.hpp"
#include "support/test_util.hpp"

using namespace msae;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "msae_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

void append_u32(std::string& s, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}
void append_u16(std::string& s, std::uint16_t v) {
    s.push_back(static_cast<char>(v & 0xFF));
    s.push_back(static_cast<char>((v >> 8) & 0xFF));
}

// Hand-built PCM16 file, independent of write_wav.
std::string craft_pcm16(std::uint32_t rate, std::uint16_t channels,
                        const std::vector<std::int16_t>& interleaved,
                        std::uint32_t declared_data_len_delta = 0) {
    std::string s;
    const std::uint32_t data_len =
        static_cast<std::uint32_t>(interleaved.size() * 2) + declared_data_len_delta;
    s.append("RIFF");
    append_u32(s, 36 + data_len);
    s.append("WAVE");
    s.append("fmt ");
    append_u32(s, 16);
    append_u16(s, 1);
    append_u16(s, channels);
    append_u32(s, rate);
    append_u32(s, rate * 2 * channels);
    append_u16(s, static_cast<std::uint16_t>(2 * channels));
    append_u16(s, 16);
    s.append("data");
    append_u32(s, data_len);
    for (std::int16_t v : interleaved) append_u16(s, static_cast<std::uint16_t>(v));
    return s;
}

void write_bytes(const std::filesystem::path& p, const std::string& bytes) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

} // namespace

TEST_SUITE_BEGIN("wav_io");

TEST_CASE("pcm16 fixed-point scaling") {
    auto p = temp_file("scale.wav");
    write_bytes(p, craft_pcm16(16000, 1, {0, 16384, -32768}));
    Waveform w = read_wav(p.string());
    REQUIRE(w.samples.size() == 3);
    CHECK(w.samples[0] == 0.0);
    CHECK(w.samples[1] == 0.5);
    CHECK(w.samples[2] == -1.0);
    CHECK(w.sample_rate == 16000);
}

TEST_CASE("one second of 16 kHz audio reads as 16000 samples") {
    auto p = temp_file("onesec.wav");
    write_bytes(p, craft_pcm16(16000, 1, std::vector<std::int16_t>(16000, 100)));
    CHECK(read_wav(p.string()).samples.size() == 16000);
}

TEST_CASE("truncated data chunk is a format error") {
    auto p = temp_file("truncated.wav");
    write_bytes(p, craft_pcm16(16000, 1, {1, 2, 3}, /*declared extra*/ 100));
    CHECK_THROWS_AS(read_wav(p.string()), FormatError);
}

TEST_CASE("multichannel files yield channel 0") {
    auto p = temp_file("stereo.wav");
    write_bytes(p, craft_pcm16(16000, 2, {100, -100, 200, -200, 300, -300}));
    Waveform w = read_wav(p.string());
    REQUIRE(w.samples.size() == 3);
    CHECK(w.samples[0] == doctest::Approx(100.0 / 32768.0));
    CHECK(w.samples[2] == doctest::Approx(300.0 / 32768.0));
}

TEST_CASE("not a wav file") {
    auto p = temp_file("garbage.wav");
    write_bytes(p, "this is not audio");
    CHECK_THROWS_AS(read_wav(p.string()), FormatError);
}

TEST_CASE("unsupported encoding") {
    // 8-bit PCM: crafted by patching the bits field.
    auto p = temp_file("pcm8.wav");
    std::string bytes = craft_pcm16(16000, 1, {0, 0});
    bytes[34] = 8; // bits per sample
    write_bytes(p, bytes);
    CHECK_THROWS_AS(read_wav(p.string()), UnsupportedFormatError);
}

TEST_CASE("float round trip is exact") {
    Waveform w;
    w.sample_rate = 16000;
    auto x = test::random_signal(1000, 11);
    for (double v : x) w.samples.push_back(static_cast<double>(static_cast<float>(0.1 * v)));
    auto p = temp_file("roundtrip_f32.wav");
    write_wav(p.string(), w, WavEncoding::Float32);
    Waveform r = read_wav(p.string());
    REQUIRE(r.samples.size() == w.samples.size());
    for (std::size_t i = 0; i < w.samples.size(); ++i)
        CHECK(r.samples[i] == w.samples[i]);
}

TEST_CASE("pcm16 round trip within one quantization step") {
    Waveform w;
    auto x = test::random_signal(1000, 12);
    for (double v : x) w.samples.push_back(std::clamp(0.3 * v, -1.0, 1.0));
    auto p = temp_file("roundtrip_p16.wav");
    write_wav(p.string(), w, WavEncoding::Pcm16);
    Waveform r = read_wav(p.string());
    REQUIRE(r.samples.size() == w.samples.size());
    for (std::size_t i = 0; i < w.samples.size(); ++i)
        CHECK(std::fabs(r.samples[i] - w.samples[i]) <= 1.0 / 32768.0);
}

TEST_CASE("zero-length waveform round trips") {
    Waveform w;
    auto p = temp_file("empty.wav");
    write_wav(p.string(), w, WavEncoding::Pcm16);
    CHECK(read_wav(p.string()).samples.empty());
}

TEST_CASE("unwritable path is an io error") {
    Waveform w;
    w.samples = {0.0};
    CHECK_THROWS_AS(write_wav("/nonexistent_dir_zzz/out.wav", w), IoError);
}

TEST_SUITE_END();

#include "msae/wav_io.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "msae/errors.hpp"

namespace msae {
namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint32_t read_u32(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16(const unsigned char* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void put_u32(std::string& out, std::uint32_t v) {
    out.push_back(static_cast<char>(v & 0xFF));
    out.push_back(static_cast<char>((v >> 8) & 0xFF));
    out.push_back(static_cast<char>((v >> 16) & 0xFF));
    out.push_back(static_cast<char>((v >> 24) & 0xFF));
}

void put_u16(std::string& out, std::uint16_t v) {
    out.push_back(static_cast<char>(v & 0xFF));
    out.push_back(static_cast<char>((v >> 8) & 0xFF));
}

} // namespace

Waveform read_wav(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path + "' for reading");
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
    const std::size_t n = bytes.size();

    if (n < 12 || std::memcmp(p, "RIFF", 4) != 0 || std::memcmp(p + 8, "WAVE", 4) != 0)
        throw FormatError("'" + path + "' is not a RIFF/WAVE file");

    std::uint16_t format = 0, channels = 0, bits = 0;
    std::uint32_t rate = 0;
    bool have_fmt = false;
    std::size_t data_off = 0, data_len = 0;
    bool have_data = false;

    std::size_t off = 12;
    while (off + 8 <= n) {
        const char* id = bytes.data() + off;
        std::uint32_t len = read_u32(p + off + 4);
        std::size_t body = off + 8;
        if (std::memcmp(id, "fmt ", 4) == 0) {
            if (body + 16 > n || len < 16)
                throw FormatError("truncated fmt chunk");
            format = read_u16(p + body);
            channels = read_u16(p + body + 2);
            rate = read_u32(p + body + 4);
            bits = read_u16(p + body + 14);
            if (format == kFormatExtensible) {
                // Resolve the actual code from the SubFormat GUID.
                if (len < 40 || body + 40 > n)
                    throw FormatError("truncated extensible fmt chunk");
                format = read_u16(p + body + 24);
            }
            have_fmt = true;
        } else if (std::memcmp(id, "data", 4) == 0) {
            data_off = body;
            data_len = len;
            have_data = true;
            if (body + len > n)
                throw FormatError("data chunk declares " + std::to_string(len) +
                                  " bytes but file holds " + std::to_string(n - body));
        }
        off = body + len + (len & 1); // chunks are word-aligned
    }

    if (!have_fmt || !have_data)
        throw FormatError("missing fmt or data chunk");
    if (channels == 0 || rate == 0)
        throw FormatError("fmt chunk declares zero channels or zero sample rate");

    const bool pcm16 = (format == kFormatPcm && bits == 16);
    const bool f32 = (format == kFormatFloat && bits == 32);
    if (!pcm16 && !f32)
        throw UnsupportedFormatError("only 16-bit PCM and 32-bit float are supported (format " +
                                     std::to_string(format) + ", " + std::to_string(bits) + " bits)");

    const std::size_t bytes_per = pcm16 ? 2 : 4;
    const std::size_t stride = bytes_per * channels;
    const std::size_t frames = data_len / stride;

    Waveform w;
    w.sample_rate = static_cast<int>(rate);
    w.samples.resize(frames);
    for (std::size_t i = 0; i < frames; ++i) {
        const unsigned char* s = p + data_off + i * stride; // channel 0
        if (pcm16) {
            std::int16_t v = static_cast<std::int16_t>(read_u16(s));
            w.samples[i] = static_cast<double>(v) / 32768.0;
        } else {
            std::uint32_t u = read_u32(s);
            float f;
            std::memcpy(&f, &u, 4);
            w.samples[i] = static_cast<double>(f);
        }
    }
    return w;
}

void write_wav(const std::string& path, const Waveform& w, WavEncoding encoding) {
    w.validate();
    const bool pcm16 = encoding == WavEncoding::Pcm16;
    const std::uint16_t bits = pcm16 ? 16 : 32;
    const std::uint32_t bytes_per = bits / 8;
    const std::uint32_t data_len = static_cast<std::uint32_t>(w.samples.size() * bytes_per);

    std::string out;
    out.reserve(44 + data_len);
    out.append("RIFF");
    put_u32(out, 36 + data_len);
    out.append("WAVE");
    out.append("fmt ");
    put_u32(out, 16);
    put_u16(out, pcm16 ? kFormatPcm : kFormatFloat);
    put_u16(out, 1); // mono
    put_u32(out, static_cast<std::uint32_t>(w.sample_rate));
    put_u32(out, static_cast<std::uint32_t>(w.sample_rate) * bytes_per);
    put_u16(out, static_cast<std::uint16_t>(bytes_per));
    put_u16(out, bits);
    out.append("data");
    put_u32(out, data_len);

    for (double v : w.samples) {
        if (pcm16) {
            double clamped = std::min(1.0, std::max(-1.0, v));
            long q = std::lrint(clamped * 32768.0);
            q = std::min(32767L, std::max(-32768L, q));
            put_u16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(q)));
        } else {
            float f = static_cast<float>(v);
            std::uint32_t u;
            std::memcpy(&u, &f, 4);
            put_u32(out, u);
        }
    }

    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os)
        throw IoError("cannot open '" + path + "' for writing");
    os.write(out.data(), static_cast<std::streamsize>(out.size()));
    if (!os)
        throw IoError("short write to '" + path + "'");
}

} // namespace msae

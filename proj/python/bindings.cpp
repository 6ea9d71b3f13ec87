// Python bindings for the multiscale filterbank core.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>
#include <optional>

#include "msae/band_plan.hpp"
#include "msae/masking.hpp"
#include "msae/metrics.hpp"
#include "msae/multiscale.hpp"
#include "msae/noise.hpp"
#include "msae/stft.hpp"
#include "msae/wav_io.hpp"

namespace py = pybind11;

namespace {

using Array1 = py::array_t<double, py::array::c_style | py::array::forcecast>;

std::vector<double> to_vector(const Array1& a) {
    if (a.ndim() != 1)
        throw msae::DomainError("expected a 1-d float array");
    return std::vector<double>(a.data(), a.data() + a.size());
}

py::array_t<double> to_array(const std::vector<double>& v) {
    py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
    std::memcpy(out.mutable_data(), v.data(), v.size() * sizeof(double));
    return out;
}

py::array_t<double> tensor_to_array(const msae::Tensor3& t) {
    py::array_t<double> out({static_cast<py::ssize_t>(t.frames), static_cast<py::ssize_t>(t.bins),
                             static_cast<py::ssize_t>(msae::Tensor3::channels)});
    std::memcpy(out.mutable_data(), t.data.data(), t.data.size() * sizeof(double));
    return out;
}

msae::Tensor3 array_to_tensor(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 3 || a.shape(2) != static_cast<py::ssize_t>(msae::Tensor3::channels))
        throw msae::DomainError("expected a (frames, bins, 4) array");
    msae::Tensor3 t(static_cast<std::size_t>(a.shape(0)), static_cast<std::size_t>(a.shape(1)));
    std::memcpy(t.data.data(), a.data(), t.data.size() * sizeof(double));
    return t;
}

msae::Waveform to_waveform(const Array1& a, int sample_rate) {
    msae::Waveform w;
    w.samples = to_vector(a);
    w.sample_rate = sample_rate;
    return w;
}

class PyCodec {
public:
    PyCodec(int branches, std::optional<double> q, std::size_t base_window, double kappa)
        : codec_(make_config(branches, q, base_window, kappa)) {}

    static msae::MsaeConfig make_config(int branches, std::optional<double> q,
                                        std::size_t base_window, double kappa) {
        msae::MsaeConfig cfg;
        cfg.plan = (branches == 1 || !q) ? msae::uniform_plan(branches)
                                         : msae::constant_q_plan(branches, *q);
        cfg.base_window = base_window;
        cfg.overcompleteness = kappa;
        return cfg;
    }

    py::array_t<double> encode(const Array1& x) const {
        return tensor_to_array(codec_.encode(to_vector(x)));
    }

    py::array_t<double> decode(const py::array_t<double, py::array::c_style | py::array::forcecast>& z,
                               std::size_t length) const {
        return to_array(codec_.decode(array_to_tensor(z), length));
    }

    py::array_t<double> magnitude_of(const Array1& x) const {
        const msae::EmbeddingTensor z = codec_.encode(to_vector(x));
        const std::vector<double> m = msae::magnitude(z);
        py::array_t<double> out({static_cast<py::ssize_t>(z.frames), static_cast<py::ssize_t>(z.bins)});
        std::memcpy(out.mutable_data(), m.data(), m.size() * sizeof(double));
        return out;
    }

    py::array_t<double> reconstruct(const Array1& x, std::size_t frame_len, unsigned threads) const {
        msae::UnitMaskSource unit;
        msae::Waveform out = msae::enhance(to_waveform(x, 16000), unit, codec_,
                                           msae::GainFloor::from_db(0.0), frame_len, nullptr, threads);
        return to_array(out.samples);
    }

    py::array_t<double> enhance_oracle(const Array1& noisy, const Array1& target,
                                       const std::string& mask, double floor_db,
                                       std::size_t frame_len, unsigned threads) const {
        const msae::Waveform wn = to_waveform(noisy, 16000);
        const msae::Waveform wt = to_waveform(target, 16000);
        const msae::GainFloor floor = msae::GainFloor::from_db(floor_db);
        msae::Waveform out;
        if (mask == "wiener") {
            msae::WienerOracleSource source;
            out = msae::enhance(wn, source, codec_, floor, frame_len, &wt, threads);
        } else if (mask == "iram") {
            msae::AmplitudeOracleSource source;
            out = msae::enhance(wn, source, codec_, floor, frame_len, &wt, threads);
        } else {
            throw msae::ConfigError("unknown mask kind '" + mask + "' (wiener | iram)");
        }
        return to_array(out.samples);
    }

    std::vector<std::size_t> branch_bins() const { return codec_.branch_bins(); }
    std::size_t total_bins() const { return codec_.total_bins(); }
    std::size_t required_multiple() const { return codec_.config().required_multiple(); }
    std::vector<double> edges() const { return codec_.config().plan.edges; }

private:
    msae::MsaeCodec codec_;
};

} // namespace

PYBIND11_MODULE(_msae, m) {
    m.doc() = "Multiscale Constant-Q analysis/synthesis filterbank with mask-based enhancement";

    py::register_exception<msae::Error>(m, "MsaeError", PyExc_ValueError);

    m.def(
        "design_bands",
        [](int branches, std::optional<double> q) {
            const msae::BandPlan plan =
                q ? msae::constant_q_plan(branches, *q) : msae::uniform_plan(branches);
            return plan.edges;
        },
        py::arg("branches"), py::arg("q") = std::nullopt,
        "Band edges: Constant-Q when q is given, uniform otherwise");

    m.def(
        "measured_q",
        [](const std::vector<double>& edges, int band) {
            return msae::measured_q(msae::explicit_plan(edges), band);
        },
        py::arg("edges"), py::arg("band"),
        "Realized quality factor of band b (1-based)");

    py::class_<PyCodec>(m, "Codec")
        .def(py::init<int, std::optional<double>, std::size_t, double>(), py::arg("branches"),
             py::arg("q") = std::nullopt, py::arg("base_window") = 40, py::arg("kappa") = 1.0)
        .def("encode", &PyCodec::encode, py::arg("segment"),
             "Multiscale embedding of a segment (frames, bins, 4)")
        .def("decode", &PyCodec::decode, py::arg("embedding"), py::arg("length"),
             "Waveform segment from an embedding")
        .def("magnitude", &PyCodec::magnitude_of, py::arg("segment"),
             "Channel-RMS magnitude representation (frames, bins)")
        .def("reconstruct", &PyCodec::reconstruct, py::arg("x"), py::arg("frame_len") = 20480,
             py::arg("threads") = 1, "Autoencoder round trip over the framed pipeline")
        .def("enhance_oracle", &PyCodec::enhance_oracle, py::arg("noisy"), py::arg("target"),
             py::arg("mask") = "wiener", py::arg("floor_db") = -50.0,
             py::arg("frame_len") = 20480, py::arg("threads") = 1,
             "Oracle-mask enhancement against a parallel target")
        .def_property_readonly("branch_bins", &PyCodec::branch_bins)
        .def_property_readonly("total_bins", &PyCodec::total_bins)
        .def_property_readonly("required_multiple", &PyCodec::required_multiple)
        .def_property_readonly("edges", &PyCodec::edges);

    m.def(
        "mse", [](const Array1& a, const Array1& b) { return msae::mse(to_vector(a), to_vector(b)); },
        py::arg("s"), py::arg("s_hat"));
    m.def(
        "pmse",
        [](const Array1& a, const Array1& b, double beta, double mu) {
            return msae::pmse(to_vector(a), to_vector(b), msae::PmseParams{beta, mu});
        },
        py::arg("s"), py::arg("s_hat"), py::arg("beta") = 0.97, py::arg("mu") = 255.0);
    m.def("mu_law", &msae::mu_law, py::arg("v"), py::arg("mu"));
    m.def(
        "snr_db",
        [](const Array1& ref, const Array1& est) {
            return msae::snr_db(to_vector(ref), to_vector(est));
        },
        py::arg("reference"), py::arg("estimate"));
    m.def(
        "reconstruction_error_db",
        [](const Array1& x, const Array1& xh) {
            return msae::reconstruction_error_db(to_vector(x), to_vector(xh));
        },
        py::arg("x"), py::arg("x_hat"));

    m.def(
        "wiener_target",
        [](const Array1& s, const Array1& v, std::size_t win, int sample_rate) {
            return to_array(
                msae::wiener_target(to_waveform(s, sample_rate), to_waveform(v, sample_rate), win)
                    .samples);
        },
        py::arg("clean"), py::arg("reverb"), py::arg("win") = 512, py::arg("sample_rate") = 16000,
        "Oracle Wiener-filtered target waveform");

    m.def(
        "make_noise",
        [](std::size_t n, const std::string& kind, std::uint32_t seed) {
            const msae::NoiseKind k =
                kind == "pink" ? msae::NoiseKind::Pink : msae::NoiseKind::White;
            return to_array(msae::make_noise(n, k, seed).samples);
        },
        py::arg("length"), py::arg("kind") = "white", py::arg("seed") = 1234);
    m.def(
        "mix_at_snr",
        [](const Array1& clean, double snr, const std::string& kind, std::uint32_t seed) {
            const msae::NoiseKind k =
                kind == "pink" ? msae::NoiseKind::Pink : msae::NoiseKind::White;
            return to_array(msae::mix_at_snr(to_waveform(clean, 16000), k, snr, seed).samples);
        },
        py::arg("clean"), py::arg("snr_db"), py::arg("kind") = "white", py::arg("seed") = 1234);

    m.def(
        "read_wav",
        [](const std::string& path) {
            const msae::Waveform w = msae::read_wav(path);
            return py::make_tuple(to_array(w.samples), w.sample_rate);
        },
        py::arg("path"), "Returns (samples, sample_rate)");
    m.def(
        "write_wav",
        [](const std::string& path, const Array1& samples, int sample_rate, bool pcm16) {
            msae::write_wav(path, to_waveform(samples, sample_rate),
                            pcm16 ? msae::WavEncoding::Pcm16 : msae::WavEncoding::Float32);
        },
        py::arg("path"), py::arg("samples"), py::arg("sample_rate") = 16000,
        py::arg("pcm16") = false);
}

#include <doctest.h>

#include <cmath>

#include "msae/errors.hpp"
#include "msae/metrics.hpp"
#include "support/test_util.hpp"

using namespace msae;

TEST_SUITE_BEGIN("metrics");

TEST_CASE("mse basics") {
    std::vector<double> a{1.0, 0.0}, b{0.0, 0.0};
    CHECK(mse(a, a) == 0.0);
    CHECK(mse(a, b) == doctest::Approx(0.5));
    CHECK_THROWS_AS(mse(a, std::vector<double>{1.0}), DomainError);
}

TEST_CASE("mse against a naive loop") {
    auto s = test::random_signal(501, 80);
    auto e = test::random_signal(501, 81);
    double acc = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) acc += (s[i] - e[i]) * (s[i] - e[i]);
    CHECK(std::fabs(mse(s, e) - acc / 501.0) < 1e-12);
}

TEST_CASE("mu-law endpoints and fixed values") {
    for (double mu : {0.0, 1.0, 255.0, 1e6}) {
        CHECK(mu_law(0.0, mu) == 0.0);
        if (mu > 0.0) {
            CHECK(mu_law(1.0, mu) == doctest::Approx(1.0).epsilon(1e-15));
            CHECK(mu_law(-1.0, mu) == doctest::Approx(-1.0).epsilon(1e-15));
        }
    }
    CHECK(mu_law(0.1, 255.0) ==
          doctest::Approx(std::log1p(25.5) / std::log1p(255.0)).epsilon(1e-15));
    CHECK(mu_law(0.1, 255.0) == doctest::Approx(0.5906).epsilon(1e-4));
    CHECK_THROWS_AS(mu_law(0.1, -1.0), DomainError);
}

TEST_CASE("mu-law is odd and strictly increasing onto [-1, 1]") {
    const double mu = 255.0;
    double prev = -1.0 - 1e-12;
    for (int i = -100; i <= 100; ++i) {
        const double v = static_cast<double>(i) / 100.0;
        const double y = mu_law(v, mu);
        CHECK(y == doctest::Approx(-mu_law(-v, mu)).epsilon(1e-12).scale(1.0));
        CHECK(y > prev);
        CHECK(std::fabs(y) <= 1.0 + 1e-15);
        prev = y;
    }
}

TEST_CASE("pmse with beta=0, mu=0 is exactly mse") {
    PmseParams p{0.0, 0.0};
    for (std::uint32_t seed = 0; seed < 8; ++seed) {
        auto s = test::random_signal(257, 90 + seed);
        auto e = test::random_signal(257, 190 + seed);
        CHECK(pmse(s, e, p) == mse(s, e));
    }
}

TEST_CASE("pmse approaches mse as mu approaches 0") {
    auto s = test::random_signal(400, 91);
    auto e = test::random_signal(400, 92);
    for (double& v : s) v *= 0.3;
    for (double& v : e) v *= 0.3;
    const double exact = mse(s, e);
    const double near = pmse(s, e, PmseParams{0.0, 1e-6});
    CHECK(std::fabs(near - exact) / exact < 1e-6);
}

TEST_CASE("pmse is zero only for matching companded sequences") {
    auto s = test::random_signal(128, 93);
    CHECK(pmse(s, s, PmseParams{0.97, 255.0}) == 0.0);
    auto e = s;
    e[64] += 0.01;
    CHECK(pmse(s, e, PmseParams{0.97, 255.0}) > 0.0);
}

TEST_CASE("dual path loss composes two pmse terms") {
    PmseParams p{0.97, 255.0};
    auto s = test::random_signal(200, 94);
    auto shat = test::random_signal(200, 95);
    auto x = test::random_signal(200, 96);
    auto xhat = test::random_signal(200, 97);
    CHECK(dual_path_loss(s, shat, x, xhat, p) ==
          doctest::Approx(pmse(s, shat, p) + pmse(x, xhat, p)).epsilon(1e-15));
    CHECK(dual_path_loss(s, s, x, x, p) == 0.0);
    CHECK(dual_path_loss(s, shat, x, x, p) == doctest::Approx(pmse(s, shat, p)));
    CHECK(dual_path_loss(s, shat, x, xhat, p) ==
          doctest::Approx(dual_path_loss(x, xhat, s, shat, p)));
}

TEST_CASE("activity weights") {
    std::vector<std::uint8_t> flags(400, 0);
    for (std::size_t i = 0; i < 100; ++i) flags[i] = 1;
    auto w = activity_weights(flags, 0.75);
    CHECK(w.active == 100);
    CHECK(w.inactive == 300);
    CHECK(w.w_active == doctest::Approx(3.0));
    CHECK(w.w_inactive == doctest::Approx(1.0 / 3.0));

    std::vector<std::uint8_t> balanced(200, 0);
    for (std::size_t i = 0; i < 100; ++i) balanced[i] = 1;
    auto wb = activity_weights(balanced, 0.5);
    CHECK(wb.w_active == doctest::Approx(1.0));
    CHECK(wb.w_inactive == doctest::Approx(1.0));

    auto all_active = activity_weights(std::vector<std::uint8_t>(10, 1), 0.3);
    CHECK(all_active.w_active == 1.0);
    CHECK(all_active.w_inactive == 1.0);

    CHECK_THROWS_AS(activity_weights(flags, 1.5), DomainError);
    CHECK_THROWS_AS(activity_weights({}, 0.5), DomainError);
}

TEST_CASE("activity weight mass invariant") {
    PinnedNormal gen(98);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m1 = 1 + static_cast<std::size_t>(std::fabs(gen()) * 100);
        const std::size_t m0 = 1 + static_cast<std::size_t>(std::fabs(gen()) * 100);
        const double prior = std::fmod(std::fabs(gen()), 1.0);
        std::vector<std::uint8_t> flags(m1, 1);
        flags.insert(flags.end(), m0, 0);
        auto w = activity_weights(flags, prior);
        const double mass = w.w_active * static_cast<double>(m1) +
                            w.w_inactive * static_cast<double>(m0);
        CHECK(mass == doctest::Approx(static_cast<double>(m0 + m1)).epsilon(1e-12));
    }
}

TEST_CASE("energy VAD flags loud frames") {
    Waveform w;
    w.sample_rate = 16000;
    w.samples.assign(16000, 0.0);
    for (std::size_t i = 4000; i < 8000; ++i)
        w.samples[i] = 0.5;
    auto flags = detect_activity(w);
    REQUIRE(flags.size() == w.samples.size());
    CHECK(flags[0] == 0);
    CHECK(flags[5000] == 1);
    CHECK(flags[12000] == 0);
}

TEST_CASE("snr caps and sentinels") {
    auto ref = test::random_signal(100, 99);
    CHECK(snr_db(ref, ref) == 120.0);
    std::vector<double> zeros(100, 0.0);
    CHECK_THROWS_AS(snr_db(zeros, ref), DomainError);
    CHECK(reconstruction_error_db(ref, ref) == -120.0);
    CHECK(reconstruction_error_db(ref, zeros) == doctest::Approx(0.0));
}

TEST_CASE("equal-power noise sits at 0 dB") {
    auto s = test::random_signal(4000, 100);
    auto n = test::random_signal(4000, 101);
    const double scale = std::sqrt(
        std::inner_product(s.begin(), s.end(), s.begin(), 0.0) /
        std::inner_product(n.begin(), n.end(), n.begin(), 0.0));
    std::vector<double> est(4000);
    for (std::size_t i = 0; i < est.size(); ++i) est[i] = s[i] + scale * n[i];
    CHECK(snr_db(s, est) == doctest::Approx(0.0).epsilon(0.1));
}

TEST_SUITE_END();

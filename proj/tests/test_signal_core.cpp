#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "tomox/fft.hpp"
#include "tomox/signal.hpp"

using namespace tomox;
namespace nums = std::numbers;

namespace {
const Axis kGrid = make_axis(-8.0, 16.0 / 1024.0, 1025);
}

TEST_CASE("make_axis basics") {
    auto ax = make_axis(-8.0, 0.0625, 257);
    CHECK(ax.at(0) == doctest::Approx(-8.0));
    CHECK(ax.back() == doctest::Approx(8.0));
    CHECK(ax.span() == doctest::Approx(16.0));

    auto two = make_axis(0.0, 1.0, 2);
    CHECK(two.at(0) == 0.0);
    CHECK(two.at(1) == 1.0);

    CHECK_THROWS_AS(make_axis(-8.0, -1.0, 10), invalid_argument_error);
    CHECK_THROWS_AS(make_axis(0.0, 1.0, 1), invalid_argument_error);
}

TEST_CASE("synthesize closed-form values") {
    auto g = synthesize(SignalKind::gaussian(), make_axis(-8.0, 0.0625, 257), true);
    const auto i0 = static_cast<std::size_t>(g.axis.nearest_index(0.0));
    CHECK(g.values[i0].real() == doctest::Approx(std::pow(nums::pi, -0.25)).epsilon(1e-9));

    auto mh = synthesize(SignalKind::mexican_hat(), kGrid);
    CHECK(mh.values[512].real() == doctest::Approx(1.0));

    auto gb = synthesize(SignalKind::gabor_wavelet(5.0), kGrid);
    CHECK(gb.values[512].real() == doctest::Approx(std::pow(nums::pi, -0.5)));
    CHECK(gb.values[512].imag() == doctest::Approx(0.0));
}

TEST_CASE("inner product golden values and errors") {
    auto g = synthesize(SignalKind::gaussian(), kGrid, true);
    CHECK(std::abs(inner_product(g, g) - cd{1.0, 0.0}) < 1e-9);

    // <gauss_n | mexhat_raw> = pi^(1/4)/2, from the gaussian moment
    // integral (1 - t^2) e^{-t^2} dt = sqrt(pi)/2
    auto mh = synthesize(SignalKind::mexican_hat(), kGrid);
    const cd ip = inner_product(g, mh);
    const double analytic = std::pow(nums::pi, 0.25) / 2.0;
    CHECK(std::abs(ip - cd{analytic, 0.0}) < 1e-9);
    // quadrature oracle on the same grid
    const cd q = oracle::quad(kGrid, [&](double t) {
        return std::pow(nums::pi, -0.25) * std::exp(-t * t / 2.0) *
               cd{(1.0 - t * t) * std::exp(-t * t / 2.0), 0.0};
    });
    CHECK(std::abs(ip - q) < 1e-12);

    auto other = synthesize(SignalKind::gaussian(), make_axis(-8.0, 0.0625, 257));
    CHECK_THROWS_AS(inner_product(g, other), incompatible_grids_error);
}

TEST_CASE("inner product conjugate symmetry property") {
    oracle::Rng rng;
    for (int rep = 0; rep < 20; ++rep) {
        SampledSignal a, b;
        a.axis = b.axis = make_axis(-4.0, 0.125, 65);
        for (int j = 0; j < 65; ++j) {
            a.values.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1)});
            b.values.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1)});
        }
        const cd ab = inner_product(a, b);
        const cd ba = inner_product(b, a);
        CHECK(std::abs(ab - std::conj(ba)) < 1e-13);
    }
}

TEST_CASE("fourier transform golden values") {
    const Axis om = make_axis(-10.0, 0.01, 2001);
    auto g = synthesize(SignalKind::gaussian(), kGrid, true);
    auto G = fourier_transform(g, om);
    CHECK(G.domain == Domain::frequency);

    // H(w) = pi^(1/4) sqrt(2) e^{-w^2/2}
    double worst = 0.0;
    for (std::int64_t k = 0; k < om.count; ++k) {
        const double w = om.at(k);
        const double ref = std::pow(nums::pi, 0.25) * nums::sqrt2 * std::exp(-w * w / 2.0);
        worst = std::max(worst, std::abs(G.values[static_cast<std::size_t>(k)] - cd{ref, 0.0}));
    }
    CHECK(worst < 1e-9);
    CHECK(G.values[1000].real() == doctest::Approx(1.8827925275534296).epsilon(1e-10));

    auto mh = synthesize(SignalKind::mexican_hat(), kGrid);
    auto MH = fourier_transform(mh, om);
    worst = 0.0;
    for (std::int64_t k = 0; k < om.count; ++k) {
        const double w = om.at(k);
        const double ref = std::sqrt(2.0 * nums::pi) * w * w * std::exp(-w * w / 2.0);
        worst = std::max(worst, std::abs(MH.values[static_cast<std::size_t>(k)] - cd{ref, 0.0}));
    }
    CHECK(worst < 1e-9);
    CHECK(std::abs(MH.values[1000]) < 1e-12);  // H(0) = 0

    CHECK_THROWS_AS(fourier_transform(G, om), domain_tag_error);
}

TEST_CASE("normalize") {
    auto g = synthesize(SignalKind::chirp(0.5, 1.0), kGrid);
    auto n = normalize(g);
    CHECK(std::abs(squared_norm(n) - 1.0) < 1e-12);
    auto again = normalize(n);
    double drift = 0.0;
    for (std::size_t i = 0; i < n.values.size(); ++i)
        drift = std::max(drift, std::abs(n.values[i] - again.values[i]));
    CHECK(drift < 1e-12);

    SampledSignal zero;
    zero.axis = kGrid;
    zero.values.assign(1025, cd{0.0, 0.0});
    CHECK_THROWS_AS(normalize(zero), degenerate_input_error);
}

TEST_CASE("parseval and unit norms across kinds") {
    const Axis om = make_axis(-16.0, 32.0 / 2048.0, 2049);
    for (auto kind : {SignalKind::gaussian(), SignalKind::gabor_wavelet(3.0),
                      SignalKind::mexican_hat(), SignalKind::chirp(0.5, 1.0),
                      SignalKind::two_tone(2.0, 4.0)}) {
        auto f = synthesize(kind, make_axis(-8.0, 16.0 / 256.0, 257), true);
        CHECK(std::abs(squared_norm(f) - 1.0) < 1e-12);
        auto big = synthesize(kind, kGrid, true);
        auto F = fourier_transform(big, om);
        CHECK(std::abs(squared_norm(F) / (2.0 * nums::pi) - 1.0) < 1e-6);
    }
}

TEST_CASE("signal kind parsing") {
    CHECK(parse_signal_kind("gaussian").tag == SignalKind::Tag::gaussian);
    CHECK(parse_signal_kind("gabor:5").p1 == doctest::Approx(5.0));
    auto c = parse_signal_kind("chirp:0.5,1");
    CHECK(c.p1 == doctest::Approx(0.5));
    CHECK(c.p2 == doctest::Approx(1.0));
    CHECK_THROWS_AS(parse_signal_kind("sawtooth"), invalid_argument_error);
    CHECK_THROWS_AS(parse_signal_kind("gabor"), invalid_argument_error);
}

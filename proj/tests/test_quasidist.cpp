#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "tomox/quasidist.hpp"

using namespace tomox;
namespace nums = std::numbers;

namespace {
const Axis kGrid = make_axis(-8.0, 16.0 / 1024.0, 1025);
const SampledSignal kGauss = synthesize(SignalKind::gaussian(), kGrid, true);
}  // namespace

TEST_CASE("wigner-ville of the ground gaussian") {
    const Axis tau = make_axis(-3.0, 0.25, 25);
    const Axis om = make_axis(-3.0, 0.25, 25);
    auto wv = wigner_ville(kGauss, tau, om);

    // closed form 2 e^{-tau^2 - w^2}
    double worst = 0.0;
    for (std::size_t i = 0; i < wv.n1(); ++i)
        for (std::size_t j = 0; j < wv.n2(); ++j) {
            const double tv = tau.at(static_cast<std::int64_t>(i));
            const double wvl = om.at(static_cast<std::int64_t>(j));
            worst = std::max(worst, std::abs(wv.at(i, j).real() -
                                             2.0 * std::exp(-tv * tv - wvl * wvl)));
        }
    CHECK(worst < 1e-3);
    CHECK(std::abs(wv.at(12, 12).real() - 2.0) < 1e-3);

    // realness
    double max_im = 0.0;
    for (const auto& v : wv.values) max_im = std::max(max_im, std::abs(v.imag()));
    CHECK(max_im < 1e-8 * 2.0);
}

TEST_CASE("wigner-ville marginal reproduces |f|^2") {
    const Axis tau = make_axis(-4.0, 0.5, 17);
    const Axis om = make_axis(-10.0, 0.0625, 321);
    for (auto kind : {SignalKind::gaussian(), SignalKind::chirp(0.5, 1.0),
                      SignalKind::two_tone(2.0, 4.0)}) {
        auto f = synthesize(kind, kGrid, true);
        auto wv = wigner_ville(f, tau, om);
        const auto w = trapezoid_weights(om);
        for (std::size_t i = 0; i < wv.n1(); ++i) {
            double m = 0.0;
            for (std::size_t j = 0; j < wv.n2(); ++j) m += w[j] * wv.at(i, j).real();
            const double t = tau.at(static_cast<std::int64_t>(i));
            const double expect =
                std::norm(f.values[static_cast<std::size_t>(f.axis.nearest_index(t))]);
            CHECK(std::abs(m / (2.0 * nums::pi) - expect) < 1e-4);
        }
    }
}

TEST_CASE("wigner-ville of the zero signal is zero") {
    SampledSignal zero;
    zero.axis = kGrid;
    zero.values.assign(1025, cd{0.0, 0.0});
    auto wv = wigner_ville(zero, make_axis(-2.0, 1.0, 5), make_axis(-2.0, 1.0, 5));
    for (const auto& v : wv.values) CHECK(std::abs(v) == 0.0);
}

TEST_CASE("wigner-ville warns beyond the sampling bandwidth") {
    auto wv = wigner_ville(kGauss, make_axis(-2.0, 1.0, 5), make_axis(-300.0, 150.0, 5));
    CHECK(!wv.warnings.empty());
}

TEST_CASE("ambiguity warns on grids far beyond the representable support") {
    auto a1 = ambiguity(kGauss, make_axis(-300.0, 150.0, 5), make_axis(-2.0, 1.0, 5));
    CHECK(!a1.warnings.empty());
    auto a2 = ambiguity(kGauss, make_axis(-2.0, 1.0, 5), make_axis(-40.0, 20.0, 5));
    CHECK(!a2.warnings.empty());
    auto ok = ambiguity(kGauss, make_axis(-2.0, 1.0, 5), make_axis(-2.0, 1.0, 5));
    CHECK(ok.warnings.empty());
}

TEST_CASE("ambiguity golden values and bound") {
    CHECK(std::abs(ambiguity_value(kGauss, 0.0, 0.0) - cd{1.0, 0.0}) < 1e-9);
    CHECK(std::abs(ambiguity_value(kGauss, 2.0, 0.0) - cd{std::exp(-1.0), 0.0}) < 1e-6);

    // against the brute-force oracle for a chirp
    auto chirp = synthesize(SignalKind::chirp(0.5, 1.0), kGrid, true);
    for (auto [m, n] : {std::pair{0.7, 1.3}, {-1.1, 0.4}, {2.0, -2.0}})
        CHECK(std::abs(ambiguity_value(chirp, m, n) - oracle::ambiguity_point(chirp, m, n)) <
              1e-8);

    const Axis mu = make_axis(-4.0, 0.5, 17);
    auto field = ambiguity(kGauss, mu, mu);
    const double peak = std::abs(field.at(8, 8));
    for (const auto& v : field.values) CHECK(std::abs(v) <= peak + 1e-12);

    // hermitian symmetry
    double worst = 0.0;
    for (std::size_t i = 0; i < field.n1(); ++i)
        for (std::size_t j = 0; j < field.n2(); ++j)
            worst = std::max(worst, std::abs(field.at(i, j) -
                                             std::conj(field.at(16 - i, 16 - j))));
    CHECK(worst < 1e-10);
}

TEST_CASE("affine quasidistribution golden values") {
    CHECK(std::abs(affine_quasidistribution_value(kGauss, 1.0, 0.0) - cd{1.0, 0.0}) < 1e-9);
    CHECK(std::abs(affine_quasidistribution_value(kGauss, 1.0, 2.0) - cd{std::exp(-1.0), 0.0}) <
          1e-6);

    // s = 2, tau = 0: analytic sqrt(2s/(s^2+1)) = sqrt(0.8), also the
    // brute-force quadrature of the defining integral
    const cd got = affine_quasidistribution_value(kGauss, 2.0, 0.0);
    CHECK(std::abs(got - cd{std::sqrt(0.8), 0.0}) < 1e-9);
    const cd direct = oracle::quad(kGrid, [&](double t) {
        return std::conj(oracle::sinc_eval(kGauss, (t - 0.0) / std::sqrt(2.0))) *
               oracle::sinc_eval(kGauss, std::sqrt(2.0) * t);
    });
    CHECK(std::abs(got - direct) < 1e-9);

    // s = 1 row reduces to the ambiguity function at mu = 0
    for (double tau : {-2.0, -0.5, 1.0, 3.0})
        CHECK(std::abs(affine_quasidistribution_value(kGauss, 1.0, tau) -
                       ambiguity_value(kGauss, 0.0, tau)) < 1e-8);

    CHECK_THROWS_AS(affine_quasidistribution_value(kGauss, -1.0, 0.0), invalid_argument_error);
    CHECK_THROWS_AS(
        affine_quasidistribution(kGauss, make_axis(-1.0, 0.5, 5), make_axis(0.0, 1.0, 3)),
        invalid_argument_error);
}

TEST_CASE("husimi-kano golden values and bounds") {
    CHECK(std::norm(coherent_state_overlap(kGauss, 0.0, 0.0)) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::abs(std::norm(coherent_state_overlap(kGauss, 1.0, 1.0)) - std::exp(-1.0)) < 1e-6);

    const Axis ax = make_axis(-3.0, 0.5, 13);
    auto q = husimi_kano(kGauss, ax, ax);
    double worst = 0.0;
    for (std::size_t i = 0; i < q.n1(); ++i)
        for (std::size_t j = 0; j < q.n2(); ++j) {
            const double t = ax.at(static_cast<std::int64_t>(i));
            const double w = ax.at(static_cast<std::int64_t>(j));
            worst = std::max(worst, std::abs(q.at(i, j).real() -
                                             std::exp(-(t * t + w * w) / 2.0)));
            CHECK(q.at(i, j).real() >= -1e-12);
            CHECK(q.at(i, j).real() <= 1.0 + 1e-8);
        }
    CHECK(worst < 1e-6);
    CHECK(q.warnings.empty());

    auto raw = synthesize(SignalKind::gaussian(), kGrid);  // unnormalized
    auto q2 = husimi_kano(raw, ax, ax);
    CHECK(!q2.warnings.empty());

    // global phase invariance
    SampledSignal rot = kGauss;
    for (auto& v : rot.values) v *= cd{std::cos(0.9), std::sin(0.9)};
    auto q3 = husimi_kano(rot, ax, ax);
    double drift = 0.0;
    for (std::size_t i = 0; i < q.values.size(); ++i)
        drift = std::max(drift, std::abs(q.values[i].real() - q3.values[i].real()));
    CHECK(drift < 1e-12);
}

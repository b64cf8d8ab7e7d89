#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "tomox/fft.hpp"
#include "tomox/affine.hpp"

using namespace tomox;
namespace nums = std::numbers;

namespace {
const Axis kGrid = make_axis(-8.0, 16.0 / 1024.0, 1025);
const SampledSignal kGauss = synthesize(SignalKind::gaussian(), kGrid, true);
const Axis kS = make_axis(-40.0, 0.0625, 1281);

double mass(const TomogramField& f) {
    const auto w = trapezoid_weights(f.x_axis);
    double m = 0.0;
    for (std::size_t k = 0; k < f.nx(); ++k) m += w[k] * f.row(0)[k];
    return m;
}
}  // namespace

TEST_CASE("frequency-scale tomogram of the gaussian") {
    auto row = freq_scale_tomogram(kGauss, {0.0, 1.0, kS});
    CHECK(std::abs(mass(row) - 1.0) < 1e-3);

    // pinned golden value at s = 0: Gamma(1/4)^2/(pi^{3/2} 2^{3/2}), also
    // reproduced by the brute-force quadrature oracle on the analytic
    // self-dual spectrum pi^{-1/4} e^{-w^2/2}
    const auto i0 = static_cast<std::size_t>(kS.nearest_index(0.0));
    const double analytic = 0.8346268416740731;  // Gamma(0.25)^2/(pi^1.5 * 2^1.5)
    CHECK(std::abs(row.values[i0] - analytic) < 1e-5);
    auto spectrum = [](double w) {
        return cd{std::pow(std::numbers::pi, -0.25) * std::exp(-w * w / 2.0), 0.0};
    };
    const double brute = oracle::freq_scale_point(spectrum, 0.0, 1.0, 0.0);
    CHECK(std::abs(row.values[i0] - brute) < 1e-5);

    CHECK_THROWS_AS(freq_scale_tomogram(kGauss, {0.0, 0.0, kS}), invalid_argument_error);
}

TEST_CASE("analytic signal has no negative-frequency branch") {
    auto gabor6 = synthesize(SignalKind::gabor_wavelet(6.0), kGrid, true);
    // the negative branch alone: compute the full row for a spectrum that
    // lives at w > 0 and compare with the positive branch computed from the
    // mirrored signal
    auto row = freq_scale_tomogram(gabor6, {0.0, 1.0, kS});
    SampledSignal mirrored = gabor6;
    for (std::size_t j = 0; j < mirrored.values.size(); ++j)
        mirrored.values[j] = std::conj(gabor6.values[j]);  // spectrum flips to w < 0
    auto row_neg = freq_scale_tomogram(mirrored, {0.0, -1.0, kS});
    // both rows see the same |spectrum| content; the difference isolates
    // branch bookkeeping errors
    double worst = 0.0;
    for (std::size_t k = 0; k < row.nx(); ++k)
        worst = std::max(worst, std::abs(row.values[k] - row_neg.values[k]));
    CHECK(worst < 1e-10);
    CHECK(std::abs(mass(row) - 1.0) < 1e-3);
}

TEST_CASE("time-scale tomogram basics") {
    auto row = time_scale_tomogram(kGauss, {0.7, 1.0, kS});
    CHECK(std::abs(mass(row) - 1.0) < 1e-3);
    for (double v : row.row(0)) CHECK(v >= -1e-12);

    // brute-force quadrature oracle at a few s values
    auto gauss_at = [](double t) {
        return cd{std::pow(std::numbers::pi, -0.25) * std::exp(-t * t / 2.0), 0.0};
    };
    for (double s : {-1.0, 0.0, 1.5})
        CHECK(std::abs(row.values[static_cast<std::size_t>(kS.nearest_index(s))] -
                       oracle::time_scale_point(gauss_at, 0.7, 1.0, s)) < 1e-5);
}

TEST_CASE("time-scale branch vanishes for one-sided signals") {
    // narrow bump at t = 3, zero for t <= 0
    SampledSignal bump;
    bump.axis = kGrid;
    for (std::int64_t i = 0; i < kGrid.count; ++i) {
        const double t = kGrid.at(i);
        bump.values.push_back({t > 0 ? std::exp(-8.0 * (t - 3.0) * (t - 3.0)) : 0.0, 0.0});
    }
    bump = normalize(bump);
    // mirror symmetry check: the tomogram of f(-t) swaps branches, so the
    // total is unchanged for an even signal, and a one-sided signal must give
    // the same row after mirroring
    auto row = time_scale_tomogram(bump, {0.4, 1.0, kS});
    SampledSignal mirrored;
    mirrored.axis = kGrid;
    mirrored.values.resize(bump.values.size());
    for (std::size_t j = 0; j < bump.values.size(); ++j)
        mirrored.values[j] = bump.values[bump.values.size() - 1 - j];
    auto row_m = time_scale_tomogram(mirrored, {-0.4, -1.0, kS});
    double worst = 0.0;
    for (std::size_t k = 0; k < row.nx(); ++k)
        worst = std::max(worst, std::abs(row.values[k] - row_m.values[k]));
    CHECK(worst < 1e-9);

    // the negative branch of the one-sided bump contributes nothing: the
    // whole row must equal the brute-force positive-branch integral
    const double bump_scale = bump.values[static_cast<std::size_t>(kGrid.nearest_index(3.0))]
                                  .real();  // normalization constant after sampling
    auto bump_at = [&](double t) {
        return cd{t > 0 ? bump_scale * std::exp(-8.0 * (t - 3.0) * (t - 3.0)) : 0.0, 0.0};
    };
    for (double s : {-2.0, 0.5})
        CHECK(std::abs(row.values[static_cast<std::size_t>(kS.nearest_index(s))] -
                       oracle::time_scale_point(bump_at, 0.4, 1.0, s)) < 1e-6);
}

TEST_CASE("mexican hat tomogram is reflection invariant") {
    auto mh = synthesize(SignalKind::mexican_hat(), kGrid, true);
    auto row = time_scale_tomogram(mh, {0.5, 1.0, kS});
    SampledSignal flipped;
    flipped.axis = kGrid;
    flipped.values.assign(mh.values.rbegin(), mh.values.rend());
    auto row_f = time_scale_tomogram(flipped, {0.5, 1.0, kS});
    double worst = 0.0;
    for (std::size_t k = 0; k < row.nx(); ++k)
        worst = std::max(worst, std::abs(row.values[k] - row_f.values[k]));
    CHECK(worst < 1e-10);
}

TEST_CASE("affine homogeneity") {
    auto chirp = synthesize(SignalKind::chirp(0.5, 1.0), kGrid, true);
    const Axis sh = make_axis(-20.0, 0.0625, 641);
    for (double p : {0.5, 2.0}) {
        auto lhs = time_scale_tomogram(chirp, {0.7 / p, 1.0 / p, sh});
        const Axis shp = make_axis(p * sh.start, p * sh.step, sh.count);
        auto rhs = time_scale_tomogram(chirp, {0.7, 1.0, shp});
        double worst = 0.0;
        for (std::size_t k = 0; k < lhs.nx(); ++k)
            worst = std::max(worst, std::abs(lhs.values[k] - p * rhs.values[k]));
        CHECK(worst < 1e-3);
    }
}

TEST_CASE("time-scale inversion round trips") {
    const Axis mu = make_axis(-12.0, 0.1, 241);
    const Axis out = make_axis(-6.0, 0.0625, 193);

    auto data = time_scale_inversion_data(kGauss, mu, kS);
    auto rec = invert_time_scale(data, out);
    SampledSignal ref;
    ref.axis = out;
    ref.values = resample_uniform(kGauss, out.start, out.step, 193);
    CHECK(phase_aligned_rel_l2(ref, rec) < 2e-2);

    auto chirp = synthesize(SignalKind::chirp(0.5, 1.0), kGrid, true);
    auto data_c = time_scale_inversion_data(chirp, mu, kS);
    auto rec_c = invert_time_scale(data_c, out);
    SampledSignal ref_c;
    ref_c.axis = out;
    ref_c.values = resample_uniform(chirp, out.start, out.step, 193);
    CHECK(phase_aligned_rel_l2(ref_c, rec_c) < 5e-2);
}

TEST_CASE("time-scale inversion rejects the zero field") {
    TomogramField zero;
    zero.family = TomogramFamily::time_scale;
    zero.x_axis = make_axis(-10.0, 0.25, 81);
    for (double m : {-1.0, 0.0, 1.0}) zero.rays.push_back({m, 1.0});
    zero.values.assign(3 * 81, 0.0);
    CHECK_THROWS_AS(invert_time_scale(zero, make_axis(-2.0, 0.5, 9)), ill_conditioned_error);
}

TEST_CASE("affine parameter map") {
    {
        auto [mu, nu] = affine_param_map(1.0, 5.0);
        CHECK(mu == doctest::Approx(5.0).epsilon(1e-12));
        CHECK(nu == doctest::Approx(0.0));
    }
    {
        auto [mu, nu] = affine_param_map(std::exp(1.0), 1.0);
        CHECK(mu == doctest::Approx(1.0 / (std::exp(1.0) - 1.0)).epsilon(1e-12));
        CHECK(nu == doctest::Approx(1.0).epsilon(1e-12));
    }
    for (double s : {0.5, 1.0, 2.0, std::exp(1.0)}) {
        auto [mu, nu] = affine_param_map(s, -2.3);
        auto [s2, tau2] = affine_param_map_inverse(mu, nu);
        CHECK(std::abs(s2 - s) < 1e-12);
        CHECK(std::abs(tau2 - (-2.3)) < 1e-12);
    }
    CHECK_THROWS_AS(affine_param_map(-1.0, 0.0), invalid_argument_error);
}

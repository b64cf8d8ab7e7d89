#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "tomox/fft.hpp"
#include "tomox/quasidist.hpp"
#include "tomox/symplectic.hpp"

using namespace tomox;
namespace nums = std::numbers;

namespace {
const Axis kGrid = make_axis(-8.0, 16.0 / 1024.0, 1025);
const SampledSignal kGauss = synthesize(SignalKind::gaussian(), kGrid, true);
const SampledSignal kChirp = synthesize(SignalKind::chirp(0.5, 1.0), kGrid, true);
}  // namespace

TEST_CASE("symplectic tomogram of the ground gaussian is theta independent") {
    const Axis x = make_axis(-6.0, 0.05, 241);
    for (double th : {0.3, nums::pi / 4.0, nums::pi / 2.0, 1.3}) {
        auto row = symplectic_tomogram(kGauss, {std::cos(th), std::sin(th)}, x);
        double acc = 0.0;
        for (std::size_t k = 0; k < row.nx(); ++k) {
            const double X = x.at(static_cast<std::int64_t>(k));
            const double ref = std::exp(-X * X) / std::sqrt(nums::pi);
            acc += (row.values[k] - ref) * (row.values[k] - ref);
        }
        CHECK(std::sqrt(acc / 241.0) < 1e-5);
        CHECK(row.values[120] == doctest::Approx(1.0 / std::sqrt(nums::pi)).epsilon(1e-5));
    }
}

TEST_CASE("symplectic tomogram matches brute-force quadrature for a chirp") {
    const Axis x = make_axis(-4.0, 0.5, 17);
    const double th = nums::pi / 3.0;
    auto row = symplectic_tomogram(kChirp, {std::cos(th), std::sin(th)}, x);
    for (std::size_t k = 0; k < row.nx(); ++k) {
        const double ref = oracle::symplectic_point(kChirp, std::cos(th), std::sin(th),
                                                    x.at(static_cast<std::int64_t>(k)));
        CHECK(std::abs(row.values[k] - ref) < 1e-10);
    }
}

TEST_CASE("delta-limit branch and pure-fourier ray") {
    const Axis x = make_axis(-6.0, 0.0625, 193);
    auto row = symplectic_tomogram(kChirp, {1.0, 0.0}, x);
    for (std::size_t k = 0; k < row.nx(); ++k) {
        const double X = x.at(static_cast<std::int64_t>(k));
        const double expect =
            std::norm(kChirp.values[static_cast<std::size_t>(kChirp.axis.nearest_index(X))]);
        CHECK(std::abs(row.values[k] - expect) < 1e-10);
    }

    auto f_row = symplectic_tomogram(kGauss, {0.0, 1.0}, x);
    auto F = fourier_transform(kGauss, x);
    for (std::size_t k = 0; k < f_row.nx(); ++k)
        CHECK(std::abs(f_row.values[k] - std::norm(F.values[k]) / (2.0 * nums::pi)) < 1e-5);

    CHECK_THROWS_AS(symplectic_tomogram(kGauss, {0.0, 0.0}, x), invalid_argument_error);
}

TEST_CASE("tomogram family rows normalize and coincide for the gaussian") {
    const Axis x = make_axis(-12.0, 0.05, 481);
    auto fam = tomogram_family(kGauss, {0.0, nums::pi / 4.0, nums::pi / 2.0}, x);
    REQUIRE(fam.rays.size() == 3);
    const auto w = trapezoid_weights(x);
    for (std::size_t r = 0; r < 3; ++r) {
        double mass = 0.0;
        for (std::size_t k = 0; k < fam.nx(); ++k) mass += w[k] * fam.row(r)[k];
        CHECK(std::abs(mass - 1.0) < 1e-4);
    }
    double worst = 0.0;
    for (std::size_t k = 0; k < fam.nx(); ++k)
        worst = std::max({worst, std::abs(fam.row(0)[k] - fam.row(1)[k]),
                          std::abs(fam.row(1)[k] - fam.row(2)[k])});
    CHECK(worst < 1e-5);

    CHECK_THROWS_AS(tomogram_family(kGauss, {}, x), invalid_argument_error);
}

TEST_CASE("homogeneity of the symplectic tomogram") {
    const Axis x = make_axis(-8.0, 0.0625, 257);
    const double th = nums::pi / 5.0;
    const RayParams base{std::cos(th), std::sin(th)};
    for (double p : {0.5, 2.0, -1.0}) {
        auto lhs = symplectic_tomogram(kChirp, {base.mu / p, base.nu / p}, x);
        const Axis xs = p > 0 ? make_axis(p * x.start, p * x.step, x.count)
                              : make_axis(p * x.back(), -p * x.step, x.count);
        auto rhs = symplectic_tomogram(kChirp, base, xs);
        double worst = 0.0;
        for (std::size_t k = 0; k < lhs.nx(); ++k) {
            const double rhs_val = p > 0 ? rhs.values[k] : rhs.values[lhs.nx() - 1 - k];
            worst = std::max(worst, std::abs(lhs.values[k] - std::abs(p) * rhs_val));
        }
        CHECK(worst < 1e-3);
    }
}

TEST_CASE("inversion round trips") {
    const Axis t_axis = make_axis(-4.0, 0.125, 65);
    const Axis mu_axis = make_axis(-8.9375, 0.125, 144);
    const Axis x_axis = make_axis(-40.0, 0.125, 641);

    auto data = symplectic_inversion_data(kGauss, t_axis, mu_axis, x_axis);
    auto rec = invert_symplectic(data);
    SampledSignal ref;
    ref.axis = t_axis;
    ref.values = resample_uniform(kGauss, t_axis.start, t_axis.step, 65);
    CHECK(phase_aligned_rel_l2(ref, rec) < 1e-2);

    auto data_c = symplectic_inversion_data(kChirp, t_axis, mu_axis, x_axis);
    auto rec_c = invert_symplectic(data_c);
    SampledSignal ref_c;
    ref_c.axis = t_axis;
    ref_c.values = resample_uniform(kChirp, t_axis.start, t_axis.step, 65);
    CHECK(phase_aligned_rel_l2(ref_c, rec_c) < 2e-2);
}

TEST_CASE("inversion rejects signals with f(0) ~ 0") {
    SampledSignal odd;
    odd.axis = kGrid;
    for (std::int64_t i = 0; i < kGrid.count; ++i) {
        const double t = kGrid.at(i);
        odd.values.push_back({t * std::exp(-t * t / 2.0), 0.0});
    }
    odd = normalize(odd);
    const Axis t_axis = make_axis(-2.0, 0.25, 17);
    const Axis mu_axis = make_axis(-8.9375, 0.25, 72);
    const Axis x_axis = make_axis(-40.0, 0.25, 321);
    auto data = symplectic_inversion_data(odd, t_axis, mu_axis, x_axis);
    CHECK_THROWS_AS(invert_symplectic(data), ill_conditioned_error);
}

TEST_CASE("radon transform of the wigner field matches the direct tomogram") {
    const Axis tau = make_axis(-8.0, 0.0625, 257);
    const Axis om = make_axis(-10.0, 0.078125, 257);
    auto wv = wigner_ville(kGauss, tau, om);
    const Axis x = make_axis(-6.0, 0.05, 241);

    for (double th : {0.0, nums::pi / 4.0, nums::pi / 2.0}) {
        RayParams ray{std::cos(th), std::sin(th)};
        auto via = tomogram_from_wigner(wv, ray, x);
        auto direct = symplectic_tomogram(kGauss, ray, x);
        double acc = 0.0;
        for (std::size_t k = 0; k < via.nx(); ++k)
            acc += (via.values[k] - direct.values[k]) * (via.values[k] - direct.values[k]);
        CHECK(std::sqrt(acc / 241.0) < 1e-3);
    }

    PhasePlaneField zero = wv;
    std::fill(zero.values.begin(), zero.values.end(), cd{0.0, 0.0});
    auto z = tomogram_from_wigner(zero, {1.0, 1.0}, x);
    for (double v : z.values) CHECK(v == 0.0);

    auto amb = ambiguity(kGauss, make_axis(-1.0, 1.0, 3), make_axis(-1.0, 1.0, 3));
    CHECK_THROWS_AS(tomogram_from_wigner(amb, {1.0, 1.0}, x), domain_tag_error);
}

TEST_CASE("quasidist_from_tomogram equals the gaussian characteristic function") {
    const Axis x = make_axis(-12.0, 0.025, 961);
    const double th = nums::pi / 4.0;
    auto row = symplectic_tomogram(kGauss, {std::cos(th), std::sin(th)}, x);
    std::vector<std::string> warn;
    const cd q = quasidist_from_tomogram(row, 0, &warn);
    CHECK(std::abs(q - cd{std::exp(-0.25), 0.0}) < 1e-5);
    CHECK(warn.empty());

    // phase-blindness of the tomogram
    SampledSignal rot = kGauss;
    for (auto& v : rot.values) v *= cd{std::cos(1.3), std::sin(1.3)};
    auto row2 = symplectic_tomogram(rot, {std::cos(th), std::sin(th)}, x);
    const cd q2 = quasidist_from_tomogram(row2);
    CHECK(std::abs(q - q2) < 1e-12);

    // truncated support warns
    auto narrow = symplectic_tomogram(kGauss, {std::cos(th), std::sin(th)},
                                      make_axis(-0.5, 0.05, 21));
    quasidist_from_tomogram(narrow, 0, &warn);
    CHECK(!warn.empty());
}

TEST_CASE("eigenfunction projector reproduces tomogram values") {
    const double th = nums::pi / 3.0;
    RayParams ray{std::cos(th), std::sin(th)};
    const Axis x = make_axis(-6.0, 0.05, 241);
    auto row = symplectic_tomogram(kChirp, ray, x);
    for (double X : {-2.0, -0.7, 0.0, 1.1, 2.5}) {
        auto psi = symplectic_eigenfunction(ray, X, kGrid);
        const double proj = std::norm(inner_product(psi, kChirp));
        const double direct = row.values[static_cast<std::size_t>(x.nearest_index(X))];
        CHECK(std::abs(proj - direct) < 1e-8);
    }
    CHECK_THROWS_AS(symplectic_eigenfunction({1.0, 0.0}, 0.0, kGrid), invalid_argument_error);
}

#include "tomox/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "tomox/fft.hpp"
#include "tomox/quasidist.hpp"
#include "tomox/relations.hpp"
#include "tomox/symplectic.hpp"
#include "tomox/wavelet.hpp"

namespace tomox {

namespace {

constexpr double kPi = std::numbers::pi;

struct Suite {
    VerificationReport report;
    double tol_scale = 1.0;

    void add(const std::string& name, double residual, double tolerance) {
        const double tol = tolerance * tol_scale;
        report.checks.push_back({name, residual, tol, residual <= tol});
    }
};

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

double rel_l2_on_grid(const SampledSignal& ref, const SampledSignal& got) {
    return phase_aligned_rel_l2(ref, got);
}

double row_mass(const TomogramField& f, std::size_t r) {
    const auto w = trapezoid_weights(f.x_axis);
    auto row = f.row(r);
    double m = 0.0;
    for (std::size_t k = 0; k < row.size(); ++k) m += w[k] * row[k];
    return m;
}

SampledSignal sample_onto(const SampledSignal& f, const Axis& axis) {
    SampledSignal out;
    out.axis = axis;
    out.domain = f.domain;
    out.values = resample_uniform(f, axis.start, axis.step, static_cast<std::size_t>(axis.count));
    return out;
}

double rms_diff(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(acc / static_cast<double>(a.size()));
}

}  // namespace

VerificationReport run_verify(const Config& config) {
    Timer total;
    Suite suite;
    suite.tol_scale = config.get_double("tolerance_scale", 1.0);

    const Axis grid = parse_axis_spec(config.get_or("grid.signal", "-8:0.015625:1025"));
    std::vector<std::pair<std::string, SampledSignal>> signals;
    {
        std::istringstream ss(config.get_or(
            "signals", "gaussian;gabor:3;mexican_hat;chirp:0.5,1;two_tone:2,4"));
        std::string item;
        while (std::getline(ss, item, ';')) {
            if (item.empty()) continue;
            try {
                signals.emplace_back(item, synthesize(parse_signal_kind(item), grid, true));
            } catch (const invalid_argument_error& e) {
                throw config_error(std::string("bad signal entry: ") + e.what());
            }
        }
    }
    if (signals.size() < 5)
        throw config_error("the suite needs the five signal kinds, gaussian first");

    const auto& gauss = signals.front().second;  // ground gaussian by convention
    if (signals.front().first != "gaussian") throw config_error("first signal must be gaussian");
    const SampledSignal chirp = synthesize(SignalKind::chirp(0.5, 1.0), grid, true);
    const SampledSignal mexhat = synthesize(SignalKind::mexican_hat(), grid, true);

    {
        std::ostringstream os;
        os << "signal grid " << grid.start << ":" << grid.step << ":" << grid.count;
        suite.report.grid_summary = os.str();
        std::ostringstream sg;
        for (const auto& [n, s] : signals) sg << n << ";";
        suite.report.signal_summary = sg.str();
    }

    // ---- signal-core invariants ----
    {
        const Axis om = make_axis(-16.0, 32.0 / 2048.0, 2049);
        double worst = 0.0;
        for (const auto& [name, f] : signals) {
            auto F = fourier_transform(f, om);
            worst = std::max(worst,
                             std::abs(squared_norm(F) / (2.0 * kPi) / squared_norm(f) - 1.0));
        }
        suite.add("inv-signal-parseval", worst, 1e-6);

        const cd a = inner_product(gauss, mexhat);
        const cd b = inner_product(mexhat, gauss);
        suite.add("inv-signal-conjugate-symmetry", std::abs(a - std::conj(b)), 1e-13);

        double norm_worst = 0.0;
        for (const auto& [name, f] : signals)
            norm_worst = std::max(norm_worst, std::abs(squared_norm(f) - 1.0));
        suite.add("inv-signal-unit-norm", norm_worst, 1e-12);
    }

    // ---- quasidistribution invariants ----
    {
        const Axis tau = make_axis(-8.0, 0.125, 129);
        const Axis om = make_axis(-10.0, 0.125, 161);
        double realness = 0.0, marginal = 0.0;
        for (const auto& [name, f] : signals) {
            auto wv = wigner_ville(f, tau, om);
            double max_re = 0.0, max_im = 0.0;
            for (const auto& v : wv.values) {
                max_re = std::max(max_re, std::abs(v.real()));
                max_im = std::max(max_im, std::abs(v.imag()));
            }
            realness = std::max(realness, max_im / max_re);
            const auto wom = trapezoid_weights(om);
            for (std::size_t i = 0; i < wv.n1(); ++i) {
                double m = 0.0;
                for (std::size_t j = 0; j < wv.n2(); ++j) m += wom[j] * wv.at(i, j).real();
                const double t = tau.at(static_cast<std::int64_t>(i));
                const double expect =
                    std::norm(f.values[static_cast<std::size_t>(f.axis.nearest_index(t))]);
                marginal = std::max(marginal, std::abs(m / (2.0 * kPi) - expect));
            }
        }
        suite.add("inv-wv-realness", realness, 1e-8);
        suite.add("inv-wv-marginal", marginal, 1e-4);

        const Axis mu = make_axis(-6.0, 0.25, 49);
        double herm = 0.0;
        auto amb = ambiguity(gauss, mu, mu);
        for (std::size_t i = 0; i < amb.n1(); ++i)
            for (std::size_t j = 0; j < amb.n2(); ++j)
                herm = std::max(herm, std::abs(amb.at(i, j) -
                                               std::conj(amb.at(amb.n1() - 1 - i,
                                                                amb.n2() - 1 - j))));
        suite.add("inv-ambiguity-hermitian", herm, 1e-10);

        double s1 = 0.0;
        for (double t : {-3.0, -1.0, 0.5, 2.0})
            s1 = std::max(s1, std::abs(affine_quasidistribution_value(chirp, 1.0, t) -
                                       ambiguity_value(chirp, 0.0, t)));
        suite.add("inv-affine-q-s1", s1, 1e-8);

        const Axis ht = make_axis(-3.0, 0.25, 25);
        auto q1 = husimi_kano(gauss, ht, ht);
        SampledSignal rotated = gauss;
        for (auto& v : rotated.values) v *= polar_ld(0.7L);
        auto q2 = husimi_kano(rotated, ht, ht);
        double phase_res = 0.0, range_res = 0.0;
        for (std::size_t i = 0; i < q1.values.size(); ++i) {
            phase_res = std::max(phase_res, std::abs(q1.values[i].real() - q2.values[i].real()));
            range_res = std::max({range_res, -q1.values[i].real(), q1.values[i].real() - 1.0});
        }
        suite.add("inv-husimi-phase-invariance", phase_res, 1e-12);
        suite.add("inv-husimi-range", std::max(range_res, 0.0), 1e-8);
    }

    // ---- criterion 1: tomogram normalization ----
    std::vector<double> thetas;
    {
        const auto n_theta = config.get_int("symplectic.theta_count", 9);
        for (std::int64_t k = 0; k < n_theta; ++k)
            thetas.push_back(kPi * static_cast<double>(k) / static_cast<double>(n_theta));
    }
    const Axis x_norm = parse_axis_spec(config.get_or("symplectic.x", "-12:0.05:481"));
    const Axis s_axis = parse_axis_spec(config.get_or("affine.s", "-40:0.0625:1281"));
    const std::vector<RayParams> affine_rays{{0.0, 1.0}, {1.0, 1.0}, {-0.5, 2.0}};
    {
        Timer t1;
        double worst = 0.0, positivity = 0.0;
        for (const auto& [name, f] : signals) {
            auto fam = tomogram_family(f, thetas, x_norm);
            for (std::size_t r = 0; r < fam.rays.size(); ++r) {
                worst = std::max(worst, std::abs(row_mass(fam, r) - 1.0));
                for (double v : fam.row(r)) positivity = std::max(positivity, -v);
            }
        }
        suite.add("c1-normalization-symplectic", worst, 1e-4);
        suite.add("inv-tomogram-positivity", positivity, 1e-12);

        double worst_ts = 0.0, worst_fs = 0.0;
        for (const auto& [name, f] : signals) {
            for (const auto& ray : affine_rays) {
                auto ts = time_scale_tomogram(f, {ray.mu, ray.nu, s_axis});
                auto fs = freq_scale_tomogram(f, {ray.mu, ray.nu, s_axis});
                worst_ts = std::max(worst_ts, std::abs(row_mass(ts, 0) - 1.0));
                worst_fs = std::max(worst_fs, std::abs(row_mass(fs, 0) - 1.0));
            }
        }
        suite.add("c1-normalization-time-scale", worst_ts, 1e-3);
        suite.add("c1-normalization-freq-scale", worst_fs, 1e-3);
        suite.report.criterion_seconds.emplace_back("criterion-1", t1.seconds());
    }

    // ---- criterion 2: gaussian golden values ----
    {
        Timer t2;
        const Axis xg = make_axis(-6.0, 0.05, 241);
        double rms_worst = 0.0;
        for (double th : thetas) {
            auto row = symplectic_tomogram(gauss, {std::cos(th), std::sin(th)}, xg);
            double acc = 0.0;
            for (std::size_t k = 0; k < row.nx(); ++k) {
                const double X = xg.at(static_cast<std::int64_t>(k));
                const double ref = std::exp(-X * X) / std::sqrt(kPi);
                acc += (row.values[k] - ref) * (row.values[k] - ref);
            }
            rms_worst = std::max(rms_worst, std::sqrt(acc / static_cast<double>(row.nx())));
        }
        suite.add("c2-symplectic-gaussian-golden", rms_worst, 1e-5);

        double amb_worst = 0.0;
        for (int i = -2; i <= 2; ++i)
            for (int j = -2; j <= 2; ++j) {
                const double m = i, n = j;
                amb_worst = std::max(
                    amb_worst, std::abs(ambiguity_value(gauss, m, n) -
                                        std::exp(-(m * m + n * n) / 4.0)));
            }
        suite.add("c2-ambiguity-gaussian-golden", amb_worst, 1e-6);

        const Axis small = make_axis(-0.5, 0.5, 3);
        auto wv = wigner_ville(gauss, small, small);
        suite.add("c2-wigner-peak", std::abs(wv.at(1, 1).real() - 2.0), 1e-3);

        const double q11 = std::norm(coherent_state_overlap(gauss, 1.0, 1.0));
        suite.add("c2-husimi-golden", std::abs(q11 - std::exp(-1.0)), 1e-6);
        suite.report.criterion_seconds.emplace_back("criterion-2", t2.seconds());
    }

    // ---- criterion 3: radon bridge ----
    {
        Timer t3;
        const Axis tau = make_axis(-8.0, 0.0625, 257);
        const Axis om = make_axis(-10.0, 0.078125, 257);
        const Axis xb = make_axis(-6.0, 0.05, 241);
        const std::vector<double> bridge_thetas{0.0, kPi / 6.0, kPi / 4.0, kPi / 3.0, kPi / 2.0};
        double worst = 0.0;
        for (const auto& [name, f] : signals) {
            auto wv = wigner_ville(f, tau, om);
            for (double th : bridge_thetas) {
                RayParams ray{std::cos(th), std::sin(th)};
                auto via_radon = tomogram_from_wigner(wv, ray, xb);
                auto direct = symplectic_tomogram(f, ray, xb);
                worst = std::max(worst, rms_diff(via_radon.row(0), direct.row(0)));
            }
        }
        suite.add("c3-radon-bridge", worst, 1e-3);
        suite.report.criterion_seconds.emplace_back("criterion-3", t3.seconds());
    }

    // ---- criterion 4: homogeneity ----
    {
        Timer t4;
        const std::vector<double> ps{0.5, 2.0, -1.0};
        auto scaled_axis = [](const Axis& ax, double p) {
            if (p > 0) return make_axis(p * ax.start, p * ax.step, ax.count);
            return make_axis(p * ax.back(), -p * ax.step, ax.count);
        };
        auto pick = [](std::span<const double> row, double p, std::size_t k) {
            return p > 0 ? row[k] : row[row.size() - 1 - k];
        };

        {
            const double th = kPi / 5.0;
            const RayParams base{std::cos(th), std::sin(th)};
            const Axis xh = make_axis(-8.0, 0.0625, 257);
            double worst = 0.0;
            for (double p : ps) {
                auto lhs = symplectic_tomogram(gauss, {base.mu / p, base.nu / p}, xh);
                auto rhs = symplectic_tomogram(gauss, base, scaled_axis(xh, p));
                for (std::size_t k = 0; k < lhs.nx(); ++k)
                    worst = std::max(worst, std::abs(lhs.values[k] -
                                                     std::abs(p) * pick(rhs.row(0), p, k)));
            }
            suite.add("c4-homogeneity-symplectic", worst, 1e-3);
        }
        for (bool time_family : {true, false}) {
            const RayParams base{0.7, 1.0};
            const Axis sh = make_axis(-20.0, 0.0625, 641);
            double worst = 0.0;
            for (double p : {0.5, 2.0, -1.0}) {
                AffineParams lhs_p{base.mu / p, base.nu / p, sh};
                AffineParams rhs_p{base.mu, base.nu, scaled_axis(sh, p)};
                auto lhs = time_family ? time_scale_tomogram(chirp, lhs_p)
                                       : freq_scale_tomogram(chirp, lhs_p);
                auto rhs = time_family ? time_scale_tomogram(chirp, rhs_p)
                                       : freq_scale_tomogram(chirp, rhs_p);
                for (std::size_t k = 0; k < lhs.nx(); ++k)
                    worst = std::max(worst, std::abs(lhs.values[k] -
                                                     std::abs(p) * pick(rhs.row(0), p, k)));
            }
            suite.add(time_family ? "c4-homogeneity-time-scale" : "c4-homogeneity-freq-scale",
                      worst, 1e-3);
        }
        suite.report.criterion_seconds.emplace_back("criterion-4", t4.seconds());
    }

    // ---- projector identity and characteristic-function bridges ----
    {
        const Axis xg = make_axis(-6.0, 0.05, 241);
        double worst = 0.0;
        for (const auto& [name, f] : signals) {
            const double th = kPi / 3.0;
            RayParams ray{std::cos(th), std::sin(th)};
            auto row = symplectic_tomogram(f, ray, xg);
            for (double X : {-2.0, -0.7, 0.0, 1.1, 2.5}) {
                auto psi = symplectic_eigenfunction(ray, X, f.axis);
                const double via_proj = std::norm(inner_product(psi, f));
                const double via_row =
                    row.values[static_cast<std::size_t>(xg.nearest_index(X))];
                worst = std::max(worst, std::abs(via_proj - via_row));
            }
        }
        suite.add("inv-projector-identity", worst, 1e-8);

        const Axis xb = make_axis(-12.0, 0.1, 241);
        double bridge = 0.0, convergence = 0.0;
        for (const SampledSignal* f : {&gauss, &chirp}) {
            const double th = kPi / 4.0;
            RayParams ray{std::cos(th), std::sin(th)};
            auto q = [&](double k) { return ambiguity_value(*f, k * ray.mu, k * ray.nu); };
            auto via_char = tomogram_from_characteristic(q, xb);
            auto direct = symplectic_tomogram(*f, ray, xb);
            bridge = std::max(bridge, rms_diff(via_char.row(0), direct.row(0)));
            auto via_char_fine = tomogram_from_characteristic(q, xb, 16.0, 1e-8, kPi / (8.0 * 12.0) / 2.0);
            for (std::size_t k = 0; k < via_char.nx(); ++k)
                convergence =
                    std::max(convergence, std::abs(via_char.values[k] - via_char_fine.values[k]));
        }
        suite.add("inv-characteristic-bridge", bridge, 1e-3);
        suite.add("inv-characteristic-convergence", convergence, 1e-4);

        const double th = kPi / 4.0;
        auto row = symplectic_tomogram(gauss, {std::cos(th), std::sin(th)},
                                       make_axis(-12.0, 0.025, 961));
        const cd direct = quasidist_from_tomogram(row);
        suite.add("inv-rescaled-tomogram-definitional", std::abs(quasidist_from_rescaled_tomogram(row, 1.0) - direct),
                  1e-10);
        double pcons = 0.0;
        const cd q_half = quasidist_from_rescaled_tomogram(row, 0.5);
        const cd q_two = quasidist_from_rescaled_tomogram(row, 2.0);
        pcons = std::max(std::abs(q_half - direct), std::abs(q_two - direct));
        suite.add("inv-rescaled-tomogram-p-consistency", pcons, 1e-4);
    }

    // ---- criterion 5: inversions ----
    {
        Timer t5a;
        const Axis t_axis = parse_axis_spec(config.get_or("invert.t", "-8:0.125:129"));
        const Axis mu_axis = parse_axis_spec(config.get_or("invert.mu", "-8.9375:0.125:144"));
        const Axis x_axis = parse_axis_spec(config.get_or("invert.x", "-40:0.125:641"));
        {
            auto data = symplectic_inversion_data(gauss, t_axis, mu_axis, x_axis);
            auto rec = invert_symplectic(data);
            suite.add("c5-invert-symplectic-gaussian",
                      rel_l2_on_grid(sample_onto(gauss, t_axis), rec), 2e-2);
        }
        {
            auto data = symplectic_inversion_data(chirp, t_axis, mu_axis, x_axis);
            auto rec = invert_symplectic(data);
            suite.add("c5-invert-symplectic-chirp",
                      rel_l2_on_grid(sample_onto(chirp, t_axis), rec), 5e-2);
        }
        suite.report.criterion_seconds.emplace_back("criterion-5-symplectic", t5a.seconds());

        Timer t5b;
        const Axis ts_mu = parse_axis_spec(config.get_or("invert.ts_mu", "-12:0.1:241"));
        const Axis ts_out = parse_axis_spec(config.get_or("invert.ts_t", "-6:0.0625:193"));
        for (const auto* f : {&gauss, &chirp}) {
            auto data = time_scale_inversion_data(*f, ts_mu, s_axis);
            auto rec = invert_time_scale(data, ts_out);
            suite.add(f == &gauss ? "c5-invert-time-scale-gaussian"
                                  : "c5-invert-time-scale-chirp",
                      rel_l2_on_grid(sample_onto(*f, ts_out), rec), 5e-2);
        }
        suite.report.criterion_seconds.emplace_back("criterion-5-time-scale", t5b.seconds());

        Timer t5c;
        const Axis tau = make_axis(-64.0, 0.125, 1025);
        const Axis out = make_axis(-8.0, 0.0625, 257);
        auto field = cwt(gauss, mexhat, ScaleGrid{1.0 / 16.0, 16.0, 64}, tau);
        auto rec = icwt(field, mexhat, out);
        suite.add("c5-invert-cwt-gaussian", rel_l2_on_grid(sample_onto(gauss, out), rec), 2e-2);
        suite.report.criterion_seconds.emplace_back("criterion-5-cwt", t5c.seconds());
    }

    // ---- criterion 6: polarization identity ----
    {
        Timer t6;
        const Axis xs = make_axis(-12.0, 0.025, 961);
        const SampledSignal& gabor = signals[1].second;
        const SampledSignal& twotone = signals[4].second;
        struct Triple {
            const SampledSignal *h, *f;
            TomogramFamily family;
            double mu, nu;
        };
        const std::vector<Triple> triples{
            {&gauss, &chirp, TomogramFamily::symplectic, 0.6, 0.8},
            {&gauss, &chirp, TomogramFamily::symplectic, 1.0, 0.3},
            {&gauss, &twotone, TomogramFamily::symplectic, 0.5, -0.5},
            {&mexhat, &gauss, TomogramFamily::symplectic, 0.0, 1.0},
            {&gabor, &gauss, TomogramFamily::symplectic, 0.3, 0.7},
            {&gauss, &chirp, TomogramFamily::time_scale, 0.7, 1.0},
            {&mexhat, &gauss, TomogramFamily::time_scale, 0.3, 0.8},
            {&gauss, &twotone, TomogramFamily::time_scale, -0.4, 1.2},
            {&gauss, &chirp, TomogramFamily::freq_scale, 0.5, 1.0},
            {&gabor, &gauss, TomogramFamily::freq_scale, 0.7, 1.0},
        };
        double worst = 0.0;
        for (const auto& tr : triples) {
            const Axis& ax = tr.family == TomogramFamily::symplectic ? xs : s_axis;
            const cd lhs = wavelet_from_tomograms(*tr.h, *tr.f, tr.family, tr.mu, tr.nu, ax);
            const cd rhs = generator_matrix_element(*tr.h, *tr.f, tr.family, tr.mu, tr.nu);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        suite.add("c6-polarization-oracle", worst, 1e-3);

        double diag = 0.0;
        for (const auto* f : {&gauss, &chirp}) {
            diag = std::max(diag, std::abs(wavelet_from_tomograms(*f, *f,
                                                                  TomogramFamily::symplectic,
                                                                  0.6, 0.8, xs) -
                                           ambiguity_value(*f, 0.6, 0.8)));
            diag = std::max(diag, std::abs(wavelet_from_tomograms(*f, *f,
                                                                  TomogramFamily::time_scale,
                                                                  0.7, 1.0, s_axis) -
                                           generator_matrix_element(
                                               *f, *f, TomogramFamily::time_scale, 0.7, 1.0)));
        }
        suite.add("c6-diagonal-quasidist", diag, 1e-4);
        suite.report.criterion_seconds.emplace_back("criterion-6", t6.seconds());
    }

    // ---- criterion 7: energy identity ----
    {
        Timer t7;
        const double c_inf = reconstruction_constant(mexhat);
        auto energy_residual = [&](std::size_t n_scales, std::int64_t n_tau) {
            const Axis tau = make_axis(-64.0, 128.0 / static_cast<double>(n_tau - 1), n_tau);
            auto field = cwt(mexhat, mexhat, ScaleGrid{1.0 / 16.0, 16.0, n_scales}, tau);
            return std::abs(wavelet_energy(field) / (c_inf * squared_norm(mexhat)) - 1.0);
        };
        const double base = energy_residual(9, 513);
        const double fine = energy_residual(17, 1025);
        suite.add("c7-energy-identity", base, 3e-2);
        suite.add("c7-energy-refinement", fine / std::max(base, 1e-300), 0.5);
        suite.report.criterion_seconds.emplace_back("criterion-7", t7.seconds());
    }

    // ---- criterion 8: photon-number tomography ----
    {
        Timer t8;
        double worst = 0.0, sum_worst = 0.0;
        for (double b : {0.5, 1.0, 2.0}) {
            auto w = photon_number_tomogram(gauss, cd{b, 0.0}, 40);
            double logfact = 0.0;
            double sum = 0.0;
            for (int n = 0; n <= 40; ++n) {
                if (n > 0) logfact += std::log(static_cast<double>(n));
                const double pois =
                    std::exp(-b * b + 2.0 * n * std::log(b) - logfact);
                if (n <= 20)
                    worst = std::max(worst,
                                     std::abs(w.probs[static_cast<std::size_t>(n)] - pois));
                sum += w.probs[static_cast<std::size_t>(n)];
            }
            sum_worst = std::max(sum_worst, std::abs(sum - 1.0));
        }
        suite.add("c8-photon-poisson", worst, 1e-6);
        suite.add("c8-photon-sum", sum_worst, 1e-8);

        auto w1 = photon_number_tomogram(gauss, cd{1.0, 0.0}, 10);
        SampledSignal rotated = gauss;
        for (auto& v : rotated.values) v *= polar_ld(1.1L);
        auto w2 = photon_number_tomogram(rotated, cd{1.0, 0.0}, 10);
        double phase_res = 0.0, neg = 0.0;
        for (std::size_t n = 0; n < w1.probs.size(); ++n) {
            phase_res = std::max(phase_res, std::abs(w1.probs[n] - w2.probs[n]));
            neg = std::max(neg, -w1.probs[n]);
        }
        suite.add("inv-photon-phase-invariance", phase_res, 1e-12);
        suite.add("inv-photon-nonnegative", neg, 1e-12);
        suite.report.criterion_seconds.emplace_back("criterion-8", t8.seconds());
    }

    // ---- wavelet identities ----
    {
        double alt = 0.0;
        for (auto [s, t] : {std::pair{0.5, 1.0}, {1.0, 0.4}, {2.0, -0.7}, {4.0, 0.2}})
            alt = std::max(alt, std::abs(cwt_alt_form(chirp, mexhat, s, t) -
                                         cwt_value(chirp, mexhat, s, std::sqrt(s) * t)));
        suite.add("inv-cwt-alt-form", alt, 1e-6);

        // shift by an exact number of grid steps
        const double a = 0.5;
        SampledSignal shifted = gauss;
        const auto steps = static_cast<std::int64_t>(std::llround(a / grid.step));
        for (std::size_t j = 0; j < shifted.values.size(); ++j) {
            const auto src = static_cast<std::int64_t>(j) - steps;
            shifted.values[j] = (src >= 0 && src < grid.count)
                                    ? gauss.values[static_cast<std::size_t>(src)]
                                    : cd{0.0, 0.0};
        }
        double cov = 0.0;
        for (auto [s, t] : {std::pair{0.5, 0.3}, {2.0, -1.0}})
            cov = std::max(cov, std::abs(cwt_value(shifted, mexhat, s, t) -
                                         cwt_value(gauss, mexhat, s, t - a)));
        suite.add("inv-wavelet-covariance", cov, 1e-6);
    }

    // ---- affine parameter map ----
    {
        double worst = 0.0;
        for (double s : {0.5, 1.0, 2.0, std::exp(1.0)}) {
            const double tau = 1.7;
            auto [mu, nu] = affine_param_map(s, tau);
            auto [s2, tau2] = affine_param_map_inverse(mu, nu);
            worst = std::max({worst, std::abs(s2 - s), std::abs(tau2 - tau)});
        }
        suite.add("inv-affine-param-roundtrip", worst, 1e-12);
    }

    std::sort(suite.report.checks.begin(), suite.report.checks.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    suite.report.wall_seconds = total.seconds();
    return suite.report;
}

std::string serialize_report(const VerificationReport& report, bool include_timing) {
    nlohmann::ordered_json j;
    j["grid"] = report.grid_summary;
    j["signals"] = report.signal_summary;
    auto checks = nlohmann::ordered_json::array();
    std::size_t failed = 0;
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"residual", format_double(c.residual)},
                          {"tolerance", format_double(c.tolerance)},
                          {"passed", c.passed}});
        if (!c.passed) ++failed;
    }
    j["checks"] = checks;
    j["summary"] = {{"total", report.checks.size()},
                    {"failed", failed},
                    {"all_passed", failed == 0}};
    if (include_timing) {
        nlohmann::ordered_json t;
        for (const auto& [name, sec] : report.criterion_seconds) t[name] = sec;
        t["total"] = report.wall_seconds;
        j["timing"] = t;
    }
    return j.dump(2) + "\n";
}

}  // namespace tomox

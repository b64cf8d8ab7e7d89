#include "tomox/relations.hpp"

#include <cmath>
#include <numbers>

#include "tomox/fft.hpp"
#include "tomox/interp.hpp"
#include "tomox/symplectic.hpp"

namespace tomox {

namespace {

constexpr double kPi = std::numbers::pi;

SampledSignal combine(const SampledSignal& h, const SampledSignal& f, cd coeff) {
    SampledSignal out = h;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += coeff * f.values[i];
    return out;
}

// Raw (unnormalized) tomogram row of one family at ray (mu, nu).
std::vector<double> raw_tomogram_row(const SampledSignal& g, TomogramFamily family, double mu,
                                     double nu, const Axis& x_axis) {
    switch (family) {
        case TomogramFamily::symplectic: {
            auto field = symplectic_tomogram(g, RayParams{mu, nu}, x_axis);
            return {field.values.begin(), field.values.end()};
        }
        case TomogramFamily::time_scale: {
            auto field = time_scale_tomogram(g, AffineParams{mu, nu, x_axis});
            return {field.values.begin(), field.values.end()};
        }
        case TomogramFamily::freq_scale: {
            auto field = freq_scale_tomogram(g, AffineParams{mu, nu, x_axis});
            return {field.values.begin(), field.values.end()};
        }
        default:
            throw invalid_argument_error("unsupported tomogram family for this relation");
    }
}

double scaled_dilation_factor(double nu) {
    // (e^nu - 1)/nu with the removable singularity filled in
    if (std::abs(nu) < 1e-8) return 1.0 + nu / 2.0 + nu * nu / 6.0;
    return std::expm1(nu) / nu;
}

}  // namespace

PolarizationQuad make_polarization_quad(const SampledSignal& h, const SampledSignal& f) {
    if (!same_axis(h.axis, f.axis) || h.domain != f.domain)
        throw incompatible_grids_error("polarization quad needs one shared axis");
    PolarizationQuad q;
    q.f1 = combine(h, f, cd{1.0, 0.0});
    q.f2 = combine(h, f, cd{0.0, 1.0});
    q.f3 = combine(h, f, cd{-1.0, 0.0});
    q.f4 = combine(h, f, cd{0.0, -1.0});
    return q;
}

cd wavelet_from_tomograms(const SampledSignal& h, const SampledSignal& f, TomogramFamily family,
                          double mu, double nu, const Axis& x_axis,
                          std::vector<std::string>* warnings) {
    const auto quad = make_polarization_quad(h, f);
    const auto m1 = raw_tomogram_row(quad.f1, family, mu, nu, x_axis);
    const auto m2 = raw_tomogram_row(quad.f2, family, mu, nu, x_axis);
    const auto m3 = raw_tomogram_row(quad.f3, family, mu, nu, x_axis);
    const auto m4 = raw_tomogram_row(quad.f4, family, mu, nu, x_axis);
    const auto wx = trapezoid_weights(x_axis);
    cd acc{0.0, 0.0};
    double mass = 0.0;
    for (std::size_t k = 0; k < wx.size(); ++k) {
        const cd combo{m1[k] - m3[k], -m2[k] + m4[k]};  // M1 - i M2 - M3 + i M4
        mass += wx[k] * (m1[k] + m2[k] + m3[k] + m4[k]);
        acc += wx[k] * combo *
               polar_ld(static_cast<long double>(x_axis.at(static_cast<std::int64_t>(k))));
    }
    if (warnings) {
        // raw rows integrate to ||g||^2 when the X window captures them
        const double expected = squared_norm(quad.f1) + squared_norm(quad.f2) +
                                squared_norm(quad.f3) + squared_norm(quad.f4);
        if (expected > 0.0 && mass < 0.999 * expected)
            warnings->push_back("truncation-warning: X axis misses combination-tomogram mass");
    }
    return acc / 4.0;
}

cd generator_matrix_element(const SampledSignal& h, const SampledSignal& f, TomogramFamily family,
                            double mu, double nu) {
    if (!same_axis(h.axis, f.axis))
        throw incompatible_grids_error("generator_matrix_element needs one shared axis");
    const auto n = static_cast<std::size_t>(f.axis.count);
    const auto w = trapezoid_weights(f.axis);

    switch (family) {
        case TomogramFamily::symplectic: {
            // e^{i mu nu/2} integral h*(t) e^{i mu t} f(t + nu) dt
            auto shifted = resample_uniform(f, f.axis.start + nu, f.axis.step, n);
            cd acc{0.0, 0.0};
            for (std::size_t j = 0; j < n; ++j) {
                const double t = f.axis.at(static_cast<std::int64_t>(j));
                acc += w[j] * std::conj(h.values[j]) * shifted[j] *
                       polar_ld(static_cast<long double>(mu) * t);
            }
            return acc * polar_ld(static_cast<long double>(mu) * nu / 2.0L);
        }
        case TomogramFamily::time_scale: {
            // integral h*(t) e^{i mu c t} e^{nu/2} f(e^nu t) dt, c = (e^nu-1)/nu
            const double c = scaled_dilation_factor(nu);
            const double en = std::exp(nu);
            auto scaled = resample_uniform(f, en * f.axis.start, en * f.axis.step, n);
            cd acc{0.0, 0.0};
            for (std::size_t j = 0; j < n; ++j) {
                const double t = f.axis.at(static_cast<std::int64_t>(j));
                acc += w[j] * std::conj(h.values[j]) * scaled[j] *
                       polar_ld(static_cast<long double>(mu * c) * t);
            }
            return acc * std::exp(nu / 2.0);
        }
        case TomogramFamily::freq_scale: {
            // (1/2pi) integral H*(w) e^{i mu c w} e^{-nu/2} F(e^{-nu} w) dw,
            // c = (1 - e^{-nu})/nu
            const double c2 = std::abs(nu) < 1e-8 ? 1.0 - nu / 2.0 + nu * nu / 6.0
                                                  : -std::expm1(-nu) / nu;
            const double step = 32.0 / 2048.0;
            const Axis om = make_axis(-16.0 + step / 2.0, step, 2048);
            auto hhat = fourier_integral(h.values, h.axis, -1, om);
            const double en = std::exp(-nu);
            const Axis om_scaled = make_axis(en * om.start, en * om.step, om.count);
            auto fhat = fourier_integral(f.values, f.axis, -1, om_scaled);
            const auto wom = trapezoid_weights(om);
            cd acc{0.0, 0.0};
            for (std::size_t m = 0; m < static_cast<std::size_t>(om.count); ++m) {
                const double wv = om.at(static_cast<std::int64_t>(m));
                acc += wom[m] * std::conj(hhat[m]) * fhat[m] *
                       polar_ld(static_cast<long double>(mu * c2) * wv);
            }
            return acc * std::exp(-nu / 2.0) / (2.0 * kPi);
        }
        default:
            throw invalid_argument_error("unsupported family for generator_matrix_element");
    }
}

TomogramField tomogram_from_characteristic(const std::function<cd(double)>& q_eval,
                                           const Axis& x_axis, double k_max,
                                           double decay_floor, double k_step) {
    TomogramField out;
    out.x_axis = x_axis;
    out.family = TomogramFamily::symplectic;
    out.rays = {RayParams{1.0, 0.0}};  // the actual ray is owned by the evaluator
    out.values.assign(out.nx(), 0.0);

    const double x_abs = std::max(std::abs(x_axis.start), std::abs(x_axis.back()));
    const double dk = k_step > 0.0 ? k_step : kPi / (8.0 * std::max(x_abs, 1.0));
    const double q0 = std::abs(q_eval(0.0));
    const double floor = decay_floor * std::max(q0, 1e-300);

    // extend symmetrically until |Q| stays below the floor
    std::size_t half = 1;
    {
        int quiet = 0;
        while (half * dk < k_max && quiet < 3) {
            const double k = static_cast<double>(half) * dk;
            if (std::max(std::abs(q_eval(k)), std::abs(q_eval(-k))) < floor)
                ++quiet;
            else
                quiet = 0;
            ++half;
        }
        if (half * dk >= k_max)
            out.warnings.push_back(
                "truncation-warning: quasidistribution did not decay inside the k range");
    }

    std::vector<cd> q(2 * half + 1);
    for (std::size_t i = 0; i < q.size(); ++i)
        q[i] = q_eval((static_cast<double>(i) - static_cast<double>(half)) * dk);
    std::vector<double> wk(q.size(), dk);
    wk.front() *= 0.5;
    wk.back() *= 0.5;
    for (std::size_t j = 0; j < out.nx(); ++j) {
        const double X = x_axis.at(static_cast<std::int64_t>(j));
        cd acc{0.0, 0.0};
        for (std::size_t i = 0; i < q.size(); ++i) {
            const double k = (static_cast<double>(i) - static_cast<double>(half)) * dk;
            acc += wk[i] * q[i] * polar_ld(-static_cast<long double>(k) * X);
        }
        out.values[j] = std::max(acc.real() / (2.0 * kPi), 0.0);
    }
    return out;
}

cd quasidist_from_rescaled_tomogram(const TomogramField& field, double p, std::size_t row) {
    if (p == 0.0) throw invalid_argument_error("rescaled-tomogram evaluation needs p != 0");
    auto r = field.row(row);
    std::vector<double> vals(r.begin(), r.end());
    const auto wx = trapezoid_weights(field.x_axis);
    cd acc{0.0, 0.0};
    for (std::size_t k = 0; k < wx.size(); ++k) {
        const double X = field.x_axis.at(static_cast<std::int64_t>(k));
        const double mpx =
            std::abs(p) * catmull_rom(vals, field.x_axis.start, field.x_axis.step, p * X);
        acc += wx[k] * mpx * polar_ld(static_cast<long double>(p) * X);
    }
    return acc;
}

PhotonTomogram photon_number_tomogram(const SampledSignal& f, cd beta, int n_max) {
    if (n_max < 0) throw invalid_argument_error("photon_number_tomogram needs n_max >= 0");
    if (f.domain != Domain::time)
        throw domain_tag_error("photon_number_tomogram expects a time-domain signal");
    const auto n = static_cast<std::size_t>(f.axis.count);
    const double shift = std::numbers::sqrt2 * beta.real();
    auto shifted = resample_uniform(f, f.axis.start + shift, f.axis.step, n);

    const auto w = trapezoid_weights(f.axis);
    std::vector<cd> base(n);
    std::vector<double> t(n);
    for (std::size_t j = 0; j < n; ++j) {
        t[j] = f.axis.at(static_cast<std::int64_t>(j));
        base[j] = w[j] * std::exp(-t[j] * t[j] / 2.0) * shifted[j] *
                  polar_ld(static_cast<long double>(std::numbers::sqrt2 * beta.imag()) * t[j]);
    }

    PhotonTomogram out;
    out.beta = beta;
    out.probs.resize(static_cast<std::size_t>(n_max) + 1);
    // Hermite functions with the 1/sqrt(2^n n!) normalization fused into the
    // recurrence, so nothing overflows for large n.
    std::vector<double> hm(n, 1.0), hc(n), hn(n);
    for (std::size_t j = 0; j < n; ++j) hc[j] = std::numbers::sqrt2 * t[j];
    const double inv_sqrt_pi = 1.0 / std::sqrt(kPi);
    for (int k = 0; k <= n_max; ++k) {
        const std::vector<double>& hk = (k == 0) ? hm : hc;
        cd acc{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) acc += base[j] * hk[j];
        out.probs[static_cast<std::size_t>(k)] = std::norm(acc) * inv_sqrt_pi;
        if (k >= 1) {
            const double a = std::sqrt(2.0 / (k + 1.0));
            const double b = std::sqrt(static_cast<double>(k) / (k + 1.0));
            for (std::size_t j = 0; j < n; ++j) hn[j] = t[j] * a * hc[j] - b * hm[j];
            hm.swap(hc);
            hc.swap(hn);
        }
    }
    return out;
}

}  // namespace tomox

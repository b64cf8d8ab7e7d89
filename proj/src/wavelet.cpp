#include "tomox/wavelet.hpp"

#include <cmath>
#include <numbers>

#include "tomox/fft.hpp"
#include "tomox/interp.hpp"

namespace tomox {

namespace {

constexpr double kPi = std::numbers::pi;

// Spectral work grid: even count offset by half a step so omega = 0 is never
// sampled (the coverage normalization divides by C(omega), which vanishes
// there for admissible wavelets).
Axis spectral_axis(double w_max = 16.0, std::size_t count = 2048) {
    const double step = 2.0 * w_max / static_cast<double>(count);
    return make_axis(-w_max + step / 2.0, step, static_cast<std::int64_t>(count));
}

// Dense spectrum of the mother wavelet for cubic lookup of H(s w).
struct MotherSpectrum {
    Axis axis;
    std::vector<double> re, im;
    double h0_mag = 0.0;   // |H(0)|
    double peak = 0.0;     // max |H|

    explicit MotherSpectrum(const SampledSignal& h, double w_max = 24.0, std::size_t n = 8192) {
        axis = make_axis(-w_max, 2.0 * w_max / static_cast<double>(n - 1),
                         static_cast<std::int64_t>(n));
        auto vals = fourier_integral(h.values, h.axis, -1, axis);
        re.resize(n);
        im.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            re[i] = vals[i].real();
            im[i] = vals[i].imag();
            peak = std::max(peak, std::abs(vals[i]));
        }
        const auto w = trapezoid_weights(h.axis);
        cd h0{0.0, 0.0};
        for (std::size_t j = 0; j < w.size(); ++j) h0 += w[j] * h.values[j];
        h0_mag = std::abs(h0);
    }

    cd at(double w) const {
        return {catmull_rom(re, axis.start, axis.step, w),
                catmull_rom(im, axis.start, axis.step, w)};
    }
};

std::vector<double> scale_list(const WaveletField& field) {
    std::vector<double> s(field.n_scales());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = field.scale(i);
    return s;
}

}  // namespace

WaveletField cwt(const SampledSignal& f, const SampledSignal& h, const ScaleGrid& scales,
                 const Axis& tau_axis) {
    if (!(scales.s_min > 0.0) || !(scales.s_max > scales.s_min) || scales.count < 2)
        throw invalid_argument_error("cwt needs 0 < s_min < s_max and >= 2 scales");
    WaveletField out;
    out.log_spaced = true;
    out.s_axis = make_axis(std::log(scales.s_min),
                           (std::log(scales.s_max) - std::log(scales.s_min)) /
                               static_cast<double>(scales.count - 1),
                           static_cast<std::int64_t>(scales.count));
    out.tau_axis = tau_axis;
    out.values.assign(scales.count * out.n_tau(), cd{0.0, 0.0});

    const Axis om = spectral_axis();
    const auto n_om = static_cast<std::size_t>(om.count);
    auto fhat = fourier_integral(f.values, f.axis, -1, om);
    MotherSpectrum mother(h);

    const auto wom = trapezoid_weights(om);
    std::vector<cd> integ(n_om);
    for (std::size_t i = 0; i < out.n_scales(); ++i) {
        const double s = out.scale(i);
        const double rs = std::sqrt(s);
        for (std::size_t m = 0; m < n_om; ++m)
            integ[m] = wom[m] * fhat[m] * std::conj(mother.at(s * om.at(static_cast<std::int64_t>(m)))) * rs;
        // W(s, tau_k) = (1/2pi) sum_m integ_m e^{i w_m tau_k}
        auto row = czt(integ, out.n_tau(), static_cast<long double>(om.step) * tau_axis.step,
                       static_cast<long double>(om.step) * tau_axis.start);
        auto dst = out.row(i);
        for (std::size_t k = 0; k < out.n_tau(); ++k) {
            const long double tk = tau_axis.start + tau_axis.step * static_cast<long double>(k);
            dst[k] = row[k] * polar_ld(static_cast<long double>(om.start) * tk) / (2.0 * kPi);
        }
    }
    return out;
}

double admissibility_constant(const SampledSignal& h, FourierConvention convention) {
    MotherSpectrum mother(h);
    if (mother.h0_mag > 1e-6 * mother.peak)
        throw non_admissible_wavelet_error("mean of h is not ~0; N_h diverges");
    const auto n = static_cast<std::size_t>(mother.axis.count);
    const auto w = trapezoid_weights(mother.axis);
    const double floor = std::exp(-8.0);
    double acc = 0.0;
    for (std::size_t m = 0; m < n; ++m) {
        const double om = mother.axis.at(static_cast<std::int64_t>(m));
        if (std::abs(om) < floor) continue;
        acc += w[m] * (mother.re[m] * mother.re[m] + mother.im[m] * mother.im[m]) / std::abs(om);
    }
    if (convention == FourierConvention::unitary) acc /= 2.0 * kPi;
    return acc;
}

double reconstruction_constant(const SampledSignal& h) {
    // two-sided scale integral of the resolution identity
    return admissibility_constant(h, FourierConvention::no_prefactor) / 2.0;
}

SampledSignal icwt(const WaveletField& field, const SampledSignal& h, const Axis& out_axis) {
    const Axis om = spectral_axis();
    const auto n_om = static_cast<std::size_t>(om.count);
    MotherSpectrum mother(h);

    const auto scales = scale_list(field);
    const auto wms = field.scale_measure_weights();
    const auto wtau = trapezoid_weights(field.tau_axis);

    std::vector<cd> num(n_om, cd{0.0, 0.0});
    std::vector<double> coverage(n_om, 0.0);
    std::vector<cd> wrow(field.n_tau());
    double w_max = 0.0, w_edge = 0.0;
    for (std::size_t i = 0; i < scales.size(); ++i) {
        const double s = scales[i];
        if (!(s > 0.0)) throw invalid_argument_error("icwt needs positive scales");
        auto row = field.row(i);
        for (std::size_t k = 0; k < row.size(); ++k) {
            wrow[k] = wtau[k] * row[k];
            w_max = std::max(w_max, std::abs(row[k]));
        }
        w_edge = std::max({w_edge, std::abs(row.front()), std::abs(row.back())});
        // What(s, w_m) = sum_k wtau_k W_k e^{-i w_m tau_k}
        auto what = czt(wrow, n_om, -static_cast<long double>(field.tau_axis.step) * om.step,
                        -static_cast<long double>(field.tau_axis.step) * om.start);
        const double rs = std::sqrt(s);
        for (std::size_t m = 0; m < n_om; ++m) {
            const double wv = om.at(static_cast<std::int64_t>(m));
            const cd hs = mother.at(s * wv);
            const cd wh =
                what[m] * polar_ld(-static_cast<long double>(wv) * field.tau_axis.start);
            num[m] += wms[i] * rs * hs * wh;
            coverage[m] += wms[i] * s * std::norm(hs);
        }
    }

    double cov_max = 0.0;
    for (double c : coverage) cov_max = std::max(cov_max, c);
    if (!(cov_max > 0.0)) throw invalid_argument_error("icwt: empty coverage");
    const double cov_floor = 1e-10 * cov_max;

    const auto wom = trapezoid_weights(om);
    std::vector<cd> spec(n_om);
    double mass = 0.0, weak_mass = 0.0;
    for (std::size_t m = 0; m < n_om; ++m) {
        spec[m] = num[m] / std::max(coverage[m], cov_floor);
        const double cell = wom[m] * std::norm(spec[m]);
        mass += cell;
        if (coverage[m] < 0.5 * cov_max) weak_mass += cell;
    }

    SampledSignal out;
    out.axis = out_axis;
    out.domain = Domain::time;
    out.values.resize(static_cast<std::size_t>(out_axis.count));
    for (std::size_t m = 0; m < n_om; ++m) spec[m] *= wom[m];
    auto rec = czt(spec, out.values.size(), static_cast<long double>(om.step) * out_axis.step,
                   static_cast<long double>(om.step) * out_axis.start);
    for (std::size_t k = 0; k < out.values.size(); ++k) {
        const long double tk = out_axis.start + out_axis.step * static_cast<long double>(k);
        out.values[k] = rec[k] * polar_ld(static_cast<long double>(om.start) * tk) / (2.0 * kPi);
    }

    if (mass > 0.0 && weak_mass > 0.05 * mass)
        out.warnings.push_back(
            "coverage-warning: > 5% of the reconstructed energy sits on weakly covered scales");
    if (w_edge > 1e-2 * std::max(w_max, 1e-300))
        out.warnings.push_back(
            "coverage-warning: |W| is not small at the tau edges; large-scale rows are truncated");
    return out;
}

cd cwt_value(const SampledSignal& f, const SampledSignal& h, double s, double tau) {
    if (!(s > 0.0)) throw invalid_argument_error("cwt_value needs s > 0");
    // (1/sqrt s) integral f(t) h*((t - tau)/s) dt on the signal grid
    const auto n = static_cast<std::size_t>(f.axis.count);
    auto hs = resample_uniform(h, (f.axis.start - tau) / s, f.axis.step / s, n);
    const auto w = trapezoid_weights(f.axis);
    cd acc{0.0, 0.0};
    for (std::size_t l = 0; l < n; ++l) acc += w[l] * f.values[l] * std::conj(hs[l]);
    return acc / std::sqrt(s);
}

cd cwt_alt_form(const SampledSignal& f, const SampledSignal& h, double s, double tau) {
    if (!(s > 0.0)) throw invalid_argument_error("cwt_alt_form needs s > 0");
    // u = sqrt(s)(t + tau/2):  (1/sqrt s) integral h*(u/s - tau/sqrt s) f(u) du
    const auto n = static_cast<std::size_t>(f.axis.count);
    const double rs = std::sqrt(s);
    auto hs = resample_uniform(h, f.axis.start / s - tau / rs, f.axis.step / s, n);
    const auto w = trapezoid_weights(f.axis);
    cd acc{0.0, 0.0};
    for (std::size_t l = 0; l < n; ++l) acc += w[l] * std::conj(hs[l]) * f.values[l];
    return acc / rs;
}

double wavelet_energy(const WaveletField& field) {
    const auto wms = field.scale_measure_weights();
    const auto wtau = trapezoid_weights(field.tau_axis);
    double acc = 0.0;
    for (std::size_t i = 0; i < field.n_scales(); ++i) {
        auto row = field.row(i);
        double e = 0.0;
        for (std::size_t k = 0; k < row.size(); ++k) e += wtau[k] * std::norm(row[k]);
        acc += wms[i] * e;
    }
    return acc;
}

}  // namespace tomox

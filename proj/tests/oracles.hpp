#pragma once

// Brute-force reference implementations used to pin expected values. These
// deliberately avoid the library's chirp-z/resampling fast paths: plain
// loops, long-double phase arithmetic, trapezoid sums.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "tomox/signal.hpp"

namespace oracle {

using tomox::Axis;
using tomox::cd;
using tomox::SampledSignal;

inline cd polar(long double phase) {
    const long double r = std::fmod(phase, 6.283185307179586476925286766559L);
    return {static_cast<double>(std::cos(r)), static_cast<double>(std::sin(r))};
}

// naive chirp-z sum
inline std::vector<cd> czt(const std::vector<cd>& x, std::size_t m, long double tw,
                           long double ta) {
    std::vector<cd> out(m, cd{0, 0});
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t j = 0; j < x.size(); ++j)
            out[k] += x[j] * polar(ta * static_cast<long double>(j) +
                                   tw * static_cast<long double>(j) * static_cast<long double>(k));
    return out;
}

// direct sinc interpolation (independent of the czt-based resampler)
inline cd sinc_eval(const SampledSignal& f, double t) {
    if (t < f.axis.start || t > f.axis.back()) return {0, 0};
    const double u = (t - f.axis.start) / f.axis.step;
    cd acc{0, 0};
    bool on_node = false;
    cd node_val{0, 0};
    for (std::size_t j = 0; j < f.values.size(); ++j) {
        const double d = u - static_cast<double>(j);
        if (std::abs(d) < 1e-12) {
            on_node = true;
            node_val = f.values[j];
            break;
        }
    }
    if (on_node) return node_val;
    for (std::size_t j = 0; j < f.values.size(); ++j) {
        const double d = u - static_cast<double>(j);
        acc += f.values[j] * std::sin(std::numbers::pi * d) / (std::numbers::pi * d);
    }
    return acc;
}

// trapezoid integral g(t_j) dt of an arbitrary integrand callback
template <typename Fn>
cd quad(const Axis& ax, Fn&& fn) {
    cd acc{0, 0};
    for (std::int64_t i = 0; i < ax.count; ++i) {
        const double w = (i == 0 || i == ax.count - 1) ? ax.step / 2.0 : ax.step;
        acc += w * fn(ax.at(i));
    }
    return acc;
}

// brute-force symplectic tomogram value at one X
inline double symplectic_point(const SampledSignal& f, double mu, double nu, double X) {
    cd acc{0, 0};
    for (std::size_t j = 0; j < f.values.size(); ++j) {
        const double w =
            (j == 0 || j + 1 == f.values.size()) ? f.axis.step / 2.0 : f.axis.step;
        const double t = f.axis.at(static_cast<std::int64_t>(j));
        acc += w * f.values[j] *
               polar(static_cast<long double>(mu) * t * t / (2.0L * nu) -
                     static_cast<long double>(t) * X / nu);
    }
    return std::norm(acc) / (2.0 * std::numbers::pi * std::abs(nu));
}

// brute-force ambiguity function via direct sinc evaluation
inline cd ambiguity_point(const SampledSignal& f, double mu, double nu) {
    cd acc{0, 0};
    for (std::size_t j = 0; j < f.values.size(); ++j) {
        const double w =
            (j == 0 || j + 1 == f.values.size()) ? f.axis.step / 2.0 : f.axis.step;
        const double t = f.axis.at(static_cast<std::int64_t>(j));
        acc += w * std::conj(sinc_eval(f, t - nu / 2.0)) * sinc_eval(f, t + nu / 2.0) *
               polar(static_cast<long double>(mu) * t);
    }
    return acc;
}

// brute-force <h| e^{i(mu t + nu w)} |f> = e^{i mu nu/2} int h*(t) e^{i mu t} f(t+nu) dt
inline cd symplectic_matrix_element(const SampledSignal& h, const SampledSignal& f, double mu,
                                    double nu) {
    cd acc{0, 0};
    for (std::size_t j = 0; j < h.values.size(); ++j) {
        const double w =
            (j == 0 || j + 1 == h.values.size()) ? h.axis.step / 2.0 : h.axis.step;
        const double t = h.axis.at(static_cast<std::int64_t>(j));
        acc += w * std::conj(h.values[j]) * sinc_eval(f, t + nu) *
               polar(static_cast<long double>(mu) * t);
    }
    return acc * polar(static_cast<long double>(mu) * nu / 2.0L);
}

// brute-force Mellin branch sum for the time-scale kernel; the signal is
// supplied as a callable so the log grid can reach far below any sampling
// floor (x down to -30 tames the t^{-1/2} endpoint).
template <typename Fn>
double time_scale_point(Fn&& f_at, double mu, double nu, double s, double x_min = -30.0,
                        double x_max = 2.2, std::size_t n = 24000) {
    double total = 0.0;
    const double dx = (x_max - x_min) / static_cast<double>(n - 1);
    for (int sign : {+1, -1}) {
        cd acc{0, 0};
        for (std::size_t l = 0; l < n; ++l) {
            const double x = x_min + dx * static_cast<double>(l);
            const double w = (l == 0 || l + 1 == n) ? dx / 2.0 : dx;
            const double t = std::exp(x);
            acc += w * f_at(sign * t) * std::exp(x / 2.0) *
                   polar(static_cast<long double>(sign) * mu * t / nu -
                         static_cast<long double>(s) * x / nu);
        }
        total += std::norm(acc) / (2.0 * std::numbers::pi * std::abs(nu));
    }
    return total;
}

// same for the frequency-scale kernel; spectrum_at must be the unitary
// spectrum F f / sqrt(2 pi)
template <typename Fn>
double freq_scale_point(Fn&& spectrum_at, double mu, double nu, double s, double x_min = -30.0,
                        double x_max = 3.0, std::size_t n = 24000) {
    double total = 0.0;
    const double dx = (x_max - x_min) / static_cast<double>(n - 1);
    for (int sign : {+1, -1}) {
        cd acc{0, 0};
        for (std::size_t l = 0; l < n; ++l) {
            const double x = x_min + dx * static_cast<double>(l);
            const double w = (l == 0 || l + 1 == n) ? dx / 2.0 : dx;
            const double om = std::exp(x);
            acc += w * spectrum_at(sign * om) * std::exp(x / 2.0) *
                   polar(-static_cast<long double>(sign) * mu * om / nu +
                         static_cast<long double>(s) * x / nu);
        }
        total += std::norm(acc) / (2.0 * std::numbers::pi * std::abs(nu));
    }
    return total;
}

// simple deterministic generator for property tests
struct Rng {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    double uniform(double lo, double hi) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        const double u = static_cast<double>((state >> 11) & ((1ull << 53) - 1)) /
                         static_cast<double>(1ull << 53);
        return lo + (hi - lo) * u;
    }
};

}  // namespace oracle

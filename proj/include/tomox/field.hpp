#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tomox/axis.hpp"
#include "tomox/signal.hpp"

namespace tomox {

// One sampling ray mu*t + nu*w = X (or its affine analogue).
struct RayParams {
    double mu = 1.0;
    double nu = 0.0;
};

enum class TomogramFamily { symplectic, time_scale, freq_scale, photon_number };

// Real nonnegative tomogram values M(X; ray), one row per ray.
struct TomogramField {
    Axis x_axis;
    std::vector<RayParams> rays;
    std::vector<double> values;  // rays.size() x x_axis.count, row-major
    TomogramFamily family = TomogramFamily::symplectic;
    std::vector<std::string> warnings;

    std::size_t nx() const { return static_cast<std::size_t>(x_axis.count); }
    std::span<double> row(std::size_t r) { return {values.data() + r * nx(), nx()}; }
    std::span<const double> row(std::size_t r) const { return {values.data() + r * nx(), nx()}; }
};

enum class PhasePlaneKind { wigner_ville, ambiguity, affine, husimi };

// Quasidistribution on a 2-D grid; axis1 indexes rows.
struct PhasePlaneField {
    Axis axis1;
    Axis axis2;
    std::vector<cd> values;  // axis1.count x axis2.count, row-major
    PhasePlaneKind kind = PhasePlaneKind::wigner_ville;
    std::vector<std::string> warnings;

    std::size_t n1() const { return static_cast<std::size_t>(axis1.count); }
    std::size_t n2() const { return static_cast<std::size_t>(axis2.count); }
    cd& at(std::size_t i, std::size_t j) { return values[i * n2() + j]; }
    const cd& at(std::size_t i, std::size_t j) const { return values[i * n2() + j]; }
};

// Continuous wavelet transform W(s, tau). The scale grid is uniform either in
// s itself or in ln s; s_axis stores the parameter grid and log_spaced says
// which reading applies.
struct WaveletField {
    Axis s_axis;  // grid in s (linear) or in ln s (log_spaced)
    bool log_spaced = true;
    Axis tau_axis;
    std::vector<cd> values;  // scales x tau, row-major
    SignalKind mother = SignalKind::mexican_hat();
    std::vector<std::string> warnings;

    std::size_t n_scales() const { return static_cast<std::size_t>(s_axis.count); }
    std::size_t n_tau() const { return static_cast<std::size_t>(tau_axis.count); }
    double scale(std::size_t i) const {
        double p = s_axis.at(static_cast<std::int64_t>(i));
        return log_spaced ? std::exp(p) : p;
    }
    // Quadrature weights for integrals against ds/s^2.
    std::vector<double> scale_measure_weights() const {
        auto w = trapezoid_weights(s_axis);
        for (std::size_t i = 0; i < w.size(); ++i) {
            double s = scale(i);
            w[i] *= log_spaced ? 1.0 / s : 1.0 / (s * s);  // d(ln s)/s = ds/s^2
        }
        return w;
    }
    std::span<cd> row(std::size_t r) { return {values.data() + r * n_tau(), n_tau()}; }
    std::span<const cd> row(std::size_t r) const { return {values.data() + r * n_tau(), n_tau()}; }
};

// Discrete photon-number tomogram w(n, beta), n = 0..n_max.
struct PhotonTomogram {
    cd beta;
    std::vector<double> probs;
};

// The four combination signals of the polarization identity.
struct PolarizationQuad {
    SampledSignal f1;  // h + f
    SampledSignal f2;  // h + i f
    SampledSignal f3;  // h - f
    SampledSignal f4;  // h - i f
};

}  // namespace tomox

#pragma once

#include "tomox/field.hpp"

namespace tomox {

enum class FourierConvention {
    no_prefactor,  // H(w) = integral h(t) e^{-iwt} dt
    unitary        // H divided by sqrt(2 pi)
};

// Scale grid descriptor: count scales uniform in ln s over [s_min, s_max].
struct ScaleGrid {
    double s_min = 1.0 / 16.0;
    double s_max = 16.0;
    std::size_t count = 64;
};

// W(s, tau) = (1/sqrt(s)) integral f(t) h*((t - tau)/s) dt for every grid
// point, evaluated per scale in the frequency domain. h should be normalized.
WaveletField cwt(const SampledSignal& f, const SampledSignal& h, const ScaleGrid& scales,
                 const Axis& tau_axis);

// N_h = integral |H(w)|^2/|w| dw under the requested convention
// (no_prefactor: 2 pi for the raw Mexican hat; unitary: 1). Throws
// non-admissible-wavelet when |H(0)| > 1e-6 * max|H|.
double admissibility_constant(const SampledSignal& h, FourierConvention convention);

// Inverse transform: f(t) = integral W(s,tau) (1/sqrt s) h((t-tau)/s)
// dtau ds/s^2, normalized per frequency by the scale-grid coverage
// C(w) = sum_i w_i |H(s_i w)|^2 of the resolution identity (the constant
// N_h/2 wherever coverage is complete). Appends a coverage warning when the
// reconstructed spectrum leans on badly covered frequencies.
SampledSignal icwt(const WaveletField& w_field, const SampledSignal& h, const Axis& out_axis);

// Direct-quadrature W(s, tau) at one point, the reference the fast path is
// tested against.
cd cwt_value(const SampledSignal& f, const SampledSignal& h, double s, double tau);

// integral h*((t - tau/2)/sqrt s) f(sqrt s (t + tau/2)) dt; equals the cwt
// value at (s, sqrt(s) tau).
cd cwt_alt_form(const SampledSignal& f, const SampledSignal& h, double s, double tau);

// integral |W|^2 dtau ds/s^2 over the field grid.
double wavelet_energy(const WaveletField& w_field);

// The effective reconstruction constant of the resolution identity for this
// mother wavelet: N_h/2 under the no_prefactor convention.
double reconstruction_constant(const SampledSignal& h);

}  // namespace tomox

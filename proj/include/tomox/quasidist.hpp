#pragma once

#include "tomox/field.hpp"
#include "tomox/interp.hpp"

namespace tomox {

// WV(tau, W) = integral f(tau + u/2) f*(tau - u/2) e^{-i W u} du.
PhasePlaneField wigner_ville(const SampledSignal& f, const Axis& tau_axis, const Axis& omega_axis,
                             Interp method = Interp::sinc);

// Q(mu, nu) = integral f*(t - nu/2) f(t + nu/2) e^{i mu t} dt (axis1 = mu).
PhasePlaneField ambiguity(const SampledSignal& f, const Axis& mu_axis, const Axis& nu_axis,
                          Interp method = Interp::sinc);

// Single ambiguity value at (mu, nu).
cd ambiguity_value(const SampledSignal& f, double mu, double nu, Interp method = Interp::sinc);

// Q(s, tau) = integral f*((t - tau/2)/sqrt(s)) f(sqrt(s)(t + tau/2)) dt (axis1 = s).
PhasePlaneField affine_quasidistribution(const SampledSignal& f, const Axis& s_axis,
                                         const Axis& tau_axis, Interp method = Interp::sinc);

cd affine_quasidistribution_value(const SampledSignal& f, double s, double tau,
                                  Interp method = Interp::sinc);

// Husimi-Kano Q(t, w) = |<beta|f>|^2 with beta = (t + i w)/sqrt(2) and the
// coherent state <x|beta> = pi^(-1/4) exp(-(x - sqrt2 Re b)^2/2
//                                         + i sqrt2 Im b x - i Re b Im b).
PhasePlaneField husimi_kano(const SampledSignal& f, const Axis& t_axis, const Axis& omega_axis);

cd coherent_state_overlap(const SampledSignal& f, double t, double omega);

}  // namespace tomox

#pragma once

#include <functional>

#include "tomox/affine.hpp"
#include "tomox/field.hpp"

namespace tomox {

// f1 = h + f, f2 = h + i f, f3 = h - f, f4 = h - i f (raw, unnormalized).
PolarizationQuad make_polarization_quad(const SampledSignal& h, const SampledSignal& f);

// Polarization reconstruction of <h| e^{iB} |f> from the four raw tomograms:
//   (1/4) integral e^{iX} [M_f1 - i M_f2 - M_f3 + i M_f4](X) dX.
// The tomograms are the unnormalized quadratic forms of the selected family
// at ray (mu, nu), all sampled on x_axis. A truncation warning is appended
// when x_axis fails to capture the mass of any combination row.
cd wavelet_from_tomograms(const SampledSignal& h, const SampledSignal& f, TomogramFamily family,
                          double mu, double nu, const Axis& x_axis,
                          std::vector<std::string>* warnings = nullptr);

// Direct matrix element <h| e^{iB(mu,nu)} |f> by quadrature of the
// disentangled operator action:
//   symplectic  B = mu t + nu w :   e^{i mu nu/2} integral h*(t) e^{i mu t} f(t+nu) dt
//   time_scale  B = mu t + nu D :   integral h*(t) e^{i mu c t} e^{nu/2} f(e^nu t) dt,
//                                   c = (e^nu - 1)/nu
//   freq_scale  B = mu w + nu D :   the mirror expression on unitary spectra.
cd generator_matrix_element(const SampledSignal& h, const SampledSignal& f, TomogramFamily family,
                            double mu, double nu);

// M(X) = (1/2 pi) integral Q(k) e^{-ikX} dk for a caller-supplied
// quasidistribution evaluator k -> Q^{(kB)}. The k grid extends to k_max or
// until |Q| decays below decay_floor; failure to decay is recorded as a
// truncation warning. k_step = 0 picks pi/(8 max|X|).
TomogramField tomogram_from_characteristic(const std::function<cd(double)>& q_eval,
                                           const Axis& x_axis, double k_max = 16.0,
                                           double decay_floor = 1e-8, double k_step = 0.0);

// integral M^{(B/p)}(X) e^{ipX} dX with M^{(B/p)}(X) = |p| M(p X) read off the
// stored row by interpolation.
cd quasidist_from_rescaled_tomogram(const TomogramField& field, double p, std::size_t row = 0);

// w(n, beta) = 1/(sqrt(pi) 2^n n!) | integral e^{-t^2/2 + i sqrt2 t Im beta}
// H_n(t) f(t + sqrt2 Re beta) dt |^2 for n = 0..n_max, with the Hermite
// normalization fused into the recurrence so large n stay finite.
PhotonTomogram photon_number_tomogram(const SampledSignal& f, cd beta, int n_max);

}  // namespace tomox

#pragma once

#include <vector>

#include "tomox/field.hpp"
#include "tomox/interp.hpp"

namespace tomox {

// M(X; mu, nu) = 1/(2 pi |nu|) | integral exp(i mu t^2/(2 nu) - i t X/nu) f(t) dt |^2,
// evaluated as chirp-multiply -> Fourier -> squared modulus. For |nu| below
// nu_eps * |(mu,nu)| the delta limit M(X) = |f(X/mu)|^2/|mu| is used.
TomogramField symplectic_tomogram(const SampledSignal& f, const RayParams& ray, const Axis& x_axis,
                                  Interp method = Interp::sinc);

// Rows at (mu, nu) = (cos theta, sin theta).
TomogramField tomogram_family(const SampledSignal& f, const std::vector<double>& thetas,
                              const Axis& x_axis, Interp method = Interp::sinc);

// Dense (X, mu) sampling at nu = t for every t on t_axis; input for
// invert_symplectic. Rays are ordered t-major, mu-minor.
TomogramField symplectic_inversion_data(const SampledSignal& f, const Axis& t_axis,
                                        const Axis& mu_axis, const Axis& x_axis);

// f(t) f*(0) = 1/(2 pi) integral M(X, mu, t) exp(i (X - mu t/2)) dX dmu,
// then division by sqrt(f(0) f*(0)) read off at t = 0. Returns the signal up
// to one global phase. The t grid is recovered from the distinct nu values.
SampledSignal invert_symplectic(const TomogramField& data);

// Radon transform of a Wigner-Ville field along X = mu tau + nu omega,
// normalized to match symplectic_tomogram.
TomogramField tomogram_from_wigner(const PhasePlaneField& wv, const RayParams& ray,
                                   const Axis& x_axis);

// integral M(X) e^{iX} dX over one row; equals the ambiguity-type
// quasidistribution at the row's ray. Appends a truncation warning when the
// row mass is below 0.999 of the expected unit mass.
cd quasidist_from_tomogram(const TomogramField& field, std::size_t row = 0,
                           std::vector<std::string>* warnings = nullptr);

// Generalized eigenfunction of mu t + nu w with eigenvalue X (|nu| must not
// be tiny), normalized to delta(X - X'). |<psi_X|f>|^2 reproduces the
// tomogram row pointwise.
SampledSignal symplectic_eigenfunction(const RayParams& ray, double X, const Axis& axis);

}  // namespace tomox

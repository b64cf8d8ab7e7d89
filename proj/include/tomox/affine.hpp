#pragma once

#include <utility>

#include "tomox/field.hpp"
#include "tomox/interp.hpp"

namespace tomox {

// Parameters for one affine-tomogram ray plus the spectrum axis of the
// tomogram variable s.
struct AffineParams {
    double mu = 0.0;
    double nu = 1.0;
    Axis s_axis;
};

// Logarithmic quadrature grid for the Mellin-type integrals. The integrable
// 1/sqrt|.| endpoint is truncated at exp(x_min) and restored by a closed-form
// tail term; the truncated quadratic mass is reported as a warning when it
// matters.
struct MellinGrid {
    double x_min = -8.0;
    double x_max = 4.0;
    std::size_t count = 2048;
};

// M(s; mu, nu) = 1/(2 pi |nu|) sum over the w>0 and w<0 branches of
// | integral f(w)/sqrt|w| exp(-i (mu w/nu - (s/nu) log|w|)) dw |^2,
// with f(w) the unitary spectrum F f / sqrt(2 pi). Evaluated by resampling
// onto a uniform grid in log|w| and one chirp-z transform per branch.
TomogramField freq_scale_tomogram(const SampledSignal& f, const AffineParams& params,
                                  const MellinGrid& grid = {});

// Mirror of freq_scale_tomogram with t in place of w and the opposite phase
// sign; branches t>0 and t<0.
TomogramField time_scale_tomogram(const SampledSignal& f, const AffineParams& params,
                                  const MellinGrid& grid = {});

// Signal recovery from the nu = 1 time-scale tomogram sampled densely in
// (s, mu). Uses the s-characteristic at phase e^{2is} and unwraps the
// resulting two-point products multiplicatively from the t = 0 anchor; the
// result carries one free global phase per sign branch, anchored to
// sqrt(|f(0)|^2) > 0.
SampledSignal invert_time_scale(const TomogramField& data, const Axis& out_axis);

// Dense (s, mu) sampling at nu = 1; input for invert_time_scale. Rays are
// ordered by mu.
TomogramField time_scale_inversion_data(const SampledSignal& f, const Axis& mu_axis,
                                        const Axis& s_axis, const MellinGrid& grid = {});

// (s, tau) -> (mu, nu): nu = log s, mu = tau log s/(s-1), with the removable
// singularity at s = 1 filled by mu = tau.
std::pair<double, double> affine_param_map(double s, double tau);

// Inverse: s = e^nu, tau = mu (s - 1)/log s.
std::pair<double, double> affine_param_map_inverse(double mu, double nu);

}  // namespace tomox

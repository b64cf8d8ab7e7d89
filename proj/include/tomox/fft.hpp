#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "tomox/axis.hpp"
#include "tomox/signal.hpp"

namespace tomox {

// In-place radix-2 FFT, n must be a power of two. inverse applies the
// conjugate transform without the 1/n factor.
void fft_pow2(std::vector<cd>& a, bool inverse);

// Chirp-z transform (Bluestein): X_k = sum_j x_j e^{i theta_a j} e^{i theta_w j k},
// k = 0..m-1. Phases are accumulated in long double so large j*k stay accurate.
std::vector<cd> czt(std::span<const cd> x, std::size_t m, long double theta_w, long double theta_a);

// Trapezoid approximation of integral f(t) e^{i sign w t} dt on a uniform
// frequency axis, evaluated for all frequencies by one chirp-z transform.
std::vector<cd> fourier_integral(std::span<const cd> values, const Axis& t_axis, int sign,
                                 const Axis& out_axis);

// Band-limited (periodic-sinc) resampling of a uniformly sampled signal onto
// another uniform grid; values outside the source span are zero (compact
// support model). Start/step/count describe the target grid.
std::vector<cd> resample_uniform(const SampledSignal& f, double start, double step,
                                 std::size_t count);

// e^{i phase} with long-double range reduction.
cd polar_ld(long double phase);

}  // namespace tomox

#pragma once

#include <complex>
#include <string>
#include <vector>

#include "tomox/axis.hpp"

namespace tomox {

using cd = std::complex<double>;

enum class Domain { time, frequency };

// Complex signal sampled on a uniform axis; the vector |f>.
struct SampledSignal {
    Axis axis;
    std::vector<cd> values;
    Domain domain = Domain::time;
    std::vector<std::string> warnings;  // non-fatal notes from producing ops
};

// Built-in analytic test signals. All are finite-energy on any finite axis.
//   gaussian        exp(-t^2/2)
//   gabor_wavelet   pi^(-1/2) exp(i w0 t) exp(-t^2/2)
//   mexican_hat     (1 - t^2) exp(-t^2/2)
//   chirp           exp(-t^2/2) exp(i (a t^2/2 + b t))
//   two_tone        exp(-t^2/2) (exp(i w1 t) + exp(i w2 t))
struct SignalKind {
    enum class Tag { gaussian, gabor_wavelet, mexican_hat, chirp, two_tone };
    Tag tag = Tag::gaussian;
    double p1 = 0.0;
    double p2 = 0.0;

    static SignalKind gaussian() { return {Tag::gaussian, 0, 0}; }
    static SignalKind gabor_wavelet(double w0) { return {Tag::gabor_wavelet, w0, 0}; }
    static SignalKind mexican_hat() { return {Tag::mexican_hat, 0, 0}; }
    static SignalKind chirp(double a, double b) { return {Tag::chirp, a, b}; }
    static SignalKind two_tone(double w1, double w2) { return {Tag::two_tone, w1, w2}; }

    std::string name() const;
};

// Parse "gaussian", "gabor:5", "chirp:0.5,1", "two_tone:2,4", "mexican_hat".
SignalKind parse_signal_kind(const std::string& text);

SampledSignal synthesize(const SignalKind& kind, const Axis& axis, bool normalize_flag = false);

// Trapezoid-rule <f|g>, conjugate-linear in the first argument.
cd inner_product(const SampledSignal& f, const SampledSignal& g);

double squared_norm(const SampledSignal& f);

SampledSignal normalize(const SampledSignal& f);

// H(w) = integral f(t) exp(-i w t) dt sampled on out_axis (angular frequency,
// no prefactor). Input must be time-domain.
SampledSignal fourier_transform(const SampledSignal& f, const Axis& out_axis);

// || f - e^{i phi} g || / || f || minimized over the global phase phi.
double phase_aligned_rel_l2(const SampledSignal& reference, const SampledSignal& candidate);

}  // namespace tomox

#pragma once

#include <span>
#include <vector>

#include "tomox/signal.hpp"

namespace tomox {

enum class Interp { sinc, linear };

// Scalar band-limited evaluation of a sampled signal at one off-grid point.
// sin(pi u) is hoisted out of the sample sum:
//   f(t) = sin(pi u)/pi * sum_j (-1)^j f_j / (u - j),  u = (t - t0)/dt.
// Zero outside the axis span.
class SincInterpolator {
  public:
    explicit SincInterpolator(const SampledSignal& f);
    cd operator()(double t) const;

  private:
    Axis axis_;
    std::vector<cd> alt_;  // (-1)^j f_j
};

cd linear_value_at(const SampledSignal& f, double t);

cd value_at(const SampledSignal& f, double t, Interp method = Interp::sinc);

// Catmull-Rom interpolation on a uniform real-valued grid, linear near the
// edges, zero outside.
double catmull_rom(std::span<const double> vals, double x0, double dx, double x);

}  // namespace tomox
